#ifndef EC_SYZYGY_HPP
#define EC_SYZYGY_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ec/linalg.hpp"
#include "ec/oracle.hpp"
#include "ec/quotient.hpp"

namespace ec {

// One generating syzygy: cofactors h_k (aligned with the generator list)
// with sum h_k g_k = 0 in S, verified exactly at construction.
template <class F>
struct SyzygyGenerator {
    std::string label;
    std::vector<Polynomial<F>> cofactors;
    int degree = 0;                      // |h_k| + |g_k|, common over k
    std::pair<int, int> bidegree{0, 0};  // meaningful when bihomogeneous
    bool bihomogeneous = false;
};

template <class F>
void verify_syzygy(const std::vector<Polynomial<F>>& cofactors,
                   const std::vector<Polynomial<F>>& gens, const F& K,
                   const std::string& label) {
    Polynomial<F> acc = Polynomial<F>::zero(K);
    for (std::size_t k = 0; k < gens.size(); ++k) acc = acc + cofactors[k] * gens[k];
    if (!acc.is_zero())
        throw std::logic_error("syzygy " + label + " does not expand to zero");
}

// If p lies in <gens>, cofactors h with sum h_k g_k = p (via Groebner division
// against a basis computed here); otherwise nullopt.
template <class F>
std::optional<std::vector<Polynomial<F>>> membership_certificate(
    const Polynomial<F>& p, const std::vector<Polynomial<F>>& gens) {
    oracle::GroebnerBasis<F> G = oracle::buchberger(gens);
    return oracle::cofactors_of(p, G);
}

template <class F>
std::optional<std::vector<Polynomial<F>>> membership_certificate(
    const Polynomial<F>& p, const oracle::GroebnerBasis<F>& G) {
    return oracle::cofactors_of(p, G);
}

namespace detail {

// Splits a cofactor tuple into its bihomogeneous components; each component
// of a syzygy is again a syzygy because the generators are bihomogeneous.
template <class F>
std::vector<std::vector<Polynomial<F>>> split_bihomogeneous(
    const std::vector<Polynomial<F>>& cof, const std::vector<Polynomial<F>>& gens,
    const F& K) {
    std::map<std::pair<int, int>, std::vector<Polynomial<F>>> comps;
    for (std::size_t k = 0; k < gens.size(); ++k) {
        if (cof[k].is_zero()) continue;
        auto gb = gens[k].bidegree();
        if (!gb) throw std::logic_error("split_bihomogeneous: generator not bihomogeneous");
        for (const auto& t : cof[k].terms()) {
            auto [a, b] = t.first.bidegree();
            std::pair<int, int> key{a + gb->first, b + gb->second};
            auto it = comps.try_emplace(key, std::vector<Polynomial<F>>(gens.size(),
                                                                        Polynomial<F>::zero(K)))
                          .first;
            it->second[k] =
                it->second[k] + Polynomial<F>::monomial(K, t.first, t.second);
        }
    }
    std::vector<std::vector<Polynomial<F>>> out;
    for (auto& kv : comps) out.push_back(std::move(kv.second));
    return out;
}

}  // namespace detail

// Generating syzygies of the generator tuple of a family-rooted quotient:
// the Eliahou-Kervaire syzygies of the two power ideals, the mixed (q; .)
// syzygies, and for each chain generator s one syzygy (s; h) per generator h
// of the annihilator of s in the preceding quotient, certified by Groebner
// division. Together with the Koszul relations these generate the first
// syzygy module.
template <class F>
std::vector<SyzygyGenerator<F>> structured_syzygies(const ArtinQuotient<F>& Q) {
    const F& K = Q.field();
    if (Q.root_kind() != ArtinQuotient<F>::RootKind::Family)
        throw std::invalid_argument("structured_syzygies: family-rooted quotient required");

    std::vector<const ArtinQuotient<F>*> chain;
    for (const ArtinQuotient<F>* p = &Q; p != nullptr; p = p->parent()) chain.push_back(p);
    std::reverse(chain.begin(), chain.end());

    const std::vector<Polynomial<F>>& gens = Q.generators();
    const int n1 = Q.family_n1(), n2 = Q.family_n2();
    const std::size_t qpos = static_cast<std::size_t>(n1 + n2 + 2);

    std::vector<SyzygyGenerator<F>> out;
    auto push = [&](std::string label, std::vector<Polynomial<F>> cof) {
        verify_syzygy(cof, gens, K, label);
        SyzygyGenerator<F> s;
        s.label = std::move(label);
        s.bihomogeneous = true;
        for (std::size_t k = 0; k < gens.size(); ++k) {
            if (cof[k].is_zero()) continue;
            auto cb = cof[k].bidegree();
            auto gb = gens[k].bidegree();
            if (!cb || !gb) throw std::logic_error("structured syzygy not bihomogeneous");
            s.bidegree = {cb->first + gb->first, cb->second + gb->second};
            s.degree = s.bidegree.first + s.bidegree.second;
        }
        s.cofactors = std::move(cof);
        out.push_back(std::move(s));
    };
    auto zero_cof = [&] {
        return std::vector<Polynomial<F>>(gens.size(), Polynomial<F>::zero(K));
    };
    auto x = Polynomial<F>::variable(K, 0), y = Polynomial<F>::variable(K, 1);
    auto z = Polynomial<F>::variable(K, 2), w = Polynomial<F>::variable(K, 3);

    // y (x^{n1-k+1} y^{k-1};) - x (x^{n1-k} y^k;)
    for (int k = 1; k <= n1; ++k) {
        auto cof = zero_cof();
        cof[k - 1] = y;
        cof[k] = -x;
        push("(x^{" + std::to_string(n1 - k) + "}y^{" + std::to_string(k) + "}; x)",
             std::move(cof));
    }
    // w (z^{n2-l+1} w^{l-1};) - z (z^{n2-l} w^l;)
    for (int l = 1; l <= n2; ++l) {
        auto cof = zero_cof();
        cof[n1 + 1 + l - 1] = w;
        cof[n1 + 1 + l] = -z;
        push("(z^{" + std::to_string(n2 - l) + "}w^{" + std::to_string(l) + "}; z)",
             std::move(cof));
    }
    // z (x^{n1-k+1} y^{k-1};) - w (x^{n1-k} y^k;) - x^{n1-k} y^{k-1} (q;)
    for (int k = 1; k <= n1; ++k) {
        auto cof = zero_cof();
        cof[k - 1] = z;
        cof[k] = -w;
        cof[qpos] = -Polynomial<F>::monomial(K, mono(n1 - k, k - 1, 0, 0), K.one());
        push("(q; x^{" + std::to_string(n1 - k) + "}y^{" + std::to_string(k - 1) + "})",
             std::move(cof));
    }
    // x (z^{n2-l+1} w^{l-1};) - y (z^{n2-l} w^l;) - z^{n2-l} w^{l-1} (q;)
    for (int l = 1; l <= n2; ++l) {
        auto cof = zero_cof();
        cof[n1 + 1 + l - 1] = x;
        cof[n1 + 1 + l] = -y;
        cof[qpos] = -Polynomial<F>::monomial(K, mono(0, 0, n2 - l, l - 1), K.one());
        push("(q; z^{" + std::to_string(n2 - l) + "}w^{" + std::to_string(l - 1) + "})",
             std::move(cof));
    }

    // chain steps: one syzygy per annihilator generator of each added s
    std::size_t pos = qpos + 1;
    for (std::size_t step = 1; step < chain.size(); ++step) {
        const ArtinQuotient<F>& prev = *chain[step - 1];
        const std::vector<Polynomial<F>>& prev_gens = prev.generators();
        std::optional<oracle::GroebnerBasis<F>> G;  // lazy per step
        for (const auto& s : chain[step]->step_generators()) {
            std::vector<Polynomial<F>> anns = annihilator_generators(prev, s);
            for (const auto& h : anns) {
                Polynomial<F> hs = h * s;
                if (!G) G = oracle::buchberger(prev_gens);
                auto cert = oracle::cofactors_of(hs, *G);
                if (!cert)
                    throw std::runtime_error(
                        "structured_syzygies: membership certificate not found for " +
                        hs.str());
                std::vector<Polynomial<F>> cof = zero_cof();
                for (std::size_t kk = 0; kk < prev_gens.size(); ++kk) cof[kk] = -(*cert)[kk];
                cof[pos] = h;
                // certificates may mix bidegrees; each component is a syzygy
                verify_syzygy(cof, gens, K, "(s_" + std::to_string(step) + "; ...)");
                for (auto& comp : detail::split_bihomogeneous(cof, gens, K)) {
                    push("(s_" + std::to_string(step) + "; " + h.str() + ")",
                         std::move(comp));
                }
            }
            ++pos;
        }
    }
    return out;
}

// Degree-d slice of the first syzygy module by linear algebra: the kernel of
// (+)_k S_{d-|g_k|} -> S_d. Carries the coordinate layout so callers can work
// with vectors.
template <class F>
struct SliceContext {
    int degree = 0;
    std::vector<std::vector<Monomial>> holes;  // per generator
    std::vector<std::size_t> offsets;
    std::size_t hdim = 0;
    KernelBasis<F> kernel;

    std::vector<Polynomial<F>> tuple_of(const Vec<F>& v, const F& K) const {
        std::vector<Polynomial<F>> out;
        for (std::size_t k = 0; k < holes.size(); ++k) {
            std::vector<typename Polynomial<F>::Term> terms;
            for (std::size_t i = 0; i < holes[k].size(); ++i)
                if (!K.is_zero(v[offsets[k] + i])) terms.push_back({holes[k][i], v[offsets[k] + i]});
            out.push_back(Polynomial<F>(K, std::move(terms)));
        }
        return out;
    }
};

template <class F>
SliceContext<F> build_slice_context(const std::vector<Polynomial<F>>& gens, int d, const F& K) {
    SliceContext<F> ctx;
    ctx.degree = d;
    for (const auto& g : gens) {
        if (!g.is_homogeneous() || g.is_zero())
            throw std::invalid_argument("syzygy slice: homogeneous nonzero generators required");
        ctx.offsets.push_back(ctx.hdim);
        ctx.holes.push_back(monomials_of_degree(d - g.degree()));
        ctx.hdim += ctx.holes.back().size();
    }
    std::vector<Monomial> target = monomials_of_degree(d);
    if (ctx.hdim == 0 || target.empty()) return ctx;
    Mat<F> M(target.size(), ctx.hdim, K);
    for (std::size_t k = 0; k < gens.size(); ++k) {
        for (std::size_t i = 0; i < ctx.holes[k].size(); ++i) {
            std::size_t col = ctx.offsets[k] + i;
            for (const auto& t : gens[k].terms()) {
                Monomial prod = t.first * ctx.holes[k][i];
                auto it = std::lower_bound(target.begin(), target.end(), prod, grevlex_greater);
                std::size_t row = static_cast<std::size_t>(it - target.begin());
                M.at(row, col) = K.add(M.at(row, col), t.second);
            }
        }
    }
    ctx.kernel = kernel_basis(std::move(M), K);
    return ctx;
}

template <class F>
struct SyzygySlice {
    int degree = 0;
    std::vector<std::vector<Polynomial<F>>> basis;
};

template <class F>
SyzygySlice<F> syzygy_slice(const std::vector<Polynomial<F>>& gens, int d, const F& K) {
    SliceContext<F> ctx = build_slice_context(gens, d, K);
    SyzygySlice<F> out;
    out.degree = d;
    for (const auto& v : ctx.kernel.vecs) out.basis.push_back(ctx.tuple_of(v, K));
    return out;
}

// Spanning vectors of the Koszul subspace m (g_j e_i - g_i e_j) of degree d,
// in the coordinate layout of ctx.
template <class F>
std::vector<Vec<F>> koszul_vectors(const std::vector<Polynomial<F>>& gens,
                                   const SliceContext<F>& ctx, const F& K) {
    std::vector<Vec<F>> out;
    const int d = ctx.degree;
    auto put = [&](Vec<F>& vec, std::size_t k, const Polynomial<F>& h) {
        for (const auto& t : h.terms()) {
            auto it = std::lower_bound(ctx.holes[k].begin(), ctx.holes[k].end(), t.first,
                                       grevlex_greater);
            vec[ctx.offsets[k] + static_cast<std::size_t>(it - ctx.holes[k].begin())] =
                K.add(vec[ctx.offsets[k] + (it - ctx.holes[k].begin())], t.second);
        }
    };
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            int rem = d - gens[i].degree() - gens[j].degree();
            if (rem < 0) continue;
            for (const Monomial& m : monomials_of_degree(rem)) {
                Vec<F> vec(ctx.hdim, K.zero());
                put(vec, i, gens[j].times_monomial(m, K.one()));
                put(vec, j, gens[i].times_monomial(m, K.neg(K.one())));
                out.push_back(std::move(vec));
            }
        }
    }
    return out;
}

// Basis of the Koszul subspace inside syzygy_slice(gens, d), as tuples.
template <class F>
std::vector<std::vector<Polynomial<F>>> koszul_subspace(const std::vector<Polynomial<F>>& gens,
                                                        int d, const F& K) {
    SliceContext<F> ctx = build_slice_context(gens, d, K);
    std::vector<std::vector<Polynomial<F>>> out;
    if (ctx.hdim == 0) return out;
    RowSpace<F> span(ctx.hdim, K);
    for (auto& v : koszul_vectors(gens, ctx, K)) {
        Vec<F> copy = v;
        if (span.insert(std::move(v))) out.push_back(ctx.tuple_of(copy, K));
    }
    return out;
}

}  // namespace ec

#endif
