#ifndef EC_QUOTIENT_HPP
#define EC_QUOTIENT_HPP

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "ec/ideal_spec.hpp"
#include "ec/linalg.hpp"
#include "ec/monomial.hpp"
#include "ec/oracle.hpp"
#include "ec/polynomial.hpp"

namespace ec {

// Finite-dimensional graded quotient S/J with an ordered basis, linear normal
// form, and the four variable multiplication matrices. Family quotients use
// the monomial basis B and the yw -> xz rewrite; raw ideals use a Groebner
// staircase; extensions are chained quotients by ideal closures of new
// generators. Immutable after construction.
template <class F>
class ArtinQuotient {
public:
    using Elem = typename F::Elem;
    enum class RootKind { Family, Staircase };

    // --- factories ---

    static ArtinQuotient family(int n1, int n2, const F& K) {
        if (n1 < 2 || n2 < 2)
            throw std::invalid_argument("family quotient: need n1, n2 >= 2");
        ArtinQuotient Q(K);
        Q.spec_ = IdealSpec::family(n1, n2);
        Q.root_kind_ = RootKind::Family;
        Q.n1_ = n1;
        Q.n2_ = n2;
        Q.gens_ = family_generators(n1, n2, K);
        for (int u1 = 0; u1 < n1; ++u1)
            for (int u2 = 0; u2 + u1 < n1; ++u2)
                for (int u3 = 0; u3 < n2; ++u3)
                    for (int u4 = 0; u4 + u3 < n2; ++u4)
                        if (u2 == 0 || u4 == 0) Q.root_basis_.push_back(mono(u1, u2, u3, u4));
        sort_basis(Q.root_basis_);
        const long expect = static_cast<long>(n1) * n2 * (n1 + n2) / 2;
        if (static_cast<long>(Q.root_basis_.size()) != expect)
            throw std::logic_error("family quotient: basis size mismatch");
        Q.finish_root(true, true);
        return Q;
    }

    static ArtinQuotient raw(std::vector<Polynomial<F>> gens, const F& K, IdealSpec spec) {
        ArtinQuotient Q(K);
        Q.spec_ = std::move(spec);
        Q.root_kind_ = RootKind::Staircase;
        Q.gens_ = std::move(gens);
        Q.gb_ = std::make_shared<oracle::GroebnerBasis<F>>(oracle::buchberger(Q.gens_));
        Q.root_basis_ = oracle::staircase(*Q.gb_, 200000);
        bool graded = true, bigraded = true;
        for (const auto& g : Q.gens_) {
            if (!g.is_homogeneous()) graded = false;
            if (!g.is_bihomogeneous()) bigraded = false;
        }
        Q.finish_root(graded, bigraded);
        return Q;
    }

    // Builds the quotient a spec describes. Family-rooted specs whose chain
    // generators are all bihomogeneous become extension chains (one generator
    // per step); anything else goes through the staircase.
    static ArtinQuotient build(const IdealSpec& spec, const F& K) {
        if (spec.family_rooted()) {
            std::vector<Polynomial<F>> ext = chain_extension_generators(spec, K);
            bool chain_ok = true;
            for (const auto& g : ext)
                if (g.is_zero() || !g.is_bihomogeneous()) chain_ok = false;
            if (chain_ok) {
                ArtinQuotient Q = family(spec.n1, spec.n2, K);
                for (const auto& g : ext) Q = Q.extended({g});
                Q.spec_ = spec;
                return Q;
            }
        }
        return raw(expand_generators(spec, K), K, spec);
    }

    // S/(J + <gens>): closes the generator residues under the four
    // multiplication maps and quotients by the resulting subspace, one
    // generator per chain step. Generators already in J are skipped and
    // flagged.
    ArtinQuotient extended(const std::vector<Polynomial<F>>& gens) const {
        bool all_graded = graded_, all_bigraded = bigraded_;
        for (const auto& g : gens) {
            if (!g.is_homogeneous()) all_graded = false;
            if (!g.is_bihomogeneous()) all_bigraded = false;
        }
        if (!all_graded) {
            // no grading to preserve: rebuild from the full generator list
            std::vector<Polynomial<F>> all = gens_;
            for (const auto& g : gens) all.push_back(g);
            std::vector<std::string> texts;
            for (const auto& g : all) texts.push_back(g.str());
            return raw(std::move(all), K_, IdealSpec::raw_ideal(std::move(texts)));
        }
        ArtinQuotient cur = *this;
        for (const auto& g : gens) cur = cur.extended_one(g, all_bigraded);
        return cur;
    }

    // --- structure access ---

    const F& field() const { return K_; }
    const IdealSpec& spec() const { return spec_; }
    const std::vector<Polynomial<F>>& generators() const { return gens_; }
    int dim() const { return dim_; }
    bool graded() const { return graded_; }
    bool bigraded() const { return bigraded_; }
    int top_degree() const { return top_degree_; }
    RootKind root_kind() const { return root_kind_; }
    int family_n1() const { return n1_; }
    int family_n2() const { return n2_; }
    bool extension_was_noop() const { return noop_warning_; }

    const ArtinQuotient* parent() const { return parent_.get(); }
    const std::vector<Polynomial<F>>& step_generators() const { return step_gens_; }

    const Mat<F>& mult(int v) const { return mult_[v]; }
    int degree_of(int i) const { return deg_[i]; }
    std::pair<int, int> bidegree_of(int i) const { return bideg_[i]; }

    const std::vector<Monomial>& root_basis() const { return root_basis_; }
    const oracle::GroebnerBasis<F>* groebner() const { return gb_.get(); }

    // Index range [lo, hi) of the degree-d slice (basis is degree-sorted).
    std::pair<int, int> graded_slice(int d) const {
        require_graded();
        int lo = 0;
        while (lo < dim_ && deg_[lo] < d) ++lo;
        int hi = lo;
        while (hi < dim_ && deg_[hi] == d) ++hi;
        return {lo, hi};
    }
    std::vector<int> bigraded_slice(int d1, int d2) const {
        require_bigraded();
        std::vector<int> out;
        for (int i = 0; i < dim_; ++i)
            if (bideg_[i].first == d1 && bideg_[i].second == d2) out.push_back(i);
        return out;
    }

    // --- normal form and multiplication ---

    Vec<F> nf(const Polynomial<F>& p) const {
        Vec<F> r = nf_root(p);
        if (is_root_) return r;
        return matvec(proj_, r, K_);
    }

    Vec<F> unit_vector(int i) const {
        Vec<F> v(dim_, K_.zero());
        v[i] = K_.one();
        return v;
    }

    Vec<F> apply_variable(int v, const Vec<F>& u) const { return matvec(mult_[v], u, K_); }

    Vec<F> apply_monomial(const Monomial& m, Vec<F> u) const {
        for (int v = 0; v < kNumVars; ++v)
            for (int k = 0; k < m.e[v]; ++k) u = apply_variable(v, u);
        return u;
    }

    // Family roots act monomially: basis x monomial is one basis element or 0.
    bool has_monomial_action() const {
        return is_root_ && root_kind_ == RootKind::Family;
    }
    std::optional<int> family_mono_image(int i, const Monomial& m) const {
        std::optional<Monomial> r = family_reduce(root_basis_[i] * m);
        if (!r) return std::nullopt;
        return root_index_.at(*r);
    }

    Vec<F> apply_poly(const Polynomial<F>& h, const Vec<F>& u) const {
        Vec<F> out(dim_, K_.zero());
        if (has_monomial_action()) {
            for (const auto& t : h.terms()) {
                for (int i = 0; i < dim_; ++i) {
                    if (K_.is_zero(u[i])) continue;
                    std::optional<int> img = family_mono_image(i, t.first);
                    if (img) out[*img] = K_.addmul(out[*img], u[i], t.second);
                }
            }
            return out;
        }
        for (const auto& t : h.terms()) {
            Vec<F> mu = apply_monomial(t.first, u);
            for (int i = 0; i < dim_; ++i) out[i] = K_.addmul(out[i], mu[i], t.second);
        }
        return out;
    }

    // Representative polynomial of a coordinate vector, over root monomials.
    Polynomial<F> vector_to_poly(const Vec<F>& v) const {
        std::vector<typename Polynomial<F>::Term> terms;
        if (is_root_) {
            for (int i = 0; i < dim_; ++i)
                if (!K_.is_zero(v[i])) terms.push_back({root_basis_[i], v[i]});
        } else {
            for (int i = 0; i < dim_; ++i) {
                if (K_.is_zero(v[i])) continue;
                for (std::size_t r = 0; r < root_basis_.size(); ++r) {
                    const Elem& c = rep_.at(r, i);
                    if (!K_.is_zero(c))
                        terms.push_back({root_basis_[r], K_.mul(c, v[i])});
                }
            }
        }
        return Polynomial<F>(K_, std::move(terms));
    }
    Polynomial<F> representative(int i) const { return vector_to_poly(unit_vector(i)); }

    // --- socle ---

    std::vector<Vec<F>> socle() const {
        if (!graded_) {
            Mat<F> stacked(4 * dim_, dim_, K_);
            for (int v = 0; v < kNumVars; ++v)
                for (int r = 0; r < dim_; ++r)
                    for (int c = 0; c < dim_; ++c)
                        stacked.at(v * dim_ + r, c) = mult_[v].at(r, c);
            return kernel_basis(std::move(stacked), K_).vecs;
        }
        // degreewise: [v] maps the degree-d slice into degree d+1
        std::vector<Vec<F>> out;
        for (int d = 0; d <= top_degree_; ++d) {
            auto [lo, hi] = graded_slice(d);
            if (lo == hi) continue;
            auto [tlo, thi] = d + 1 <= top_degree_ ? graded_slice(d + 1)
                                                   : std::pair<int, int>{0, 0};
            Mat<F> M(4 * (thi - tlo), hi - lo, K_);
            for (int v = 0; v < kNumVars; ++v)
                for (int r = tlo; r < thi; ++r)
                    for (int c = lo; c < hi; ++c)
                        M.at(v * (thi - tlo) + (r - tlo), c - lo) = mult_[v].at(r, c);
            for (const auto& kv : kernel_basis(std::move(M), K_).vecs) {
                Vec<F> full(dim_, K_.zero());
                for (int c = lo; c < hi; ++c) full[c] = kv[c - lo];
                out.push_back(std::move(full));
            }
        }
        return out;
    }

    // Soc Q == the bidegree (n1-1, n2-1) slice? Family-rooted chains only.
    bool socle_condition() const {
        if (n1_ == 0)
            throw std::invalid_argument("socle_condition: spec does not carry (n1,n2)");
        require_bigraded();
        std::vector<int> slice = bigraded_slice(n1_ - 1, n2_ - 1);
        std::vector<Vec<F>> soc = socle();
        if (soc.size() != slice.size()) return false;
        std::vector<bool> in_slice(dim_, false);
        for (int i : slice) in_slice[i] = true;
        for (const auto& s : soc)
            for (int i = 0; i < dim_; ++i)
                if (!K_.is_zero(s[i]) && !in_slice[i]) return false;
        return true;
    }

private:
    explicit ArtinQuotient(const F& K) : K_(K) {}

    static void sort_basis(std::vector<Monomial>& basis) {
        std::sort(basis.begin(), basis.end(), [](const Monomial& a, const Monomial& b) {
            if (a.degree() != b.degree()) return a.degree() < b.degree();
            return grevlex_greater(a, b);
        });
    }

    void require_graded() const {
        if (!graded_) throw std::logic_error("quotient is not graded");
    }
    void require_bigraded() const {
        if (!bigraded_) throw std::logic_error("quotient is not bigraded");
    }

    // Family rewrite: yw ~ xz, then truncate at (n1, n2).
    std::optional<Monomial> family_reduce(Monomial m) const {
        int t = std::min<int>(m.e[1], m.e[3]);
        if (t > 0) {
            m.e[0] = static_cast<std::uint16_t>(m.e[0] + t);
            m.e[1] = static_cast<std::uint16_t>(m.e[1] - t);
            m.e[2] = static_cast<std::uint16_t>(m.e[2] + t);
            m.e[3] = static_cast<std::uint16_t>(m.e[3] - t);
        }
        if (m.e[0] + m.e[1] >= n1_ || m.e[2] + m.e[3] >= n2_) return std::nullopt;
        return m;
    }

    Vec<F> nf_root(const Polynomial<F>& p) const {
        if (!K_.same(p.field()))
            throw std::invalid_argument("nf: polynomial over a different field");
        Vec<F> v(root_basis_.size(), K_.zero());
        if (root_kind_ == RootKind::Family) {
            for (const auto& t : p.terms()) {
                std::optional<Monomial> m = family_reduce(t.first);
                if (!m) continue;
                v[root_index_.at(*m)] = K_.add(v[root_index_.at(*m)], t.second);
            }
        } else {
            Polynomial<F> r = oracle::oracle_normal_form(p, *gb_);
            for (const auto& t : r.terms()) v[root_index_.at(t.first)] = t.second;
        }
        return v;
    }

    void finish_root(bool graded, bool bigraded) {
        is_root_ = true;
        dim_ = static_cast<int>(root_basis_.size());
        graded_ = graded;
        bigraded_ = bigraded;
        root_index_.reserve(root_basis_.size());
        for (int i = 0; i < dim_; ++i) root_index_[root_basis_[i]] = i;
        deg_.resize(dim_);
        bideg_.resize(dim_);
        top_degree_ = 0;
        for (int i = 0; i < dim_; ++i) {
            deg_[i] = root_basis_[i].degree();
            bideg_[i] = root_basis_[i].bidegree();
            top_degree_ = std::max(top_degree_, deg_[i]);
        }
        for (int v = 0; v < kNumVars; ++v) {
            mult_[v] = Mat<F>(dim_, dim_, K_);
            for (int c = 0; c < dim_; ++c) {
                Vec<F> col = nf_root(Polynomial<F>::monomial(K_, root_basis_[c] * var_mono(v), K_.one()));
                for (int r = 0; r < dim_; ++r) mult_[v].at(r, c) = col[r];
            }
        }
        check_invariants();
    }

    ArtinQuotient extended_one(const Polynomial<F>& g, bool keep_bigraded) const {
        Vec<F> res = nf(g);
        bool zero = true;
        for (const auto& c : res)
            if (!K_.is_zero(c)) zero = false;
        if (zero) {
            ArtinQuotient copy = *this;
            copy.noop_warning_ = true;
            copy.spec_ = spec_.with_extras({g.str()});
            return copy;
        }

        // ideal closure of the residue under the four multiplication maps
        RowSpace<F> W(dim_, K_);
        W.insert(res);
        std::size_t processed = 0;
        std::vector<Vec<F>> queue{res};
        while (processed < queue.size()) {
            Vec<F> cur = queue[processed++];
            for (int v = 0; v < kNumVars; ++v) {
                Vec<F> next = apply_variable(v, cur);
                if (W.insert(next)) queue.push_back(next);
            }
        }

        const auto& pivots = W.pivots();
        std::vector<bool> is_pivot(dim_, false);
        for (auto p : pivots) is_pivot[p] = true;
        std::vector<int> complement;
        for (int i = 0; i < dim_; ++i)
            if (!is_pivot[i]) complement.push_back(i);

        ArtinQuotient nq(K_);
        nq.spec_ = spec_.with_extras({g.str()});
        nq.root_kind_ = root_kind_;
        nq.n1_ = n1_;
        nq.n2_ = n2_;
        nq.gb_ = gb_;
        nq.root_basis_ = root_basis_;
        nq.root_index_ = root_index_;
        nq.gens_ = gens_;
        nq.gens_.push_back(g);
        nq.parent_ = std::make_shared<const ArtinQuotient>(*this);
        nq.step_gens_ = {g};
        nq.is_root_ = false;
        nq.dim_ = static_cast<int>(complement.size());
        nq.graded_ = graded_;
        nq.bigraded_ = keep_bigraded && bigraded_;

        // projection along the closure: reduce by W, read off complement coords
        Mat<F> proj_step(nq.dim_, dim_, K_);
        for (int i = 0; i < nq.dim_; ++i) proj_step.at(i, complement[i]) = K_.one();
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            const Vec<F>& wrow = W.rows()[r];
            for (int i = 0; i < nq.dim_; ++i)
                proj_step.at(i, pivots[r]) = K_.neg(wrow[complement[i]]);
        }

        if (is_root_) {
            nq.proj_ = proj_step;
            nq.rep_ = Mat<F>(dim_, nq.dim_, K_);
            for (int i = 0; i < nq.dim_; ++i) nq.rep_.at(complement[i], i) = K_.one();
        } else {
            nq.proj_ = matmul(proj_step, proj_, K_);
            nq.rep_ = Mat<F>(root_basis_.size(), nq.dim_, K_);
            for (int i = 0; i < nq.dim_; ++i)
                for (std::size_t r = 0; r < root_basis_.size(); ++r)
                    nq.rep_.at(r, i) = rep_.at(r, complement[i]);
        }

        nq.deg_.resize(nq.dim_);
        nq.bideg_.resize(nq.dim_);
        nq.top_degree_ = 0;
        for (int i = 0; i < nq.dim_; ++i) {
            nq.deg_[i] = deg_[complement[i]];
            nq.bideg_[i] = bideg_[complement[i]];
            nq.top_degree_ = std::max(nq.top_degree_, nq.deg_[i]);
        }

        for (int v = 0; v < kNumVars; ++v) {
            nq.mult_[v] = Mat<F>(nq.dim_, nq.dim_, K_);
            for (int c = 0; c < nq.dim_; ++c) {
                Vec<F> col(dim_, K_.zero());
                for (int r = 0; r < dim_; ++r) col[r] = mult_[v].at(r, complement[c]);
                W.reduce(col);
                for (int r = 0; r < nq.dim_; ++r) nq.mult_[v].at(r, c) = col[complement[r]];
            }
        }
        nq.check_invariants();
        return nq;
    }

    void check_invariants() const {
        // nf kills every generator
        for (const auto& g : gens_) {
            Vec<F> v = nf(g);
            for (const auto& c : v)
                if (!K_.is_zero(c))
                    throw std::logic_error("quotient: generator has nonzero normal form");
        }
        // multiplication matrices commute pairwise
        for (int u = 0; u < kNumVars; ++u) {
            for (int v = u + 1; v < kNumVars; ++v) {
                for (int i = 0; i < dim_; ++i) {
                    Vec<F> ei = unit_vector(i);
                    Vec<F> a = apply_variable(u, apply_variable(v, ei));
                    Vec<F> b = apply_variable(v, apply_variable(u, ei));
                    for (int r = 0; r < dim_; ++r)
                        if (!K_.eq(a[r], b[r]))
                            throw std::logic_error("quotient: multiplication matrices do not commute");
                }
            }
        }
    }

    F K_;
    IdealSpec spec_;
    std::vector<Polynomial<F>> gens_;
    RootKind root_kind_ = RootKind::Family;
    int n1_ = 0, n2_ = 0;
    std::shared_ptr<const oracle::GroebnerBasis<F>> gb_;
    std::vector<Monomial> root_basis_;
    std::unordered_map<Monomial, int, MonomialHash> root_index_;
    std::shared_ptr<const ArtinQuotient> parent_;
    std::vector<Polynomial<F>> step_gens_;
    bool noop_warning_ = false;
    bool is_root_ = true;
    int dim_ = 0;
    Mat<F> proj_, rep_;
    std::array<Mat<F>, 4> mult_;
    std::vector<int> deg_;
    std::vector<std::pair<int, int>> bideg_;
    bool graded_ = true, bigraded_ = true;
    int top_degree_ = 0;
};

// --- spec-level operation names ---

template <class F>
ArtinQuotient<F> build_family_quotient(int n1, int n2, const F& K) {
    return ArtinQuotient<F>::family(n1, n2, K);
}

template <class F>
ArtinQuotient<F> extend_quotient(const ArtinQuotient<F>& Q,
                                 const std::vector<Polynomial<F>>& gens) {
    return Q.extended(gens);
}

template <class F>
std::vector<Vec<F>> socle(const ArtinQuotient<F>& Q) {
    return Q.socle();
}

template <class F>
bool check_socle_condition(const ArtinQuotient<F>& Q) {
    return Q.socle_condition();
}

// Decomposition p = sum_{0<i<n1} y^i p_{i,0} + sum_{0<j<n2} w^j p_{0,j} + p_{0,0}
// with each part a polynomial in x,z and disjoint supports.
template <class F>
struct Decomposition {
    std::map<int, Polynomial<F>> y_parts;  // i -> p_{i,0}
    std::map<int, Polynomial<F>> w_parts;  // j -> p_{0,j}
    Polynomial<F> p00;
};

template <class F>
Decomposition<F> decompose(const ArtinQuotient<F>& Q, const Polynomial<F>& p) {
    if (Q.parent() != nullptr || Q.root_kind() != ArtinQuotient<F>::RootKind::Family)
        throw std::invalid_argument("decompose: expects a plain family quotient");
    const F& K = Q.field();
    Vec<F> v = Q.nf(p);
    Decomposition<F> d{{}, {}, Polynomial<F>::zero(K)};
    for (int i = 0; i < Q.dim(); ++i) {
        if (K.is_zero(v[i])) continue;
        Monomial m = Q.root_basis()[i];
        Monomial xz = mono(m.e[0], 0, m.e[2], 0);
        Polynomial<F> part = Polynomial<F>::monomial(K, xz, v[i]);
        if (m.e[1] > 0) {
            auto it = d.y_parts.try_emplace(m.e[1], Polynomial<F>::zero(K)).first;
            it->second = it->second + part;
        } else if (m.e[3] > 0) {
            auto it = d.w_parts.try_emplace(m.e[3], Polynomial<F>::zero(K)).first;
            it->second = it->second + part;
        } else {
            d.p00 = d.p00 + part;
        }
    }
    return d;
}

// Homogeneous generators of the annihilator ideal Ann_Q(s) = (J : s)/J,
// found degree by degree via graded Nakayama. Lifted to polynomials in S.
template <class F>
std::vector<Polynomial<F>> annihilator_generators(const ArtinQuotient<F>& Q,
                                                  const Polynomial<F>& s) {
    if (!Q.graded() || !s.is_homogeneous())
        throw std::invalid_argument("annihilator_generators: homogeneous graded data required");
    const F& K = Q.field();
    const int dim = Q.dim();
    Vec<F> sbar = Q.nf(s);

    // columns of multiplication-by-s
    Polynomial<F> s_rep = Q.vector_to_poly(sbar);
    std::vector<Vec<F>> s_cols(dim);
    for (int c = 0; c < dim; ++c) s_cols[c] = Q.apply_poly(s_rep, Q.unit_vector(c));

    std::vector<Polynomial<F>> gens;
    RowSpace<F> reached(dim, K);        // span of the ideal generated so far
    std::vector<Vec<F>> prev_kernel;    // annihilator slice in the previous degree
    for (int d = 0; d <= Q.top_degree(); ++d) {
        auto [lo, hi] = Q.graded_slice(d);
        if (lo == hi) {
            prev_kernel.clear();
            continue;
        }
        // kernel of mult-by-s restricted to the slice
        Mat<F> M(dim, hi - lo, K);
        for (int c = lo; c < hi; ++c)
            for (int r = 0; r < dim; ++r) M.at(r, c - lo) = s_cols[c][r];
        KernelBasis<F> kb = kernel_basis(std::move(M), K);
        std::vector<Vec<F>> kernel;
        for (const auto& kv : kb.vecs) {
            Vec<F> full(dim, K.zero());
            for (int c = lo; c < hi; ++c) full[c] = kv[c - lo];
            kernel.push_back(std::move(full));
        }
        for (const auto& k : prev_kernel)
            for (int v = 0; v < kNumVars; ++v) reached.insert(Q.apply_variable(v, k));
        for (const auto& k : kernel) {
            if (reached.insert(k)) gens.push_back(Q.vector_to_poly(k));
        }
        prev_kernel = std::move(kernel);
    }
    return gens;
}

}  // namespace ec

#endif
