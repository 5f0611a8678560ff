#ifndef EC_ORACLE_HPP
#define EC_ORACLE_HPP

// Brute-force cross-validation machinery: a minimal Buchberger engine with
// cofactor tracking, division normal forms, staircase bases, and a
// from-scratch Hom computation. Deliberately shares only the poly layer with
// the production modules and carries its own small Gaussian elimination.

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ec/monomial.hpp"
#include "ec/polynomial.hpp"

namespace ec::oracle {

template <class F>
struct GroebnerBasis {
    F K;
    std::vector<Polynomial<F>> input;
    std::vector<Polynomial<F>> basis;  // reduced, autoreduced, monic
    // basis[i] == sum_j cofactors[i][j] * input[j]
    std::vector<std::vector<Polynomial<F>>> cofactors;
};

template <class F>
struct DivisionResult {
    Polynomial<F> remainder;
    std::vector<Polynomial<F>> quotients;  // over G.basis
};

// Multivariate division with quotient tracking (grevlex, first divisor wins).
template <class F>
DivisionResult<F> divide(const Polynomial<F>& p, const std::vector<Polynomial<F>>& divisors,
                         const F& K) {
    DivisionResult<F> res{Polynomial<F>::zero(K),
                          std::vector<Polynomial<F>>(divisors.size(), Polynomial<F>::zero(K))};
    Polynomial<F> rest = p;
    std::vector<typename Polynomial<F>::Term> rem_terms;
    while (!rest.is_zero()) {
        const auto& lt = rest.leading_term();
        bool reduced = false;
        for (std::size_t i = 0; i < divisors.size(); ++i) {
            if (divisors[i].is_zero()) continue;
            const auto& dlt = divisors[i].leading_term();
            if (!dlt.first.divides(lt.first)) continue;
            Monomial q = dlt.first.quotient_of(lt.first);
            typename F::Elem c = K.div(lt.second, dlt.second);
            rest = rest - divisors[i].times_monomial(q, c);
            res.quotients[i] =
                res.quotients[i] + Polynomial<F>::monomial(K, q, c);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem_terms.push_back(lt);
            rest = rest - Polynomial<F>::monomial(K, lt.first, lt.second);
        }
    }
    res.remainder = Polynomial<F>(K, std::move(rem_terms));
    return res;
}

template <class F>
GroebnerBasis<F> buchberger(std::vector<Polynomial<F>> gens, std::size_t pair_limit = 200000) {
    if (gens.empty()) throw std::invalid_argument("buchberger: empty generator list");
    const F K = gens.front().field();
    const std::size_t n_in = gens.size();

    std::vector<Polynomial<F>> basis;
    std::vector<std::vector<Polynomial<F>>> cof;
    for (std::size_t i = 0; i < n_in; ++i) {
        if (gens[i].is_zero()) continue;
        std::vector<Polynomial<F>> row(n_in, Polynomial<F>::zero(K));
        row[i] = Polynomial<F>::constant(K, K.one());
        basis.push_back(gens[i]);
        cof.push_back(std::move(row));
    }
    if (basis.empty()) throw std::invalid_argument("buchberger: all generators are zero");

    auto add_cof = [&](const std::vector<Polynomial<F>>& a, const std::vector<Polynomial<F>>& b,
                       const Monomial& m, typename F::Elem c) {
        // a - m*c*b
        std::vector<Polynomial<F>> out;
        out.reserve(n_in);
        for (std::size_t j = 0; j < n_in; ++j) out.push_back(a[j] - b[j].times_monomial(m, c));
        return out;
    };

    struct Pair {
        std::size_t i, j;
        int deg;
    };
    auto push_pairs = [&](std::vector<Pair>& pairs, std::size_t upto) {
        for (std::size_t i = 0; i < upto; ++i)
            pairs.push_back({i, upto, lcm(basis[i].leading_term().first,
                                          basis[upto].leading_term().first)
                                          .degree()});
    };
    std::vector<Pair> pairs;
    for (std::size_t j = 1; j < basis.size(); ++j) push_pairs(pairs, j);

    std::size_t processed = 0;
    while (!pairs.empty()) {
        if (++processed > pair_limit)
            throw std::runtime_error("buchberger: pair limit exceeded");
        // normal strategy: lowest lcm degree first
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k)
            if (pairs[k].deg < pairs[best].deg) best = k;
        Pair pr = pairs[best];
        pairs.erase(pairs.begin() + best);

        const Monomial lti = basis[pr.i].leading_term().first;
        const Monomial ltj = basis[pr.j].leading_term().first;
        if (gcd(lti, ltj).is_one()) continue;  // coprime criterion

        Monomial L = lcm(lti, ltj);
        Monomial qi = lti.quotient_of(L), qj = ltj.quotient_of(L);
        typename F::Elem ci = K.inv(basis[pr.i].leading_term().second);
        typename F::Elem cj = K.inv(basis[pr.j].leading_term().second);
        Polynomial<F> s =
            basis[pr.i].times_monomial(qi, ci) - basis[pr.j].times_monomial(qj, cj);
        std::vector<Polynomial<F>> scof(n_in, Polynomial<F>::zero(K));
        for (std::size_t t = 0; t < n_in; ++t)
            scof[t] = cof[pr.i][t].times_monomial(qi, ci) - cof[pr.j][t].times_monomial(qj, cj);

        // full reduction with cofactor tracking
        Polynomial<F> rest = s;
        std::vector<typename Polynomial<F>::Term> rem_terms;
        while (!rest.is_zero()) {
            const auto lt = rest.leading_term();
            bool hit = false;
            for (std::size_t b = 0; b < basis.size(); ++b) {
                const auto& dlt = basis[b].leading_term();
                if (!dlt.first.divides(lt.first)) continue;
                Monomial q = dlt.first.quotient_of(lt.first);
                typename F::Elem c = K.div(lt.second, dlt.second);
                rest = rest - basis[b].times_monomial(q, c);
                scof = add_cof(scof, cof[b], q, c);
                hit = true;
                break;
            }
            if (!hit) {
                rem_terms.push_back(lt);
                rest = rest - Polynomial<F>::monomial(K, lt.first, lt.second);
            }
        }
        Polynomial<F> red(K, std::move(rem_terms));
        if (red.is_zero()) continue;
        basis.push_back(red);
        cof.push_back(std::move(scof));
        push_pairs(pairs, basis.size() - 1);
    }

    // drop elements whose leading term another one divides
    std::vector<bool> keep(basis.size(), true);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < basis.size() && keep[i]; ++j) {
            if (i == j || !keep[j]) continue;
            const Monomial& li = basis[i].leading_term().first;
            const Monomial& lj = basis[j].leading_term().first;
            if (lj.divides(li) && !(li == lj && j > i)) keep[i] = false;
        }
    }
    std::vector<Polynomial<F>> kept;
    std::vector<std::vector<Polynomial<F>>> kept_cof;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (!keep[i]) continue;
        kept.push_back(basis[i]);
        kept_cof.push_back(cof[i]);
    }

    // tail-reduce each element by the others, then scale monic
    for (std::size_t i = 0; i < kept.size(); ++i) {
        std::vector<Polynomial<F>> others;
        std::vector<std::size_t> omap;
        for (std::size_t j = 0; j < kept.size(); ++j) {
            if (j == i) continue;
            others.push_back(kept[j]);
            omap.push_back(j);
        }
        Polynomial<F> rest = kept[i];
        std::vector<Polynomial<F>> c = kept_cof[i];
        std::vector<typename Polynomial<F>::Term> rem_terms;
        while (!rest.is_zero()) {
            const auto lt = rest.leading_term();
            bool hit = false;
            for (std::size_t b = 0; b < others.size(); ++b) {
                const auto& dlt = others[b].leading_term();
                if (!dlt.first.divides(lt.first)) continue;
                Monomial q = dlt.first.quotient_of(lt.first);
                typename F::Elem cc = K.div(lt.second, dlt.second);
                rest = rest - others[b].times_monomial(q, cc);
                c = add_cof(c, kept_cof[omap[b]], q, cc);
                hit = true;
                break;
            }
            if (!hit) {
                rem_terms.push_back(lt);
                rest = rest - Polynomial<F>::monomial(K, lt.first, lt.second);
            }
        }
        kept[i] = Polynomial<F>(K, std::move(rem_terms));
        kept_cof[i] = std::move(c);
        typename F::Elem inv = K.inv(kept[i].leading_term().second);
        kept[i] = kept[i].scaled(inv);
        for (auto& q : kept_cof[i]) q = q.scaled(inv);
    }

    // expansion check: each basis element equals its cofactor combination
    for (std::size_t i = 0; i < kept.size(); ++i) {
        Polynomial<F> acc = Polynomial<F>::zero(K);
        for (std::size_t j = 0; j < n_in; ++j) acc = acc + kept_cof[i][j] * gens[j];
        if (!(acc == kept[i]))
            throw std::logic_error("buchberger: cofactor expansion mismatch");
    }

    // larger leading terms first, so division charges the deepest divisor
    std::vector<std::size_t> order(kept.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return grevlex_greater(kept[a].leading_term().first, kept[b].leading_term().first);
    });
    GroebnerBasis<F> G{K, std::move(gens), {}, {}};
    for (std::size_t i : order) {
        G.basis.push_back(std::move(kept[i]));
        G.cofactors.push_back(std::move(kept_cof[i]));
    }
    return G;
}

template <class F>
Polynomial<F> oracle_normal_form(const Polynomial<F>& p, const GroebnerBasis<F>& G) {
    return divide(p, G.basis, G.K).remainder;
}

// Cofactors over the input generators with sum h_k g_k = p; nullopt when p is
// not in the ideal. Validity is certified by exact expansion.
template <class F>
std::optional<std::vector<Polynomial<F>>> cofactors_of(const Polynomial<F>& p,
                                                       const GroebnerBasis<F>& G) {
    const F& K = G.K;
    DivisionResult<F> d = divide(p, G.basis, K);
    if (!d.remainder.is_zero()) return std::nullopt;
    std::vector<Polynomial<F>> out(G.input.size(), Polynomial<F>::zero(K));
    for (std::size_t b = 0; b < G.basis.size(); ++b) {
        if (d.quotients[b].is_zero()) continue;
        for (std::size_t j = 0; j < G.input.size(); ++j)
            out[j] = out[j] + d.quotients[b] * G.cofactors[b][j];
    }
    Polynomial<F> acc = Polynomial<F>::zero(K);
    for (std::size_t j = 0; j < G.input.size(); ++j) acc = acc + out[j] * G.input[j];
    if (!(acc == p)) throw std::logic_error("cofactors_of: expansion mismatch");
    return out;
}

// Monomials outside the leading-term ideal. Throws if the quotient is not
// finite-dimensional or exceeds the guard.
template <class F>
std::vector<Monomial> staircase(const GroebnerBasis<F>& G,
                                std::size_t dim_guard = 1000000) {
    std::vector<Monomial> lts;
    for (const auto& b : G.basis) lts.push_back(b.leading_term().first);
    int cap[kNumVars];
    for (int v = 0; v < kNumVars; ++v) {
        cap[v] = -1;
        for (const auto& m : lts) {
            bool pure = true;
            for (int u = 0; u < kNumVars; ++u)
                if (u != v && m.e[u] > 0) pure = false;
            if (pure && m.e[v] > 0) cap[v] = cap[v] < 0 ? m.e[v] : std::min<int>(cap[v], m.e[v]);
        }
        if (cap[v] < 0)
            throw std::runtime_error("staircase: quotient is not Artinian (no pure power of " +
                                     std::string(1, kVarNames[v]) + ")");
    }
    std::vector<Monomial> out;
    for (int a = 0; a < cap[0]; ++a)
        for (int b = 0; b < cap[1]; ++b)
            for (int c = 0; c < cap[2]; ++c)
                for (int d = 0; d < cap[3]; ++d) {
                    Monomial m = mono(a, b, c, d);
                    bool in_lt = false;
                    for (const auto& l : lts)
                        if (l.divides(m)) {
                            in_lt = true;
                            break;
                        }
                    if (!in_lt) {
                        out.push_back(m);
                        if (out.size() > dim_guard)
                            throw std::runtime_error("staircase: dimension guard exceeded");
                    }
                }
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return grevlex_greater(a, b);
    });
    return out;
}

namespace detail {

// Minimal dense rank over F: the oracle keeps its own elimination.
template <class F>
std::size_t plain_rank(std::vector<std::vector<typename F::Elem>> m, const F& K) {
    std::size_t rank = 0;
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pr = rank;
        while (pr < rows && K.is_zero(m[pr][col])) ++pr;
        if (pr == rows) continue;
        std::swap(m[rank], m[pr]);
        typename F::Elem inv = K.inv(m[rank][col]);
        for (std::size_t c = col; c < cols; ++c) m[rank][c] = K.mul(m[rank][c], inv);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (K.is_zero(m[r][col])) continue;
            typename F::Elem f = K.neg(m[r][col]);
            for (std::size_t c = col; c < cols; ++c)
                m[r][c] = K.addmul(m[r][c], m[rank][c], f);
        }
        ++rank;
    }
    return rank;
}

template <class F>
std::vector<std::vector<typename F::Elem>> plain_kernel(
    std::vector<std::vector<typename F::Elem>> m, std::size_t cols, const F& K) {
    std::size_t rows = m.size();
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pr = rank;
        while (pr < rows && K.is_zero(m[pr][col])) ++pr;
        if (pr == rows) continue;
        std::swap(m[rank], m[pr]);
        typename F::Elem inv = K.inv(m[rank][col]);
        for (std::size_t c = col; c < cols; ++c) m[rank][c] = K.mul(m[rank][c], inv);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || K.is_zero(m[r][col])) continue;
            typename F::Elem f = K.neg(m[r][col]);
            for (std::size_t c = col; c < cols; ++c)
                m[r][c] = K.addmul(m[r][c], m[rank][c], f);
        }
        pivots.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<typename F::Elem>> out;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<typename F::Elem> v(cols, K.zero());
        v[f] = K.one();
        for (std::size_t r = 0; r < pivots.size(); ++r)
            if (!K.is_zero(m[r][f])) v[pivots[r]] = K.neg(m[r][f]);
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace detail

// Hom(J, S/J)_j computed from first principles: staircase coordinates via
// division, constraints from full degreewise syzygy slices. Desk scale only.
template <class F>
class HomOracle {
public:
    HomOracle(std::vector<Polynomial<F>> gens, const F& K, std::size_t dim_guard = 100)
        : K_(K), gens_(std::move(gens)), G_(buchberger(gens_)) {
        for (const auto& g : gens_)
            if (!g.is_homogeneous())
                throw std::invalid_argument("HomOracle: generators must be homogeneous");
        basis_ = staircase(G_, dim_guard);
        if (basis_.size() > dim_guard)
            throw std::runtime_error("HomOracle: instance-size guard exceeded");
        top_ = 0;
        for (const auto& m : basis_) top_ = std::max(top_, m.degree());
    }

    long dimension() const { return static_cast<long>(basis_.size()); }
    int top_degree() const { return top_; }

    int min_gen_degree() const {
        int d = gens_.front().degree();
        for (const auto& g : gens_) d = std::min(d, g.degree());
        return d;
    }
    int max_gen_degree() const {
        int d = gens_.front().degree();
        for (const auto& g : gens_) d = std::max(d, g.degree());
        return d;
    }

    int hom_dim(int j) const {
        // unknowns: one staircase coordinate per generator per slice position
        std::vector<std::vector<std::size_t>> slots;
        std::vector<std::size_t> offset;
        std::size_t unknowns = 0;
        for (const auto& g : gens_) {
            std::vector<std::size_t> idx;
            int target = g.degree() + j;
            for (std::size_t b = 0; b < basis_.size(); ++b)
                if (basis_[b].degree() == target) idx.push_back(b);
            offset.push_back(unknowns);
            unknowns += idx.size();
            slots.push_back(std::move(idx));
        }
        if (unknowns == 0) return 0;

        std::vector<std::vector<typename F::Elem>> rows;
        for (int d = min_gen_degree(); d <= top_ - j; ++d) {
            auto kernel = syzygy_slice_kernel(d);
            if (kernel.empty()) continue;
            std::vector<std::size_t> target_idx;
            for (std::size_t b = 0; b < basis_.size(); ++b)
                if (basis_[b].degree() == d + j) target_idx.push_back(b);
            if (target_idx.empty()) continue;
            for (const auto& syz : kernel) {
                std::vector<std::vector<typename F::Elem>> block(
                    target_idx.size(),
                    std::vector<typename F::Elem>(unknowns, K_.zero()));
                for (std::size_t k = 0; k < gens_.size(); ++k) {
                    if (syz[k].is_zero()) continue;
                    for (std::size_t s = 0; s < slots[k].size(); ++s) {
                        Polynomial<F> prod = syz[k] * Polynomial<F>::monomial(
                                                          K_, basis_[slots[k][s]], K_.one());
                        std::vector<typename F::Elem> v = nf_vector(prod);
                        for (std::size_t t = 0; t < target_idx.size(); ++t) {
                            block[t][offset[k] + s] =
                                K_.add(block[t][offset[k] + s], v[target_idx[t]]);
                        }
                    }
                }
                for (auto& r : block) rows.push_back(std::move(r));
            }
        }
        std::size_t rank = detail::plain_rank(rows, K_);
        return static_cast<int>(unknowns - rank);
    }

    std::map<int, int> hom_all() const {
        std::map<int, int> out;
        for (int j = -max_gen_degree(); j <= top_ - min_gen_degree(); ++j) {
            int d = hom_dim(j);
            if (d != 0) out[j] = d;
        }
        return out;
    }

    long quotient_dimension() const { return dimension(); }

    std::vector<typename F::Elem> nf_vector(const Polynomial<F>& p) const {
        Polynomial<F> r = oracle_normal_form(p, G_);
        std::vector<typename F::Elem> v(basis_.size(), K_.zero());
        for (const auto& t : r.terms()) {
            auto it = std::find(basis_.begin(), basis_.end(), t.first);
            if (it == basis_.end()) throw std::logic_error("HomOracle: remainder off staircase");
            v[static_cast<std::size_t>(it - basis_.begin())] = t.second;
        }
        return v;
    }

private:
    // kernel of (h_k) -> sum h_k g_k in degree d, as cofactor tuples
    std::vector<std::vector<Polynomial<F>>> syzygy_slice_kernel(int d) const {
        std::vector<std::vector<Monomial>> holes;
        std::size_t cols = 0;
        for (const auto& g : gens_) {
            holes.push_back(monomials_of_degree(d - g.degree()));
            cols += holes.back().size();
        }
        if (cols == 0) return {};
        std::vector<Monomial> target = monomials_of_degree(d);
        std::vector<std::vector<typename F::Elem>> m(
            target.size(), std::vector<typename F::Elem>(cols, K_.zero()));
        std::size_t col = 0;
        for (std::size_t k = 0; k < gens_.size(); ++k) {
            for (const auto& h : holes[k]) {
                for (const auto& t : gens_[k].terms()) {
                    Monomial prod = t.first * h;
                    auto it = std::lower_bound(target.begin(), target.end(), prod,
                                               grevlex_greater);
                    m[static_cast<std::size_t>(it - target.begin())][col] =
                        K_.add(m[it - target.begin()][col], t.second);
                }
                ++col;
            }
        }
        auto raw = detail::plain_kernel(std::move(m), cols, K_);
        std::vector<std::vector<Polynomial<F>>> out;
        for (const auto& v : raw) {
            std::vector<Polynomial<F>> tuple;
            std::size_t c = 0;
            for (std::size_t k = 0; k < gens_.size(); ++k) {
                std::vector<typename Polynomial<F>::Term> terms;
                for (const auto& h : holes[k]) {
                    if (!K_.is_zero(v[c])) terms.push_back({h, v[c]});
                    ++c;
                }
                tuple.push_back(Polynomial<F>(K_, std::move(terms)));
            }
            out.push_back(std::move(tuple));
        }
        return out;
    }

    F K_;
    std::vector<Polynomial<F>> gens_;
    GroebnerBasis<F> G_;
    std::vector<Monomial> basis_;
    int top_;
};

template <class F>
int oracle_hom_dim(const std::vector<Polynomial<F>>& gens, int j, const F& K,
                   std::size_t dim_guard = 100) {
    return HomOracle<F>(gens, K, dim_guard).hom_dim(j);
}

}  // namespace ec::oracle

#endif
