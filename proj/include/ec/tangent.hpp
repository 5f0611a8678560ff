#ifndef EC_TANGENT_HPP
#define EC_TANGENT_HPP

#include <array>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "ec/linalg.hpp"
#include "ec/parallel.hpp"
#include "ec/quotient.hpp"
#include "ec/syzygy.hpp"

namespace ec {

enum class TangentEngine { Structured, Generic };

inline const char* engine_name(TangentEngine e) {
    return e == TangentEngine::Structured ? "structured" : "generic";
}

struct TangentReport {
    std::map<int, int> per_degree;
    long total = 0;
    int j_min = 0, j_max = 0;
    int trivial_rank_at_minus1 = 0;
    bool tnt = false;
    TangentEngine engine = TangentEngine::Structured;
    bool fell_back_to_generic = false;
};

struct ObstructionReport {
    std::map<int, int> per_degree;  // j >= 0
    bool vanishes_nonneg = false;
    int cutoff_degree = 0;
    bool inconclusive = false;
};

// Hom(J, B)_j by exact linear algebra: unknowns are the generator images in
// B, constraints are syzygies evaluated through B's multiplication structure.
// The structured engine uses the generating syzygies only, split into
// bidegree blocks; the generic engine uses full degreewise syzygy slices.
template <class F>
class TangentSolver {
public:
    explicit TangentSolver(const ArtinQuotient<F>& Q) : Q_(Q), K_(Q.field()) {
        if (!Q_.graded())
            throw std::invalid_argument("tangent: graded quotient required");
        const auto& gens = Q_.generators();
        min_gen_ = max_gen_ = gens.front().degree();
        for (const auto& g : gens) {
            min_gen_ = std::min(min_gen_, g.degree());
            max_gen_ = std::max(max_gen_, g.degree());
        }
        if (Q_.bigraded()) {
            for (int i = 0; i < Q_.dim(); ++i) {
                max_b1_ = std::max(max_b1_, Q_.bidegree_of(i).first);
                max_b2_ = std::max(max_b2_, Q_.bidegree_of(i).second);
            }
        }
        structured_ok_ =
            Q_.root_kind() == ArtinQuotient<F>::RootKind::Family && Q_.bigraded();
        if (structured_ok_) {
            try {
                syzygies_ = structured_syzygies(Q_);
            } catch (const std::exception&) {
                structured_ok_ = false;
            }
        }
    }

    const ArtinQuotient<F>& quotient() const { return Q_; }
    bool structured_available() const { return structured_ok_; }
    int j_min() const { return -max_gen_; }
    int j_max() const { return Q_.top_degree() - min_gen_; }

    int hom_dim(int j, TangentEngine engine) {
        if (engine == TangentEngine::Structured) {
            if (!structured_ok_)
                throw std::invalid_argument("structured engine unavailable for this spec");
            int total = 0;
            for (auto [j1, j2] : bidegree_shifts(j)) total += structured_block(j1, j2);
            return total;
        }
        prepare_generic(j);
        return generic_hom_dim(j);
    }

    // Rank of the span of the four derivation maps g -> d_v(g) + J inside the
    // degree -1 unknown layout.
    int trivial_rank() {
        Layout L = graded_layout(-1);
        if (L.total == 0) return 0;
        RowSpace<F> span(L.total, K_);
        int rank = 0;
        const auto& gens = Q_.generators();
        for (int v = 0; v < kNumVars; ++v) {
            Vec<F> row(L.total, K_.zero());
            for (std::size_t k = 0; k < gens.size(); ++k) {
                Vec<F> img = Q_.nf(gens[k].partial_derivative(v));
                for (std::size_t s = 0; s < L.slots[k].size(); ++s)
                    row[L.offsets[k] + s] = img[L.slots[k][s]];
            }
            if (span.insert(std::move(row))) ++rank;
        }
        return rank;
    }

    TangentReport report(TangentEngine engine, std::size_t threads = 0) {
        TangentReport r;
        r.engine = engine;
        r.j_min = j_min();
        r.j_max = j_max();
        std::vector<int> degrees;
        for (int j = r.j_min; j <= r.j_max; ++j) degrees.push_back(j);
        if (engine == TangentEngine::Generic) prepare_generic(r.j_min);
        std::vector<int> dims(degrees.size(), 0);
        parallel_for(
            degrees.size(), [&](std::size_t i) { dims[i] = hom_dim(degrees[i], engine); },
            threads);
        for (std::size_t i = 0; i < degrees.size(); ++i) {
            r.per_degree[degrees[i]] = dims[i];
            r.total += dims[i];
        }
        r.trivial_rank_at_minus1 = trivial_rank();
        bool neg_ok = true;
        for (int j = r.j_min; j <= -2; ++j)
            if (r.per_degree.at(j) != 0) neg_ok = false;
        int at_m1 = r.per_degree.count(-1) ? r.per_degree.at(-1) : 0;
        r.tnt = neg_ok && at_m1 == r.trivial_rank_at_minus1;
        return r;
    }

    // Trivial negative tangents: scans only j <= -1.
    bool tnt(TangentEngine engine, std::size_t threads = 0) {
        if (j_min() > -1) return true;
        if (engine == TangentEngine::Generic) prepare_generic(j_min());
        std::vector<int> degrees;
        for (int j = j_min(); j <= -1; ++j) degrees.push_back(j);
        std::vector<int> dims(degrees.size(), 0);
        parallel_for(
            degrees.size(), [&](std::size_t i) { dims[i] = hom_dim(degrees[i], engine); },
            threads);
        for (std::size_t i = 0; i + 1 < degrees.size(); ++i)
            if (dims[i] != 0) return false;
        return dims.back() == trivial_rank();
    }

private:
    struct Layout {
        std::vector<std::vector<int>> slots;
        std::vector<std::size_t> offsets;
        std::size_t total = 0;
    };

    Layout graded_layout(int j) const {
        Layout L;
        for (const auto& g : Q_.generators()) {
            int d = g.degree() + j;
            std::vector<int> idx;
            if (d >= 0 && d <= Q_.top_degree()) {
                auto [lo, hi] = Q_.graded_slice(d);
                for (int i = lo; i < hi; ++i) idx.push_back(i);
            }
            L.offsets.push_back(L.total);
            L.total += idx.size();
            L.slots.push_back(std::move(idx));
        }
        return L;
    }

    Layout bigraded_layout(int j1, int j2) const {
        Layout L;
        for (const auto& g : Q_.generators()) {
            auto gb = *g.bidegree();
            std::vector<int> idx = Q_.bigraded_slice(gb.first + j1, gb.second + j2);
            L.offsets.push_back(L.total);
            L.total += idx.size();
            L.slots.push_back(std::move(idx));
        }
        return L;
    }

    std::vector<std::pair<int, int>> bidegree_shifts(int j) const {
        int b1min = max_b1_, b1max = 0, b2min = max_b2_, b2max = 0;
        for (const auto& g : Q_.generators()) {
            auto gb = *g.bidegree();
            b1min = std::min(b1min, gb.first);
            b1max = std::max(b1max, gb.first);
            b2min = std::min(b2min, gb.second);
            b2max = std::max(b2max, gb.second);
        }
        std::vector<std::pair<int, int>> out;
        for (int j1 = -b1max; j1 <= max_b1_ - b1min; ++j1) {
            int j2 = j - j1;
            if (j2 < -b2max || j2 > max_b2_ - b2min) continue;
            out.push_back({j1, j2});
        }
        return out;
    }

    // Image of basis vector `slot` under multiplication by m, memoized over
    // the whole report. Family roots bypass this (their action is monomial).
    const Vec<F>& act(int slot, const Monomial& m) {
        std::lock_guard<std::mutex> lock(act_mu_);
        return act_locked(action_[slot], slot, m);
    }
    const Vec<F>& act_locked(std::unordered_map<Monomial, Vec<F>, MonomialHash>& per_slot,
                             int slot, const Monomial& m) {
        auto it = per_slot.find(m);
        if (it != per_slot.end()) return it->second;
        Vec<F> v;
        if (m.is_one()) {
            v = Q_.unit_vector(slot);
        } else {
            int var = 0;
            while (m.e[var] == 0) ++var;
            Monomial rest = m;
            rest.e[var] -= 1;
            v = Q_.apply_variable(var, act_locked(per_slot, slot, rest));
        }
        return per_slot.emplace(m, std::move(v)).first->second;
    }

    // Adds the constraint block of one syzygy tuple to `rows` under layout L.
    void add_syzygy_rows(const std::vector<Polynomial<F>>& cof, const std::vector<int>& target,
                         const Layout& L, std::vector<Vec<F>>& rows) {
        if (target.empty() || L.total == 0) return;
        std::vector<Vec<F>> block(target.size(), Vec<F>(L.total, K_.zero()));
        const bool fast = Q_.has_monomial_action();
        for (std::size_t k = 0; k < cof.size(); ++k) {
            if (cof[k].is_zero()) continue;
            for (std::size_t s = 0; s < L.slots[k].size(); ++s) {
                int slot = L.slots[k][s];
                if (fast) {
                    for (const auto& term : cof[k].terms()) {
                        std::optional<int> img = Q_.family_mono_image(slot, term.first);
                        if (!img) continue;
                        for (std::size_t t = 0; t < target.size(); ++t) {
                            if (target[t] == *img)
                                block[t][L.offsets[k] + s] =
                                    K_.add(block[t][L.offsets[k] + s], term.second);
                        }
                    }
                } else {
                    for (const auto& term : cof[k].terms()) {
                        const Vec<F>& img = act(slot, term.first);
                        for (std::size_t t = 0; t < target.size(); ++t)
                            block[t][L.offsets[k] + s] = K_.addmul(
                                block[t][L.offsets[k] + s], img[target[t]], term.second);
                    }
                }
            }
        }
        for (auto& r : block) rows.push_back(std::move(r));
    }

    int structured_block(int j1, int j2) {
        Layout L = bigraded_layout(j1, j2);
        if (L.total == 0) return 0;
        std::vector<Vec<F>> rows;
        for (const auto& syz : syzygies_) {
            std::vector<int> target =
                Q_.bigraded_slice(syz.bidegree.first + j1, syz.bidegree.second + j2);
            add_syzygy_rows(syz.cofactors, target, L, rows);
        }
        return static_cast<int>(L.total) - static_cast<int>(rank_rows(rows, L.total));
    }

    int generic_hom_dim(int j) {
        Layout L = graded_layout(j);
        if (L.total == 0) return 0;
        std::vector<Vec<F>> rows;
        for (int d = min_gen_; d <= Q_.top_degree() - j; ++d) {
            auto it = slices_.find(d);
            if (it == slices_.end() || it->second.kernel.vecs.empty()) continue;
            int td = d + j;
            if (td < 0 || td > Q_.top_degree()) continue;
            auto [lo, hi] = Q_.graded_slice(td);
            if (lo == hi) continue;
            std::vector<int> target;
            for (int t = lo; t < hi; ++t) target.push_back(t);
            for (const auto& kv : it->second.kernel.vecs)
                add_syzygy_rows(it->second.tuple_of(kv, K_), target, L, rows);
        }
        return static_cast<int>(L.total) - static_cast<int>(rank_rows(rows, L.total));
    }

    std::size_t rank_rows(std::vector<Vec<F>>& rows, std::size_t width) const {
        if (rows.empty() || width == 0) return 0;
        // incremental insertion with early exit at full rank
        RowSpace<F> span(width, K_);
        for (auto& r : rows) {
            span.insert(std::move(r));
            if (span.dim() == width) break;
        }
        return span.dim();
    }

    void prepare_generic(int lowest_j) {
        std::lock_guard<std::mutex> lock(slice_mu_);
        int dmax = Q_.top_degree() - lowest_j;
        for (int d = min_gen_; d <= dmax; ++d)
            if (!slices_.count(d))
                slices_.emplace(d, build_slice_context(Q_.generators(), d, K_));
    }

    const ArtinQuotient<F> Q_;
    F K_;
    int min_gen_ = 0, max_gen_ = 0;
    int max_b1_ = 0, max_b2_ = 0;
    bool structured_ok_ = false;
    std::vector<SyzygyGenerator<F>> syzygies_;
    std::map<int, SliceContext<F>> slices_;
    std::mutex slice_mu_;
    std::mutex act_mu_;
    std::map<int, std::unordered_map<Monomial, Vec<F>, MonomialHash>> action_;
};

// --- spec-level operations ---

template <class F>
int hom_dim(const ArtinQuotient<F>& Q, int j,
            TangentEngine engine = TangentEngine::Structured) {
    TangentSolver<F> solver(Q);
    if (engine == TangentEngine::Structured && !solver.structured_available())
        engine = TangentEngine::Generic;
    return solver.hom_dim(j, engine);
}

template <class F>
TangentReport tangent_report(const ArtinQuotient<F>& Q,
                             TangentEngine engine = TangentEngine::Structured,
                             std::size_t threads = 0) {
    TangentSolver<F> solver(Q);
    bool fell_back = false;
    if (engine == TangentEngine::Structured && !solver.structured_available()) {
        engine = TangentEngine::Generic;
        fell_back = true;
    }
    TangentReport r = solver.report(engine, threads);
    r.fell_back_to_generic = fell_back;
    return r;
}

template <class F>
bool trivial_negative_tangents(const ArtinQuotient<F>& Q,
                               TangentEngine engine = TangentEngine::Structured,
                               std::size_t threads = 0) {
    TangentSolver<F> solver(Q);
    if (engine == TangentEngine::Structured && !solver.structured_available())
        engine = TangentEngine::Generic;
    return solver.tnt(engine, threads);
}

// T^2 in nonnegative degrees. dim T^2_j = dim Z_j - dim Im_j, where Z_j holds
// the families psi_d : Q_d -> B_{d+j} that vanish on the Koszul subspace and
// intertwine the four multiplication maps, and Im_j holds those induced by
// maps on the free cover. Sliced by bidegree; degrees above the top of B
// carry no information, which truncates the computation exactly.
template <class F>
class ObstructionSolver {
public:
    explicit ObstructionSolver(const ArtinQuotient<F>& Q) : Q_(Q), K_(Q.field()) {
        if (!Q_.bigraded())
            throw std::invalid_argument("t2: bigraded quotient required");
        for (int i = 0; i < Q_.dim(); ++i) {
            max_b1_ = std::max(max_b1_, Q_.bidegree_of(i).first);
            max_b2_ = std::max(max_b2_, Q_.bidegree_of(i).second);
        }
        min_gen_ = Q_.generators().front().degree();
        for (const auto& g : Q_.generators()) min_gen_ = std::min(min_gen_, g.degree());
    }

    ObstructionReport run(std::optional<int> cutoff_override = std::nullopt,
                          std::size_t threads = 0) {
        const int topB = Q_.top_degree();
        const int cutoff = cutoff_override.value_or(topB);
        ObstructionReport rep;
        rep.cutoff_degree = cutoff;
        rep.inconclusive = cutoff < topB;
        std::vector<int> degrees;
        for (int j = 0; j <= topB; ++j) degrees.push_back(j);
        std::vector<int> dims(degrees.size(), 0);
        parallel_for(
            degrees.size(), [&](std::size_t i) { dims[i] = t2_dim(degrees[i], cutoff); },
            threads);
        bool all_zero = true;
        for (std::size_t i = 0; i < degrees.size(); ++i) {
            rep.per_degree[degrees[i]] = dims[i];
            if (dims[i] != 0) all_zero = false;
        }
        rep.vanishes_nonneg = all_zero;
        return rep;
    }

    int t2_dim(int j, int cutoff) {
        int total = 0;
        for (int j1 = j - max_b2_; j1 <= max_b1_; ++j1) total += t2_block(j1, j - j1, cutoff);
        return total;
    }

private:
    struct BiSlice {
        SliceContext<F> ctx;
        std::vector<Vec<F>> koszul_coords;  // in kernel coordinates
    };

    Vec<F> kernel_coords(const SliceContext<F>& ctx, const Vec<F>& target) const {
        const auto& kb = ctx.kernel;
        Vec<F> c(kb.vecs.size(), K_.zero());
        for (std::size_t s = 0; s < kb.vecs.size(); ++s) c[s] = target[kb.free_cols[s]];
        Vec<F> check(target.size(), K_.zero());
        for (std::size_t s = 0; s < kb.vecs.size(); ++s) {
            if (K_.is_zero(c[s])) continue;
            for (std::size_t i = 0; i < target.size(); ++i)
                check[i] = K_.addmul(check[i], kb.vecs[s][i], c[s]);
        }
        for (std::size_t i = 0; i < target.size(); ++i)
            if (!K_.eq(check[i], target[i]))
                throw std::logic_error("t2: vector not in syzygy slice span");
        return c;
    }

    Vec<F> shifted_vector(const SliceContext<F>& ctx, const SliceContext<F>& nxt,
                          const Vec<F>& v, int var) const {
        Vec<F> out(nxt.hdim, K_.zero());
        for (std::size_t k = 0; k < ctx.holes.size(); ++k) {
            for (std::size_t i = 0; i < ctx.holes[k].size(); ++i) {
                const auto& c = v[ctx.offsets[k] + i];
                if (K_.is_zero(c)) continue;
                Monomial m = ctx.holes[k][i] * var_mono(var);
                auto it = std::lower_bound(nxt.holes[k].begin(), nxt.holes[k].end(), m,
                                           grevlex_greater);
                out[nxt.offsets[k] + static_cast<std::size_t>(it - nxt.holes[k].begin())] = c;
            }
        }
        return out;
    }

    const BiSlice& slice_at(int d1, int d2) {
        std::pair<int, int> key{d1, d2};
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = cache_.find(key);
            if (it != cache_.end()) return it->second;
        }
        BiSlice s;
        s.ctx = build_bislice(d1, d2);
        if (!s.ctx.kernel.vecs.empty()) {
            RowSpace<F> seen(s.ctx.hdim, K_);
            for (auto& kv : koszul_bivectors(d1, d2, s.ctx)) {
                Vec<F> copy = kv;
                if (seen.insert(std::move(kv)))
                    s.koszul_coords.push_back(kernel_coords(s.ctx, copy));
            }
        }
        std::lock_guard<std::mutex> lock(mu_);
        return cache_.emplace(key, std::move(s)).first->second;
    }

    SliceContext<F> build_bislice(int d1, int d2) const {
        SliceContext<F> ctx;
        ctx.degree = d1 + d2;
        const auto& gens = Q_.generators();
        for (const auto& g : gens) {
            auto gb = *g.bidegree();
            ctx.offsets.push_back(ctx.hdim);
            ctx.holes.push_back(monomials_of_bidegree(d1 - gb.first, d2 - gb.second));
            ctx.hdim += ctx.holes.back().size();
        }
        std::vector<Monomial> target = monomials_of_bidegree(d1, d2);
        if (ctx.hdim == 0 || target.empty()) return ctx;
        Mat<F> M(target.size(), ctx.hdim, K_);
        for (std::size_t k = 0; k < gens.size(); ++k) {
            for (std::size_t i = 0; i < ctx.holes[k].size(); ++i) {
                std::size_t col = ctx.offsets[k] + i;
                for (const auto& t : gens[k].terms()) {
                    Monomial prod = t.first * ctx.holes[k][i];
                    auto it =
                        std::lower_bound(target.begin(), target.end(), prod, grevlex_greater);
                    std::size_t row = static_cast<std::size_t>(it - target.begin());
                    M.at(row, col) = K_.add(M.at(row, col), t.second);
                }
            }
        }
        ctx.kernel = kernel_basis(std::move(M), K_);
        return ctx;
    }

    std::vector<Vec<F>> koszul_bivectors(int d1, int d2, const SliceContext<F>& ctx) const {
        const auto& gens = Q_.generators();
        std::vector<Vec<F>> out;
        auto put = [&](Vec<F>& vec, std::size_t k, const Polynomial<F>& h) {
            for (const auto& t : h.terms()) {
                auto it = std::lower_bound(ctx.holes[k].begin(), ctx.holes[k].end(), t.first,
                                           grevlex_greater);
                std::size_t pos =
                    ctx.offsets[k] + static_cast<std::size_t>(it - ctx.holes[k].begin());
                vec[pos] = K_.add(vec[pos], t.second);
            }
        };
        for (std::size_t i = 0; i < gens.size(); ++i) {
            for (std::size_t j = i + 1; j < gens.size(); ++j) {
                auto bi = *gens[i].bidegree(), bj = *gens[j].bidegree();
                int r1 = d1 - bi.first - bj.first, r2 = d2 - bi.second - bj.second;
                if (r1 < 0 || r2 < 0) continue;
                for (const Monomial& m : monomials_of_bidegree(r1, r2)) {
                    Vec<F> vec(ctx.hdim, K_.zero());
                    put(vec, i, gens[j].times_monomial(m, K_.one()));
                    put(vec, j, gens[i].times_monomial(m, K_.neg(K_.one())));
                    out.push_back(std::move(vec));
                }
            }
        }
        return out;
    }

    int t2_block(int j1, int j2, int cutoff) {
        struct Block {
            std::pair<int, int> key;
            const BiSlice* slice;
            std::vector<int> target;
            std::size_t q = 0, beta = 0, offset = 0;
        };
        std::vector<Block> blocks;
        std::map<std::pair<int, int>, std::size_t> index;
        std::size_t unknowns = 0;
        for (int d1 = std::max(0, -j1); d1 + j1 <= max_b1_; ++d1) {
            for (int d2 = std::max(0, -j2); d2 + j2 <= max_b2_; ++d2) {
                if (d1 + d2 < min_gen_ || d1 + d2 > cutoff) continue;
                std::vector<int> target = Q_.bigraded_slice(d1 + j1, d2 + j2);
                if (target.empty()) continue;
                const BiSlice& s = slice_at(d1, d2);
                if (s.ctx.kernel.vecs.empty()) continue;
                Block b;
                b.key = {d1, d2};
                b.slice = &s;
                b.target = std::move(target);
                b.q = s.ctx.kernel.vecs.size();
                b.beta = b.target.size();
                b.offset = unknowns;
                unknowns += b.q * b.beta;
                index[b.key] = blocks.size();
                blocks.push_back(std::move(b));
            }
        }
        if (unknowns == 0) return 0;
        auto unknown_at = [&](const Block& b, std::size_t i, std::size_t t) {
            return b.offset + i * b.beta + t;
        };

        std::vector<Vec<F>> rows;
        for (const Block& b : blocks) {
            // Koszul vanishing
            for (const Vec<F>& c : b.slice->koszul_coords) {
                for (std::size_t t = 0; t < b.beta; ++t) {
                    Vec<F> row(unknowns, K_.zero());
                    for (std::size_t i = 0; i < b.q; ++i)
                        if (!K_.is_zero(c[i])) row[unknown_at(b, i, t)] = c[i];
                    rows.push_back(std::move(row));
                }
            }
            // intertwining: psi_next(v*kappa) = [v] psi_cur(kappa). Outside
            // the window the target slice of B vanishes and no condition
            // arises.
            auto [d1, d2] = b.key;
            for (int v = 0; v < kNumVars; ++v) {
                std::pair<int, int> nkey =
                    v < 2 ? std::pair<int, int>{d1 + 1, d2} : std::pair<int, int>{d1, d2 + 1};
                auto itn = index.find(nkey);
                if (itn == index.end()) continue;
                const Block& nb = blocks[itn->second];
                for (std::size_t i = 0; i < b.q; ++i) {
                    Vec<F> shifted = shifted_vector(b.slice->ctx, nb.slice->ctx,
                                                    b.slice->ctx.kernel.vecs[i], v);
                    Vec<F> c = kernel_coords(nb.slice->ctx, shifted);
                    for (std::size_t tp = 0; tp < nb.beta; ++tp) {
                        Vec<F> row(unknowns, K_.zero());
                        for (std::size_t ip = 0; ip < nb.q; ++ip)
                            if (!K_.is_zero(c[ip])) row[unknown_at(nb, ip, tp)] = c[ip];
                        for (std::size_t t = 0; t < b.beta; ++t) {
                            const auto& mv = Q_.mult(v).at(nb.target[tp], b.target[t]);
                            if (!K_.is_zero(mv))
                                row[unknown_at(b, i, t)] =
                                    K_.sub(row[unknown_at(b, i, t)], mv);
                        }
                        rows.push_back(std::move(row));
                    }
                }
            }
        }
        std::size_t z_rank = 0;
        {
            RowSpace<F> span(unknowns, K_);
            for (auto& r : rows) {
                span.insert(std::move(r));
                if (span.dim() == unknowns) break;
            }
            z_rank = span.dim();
        }
        std::size_t zdim = unknowns - z_rank;
        if (zdim == 0) return 0;

        // Im: families psi(kappa) = sum_k kappa_k b_k
        const auto& gens = Q_.generators();
        std::vector<std::vector<int>> slots;
        std::size_t im_cols = 0;
        for (const auto& g : gens) {
            auto gb = *g.bidegree();
            slots.push_back(Q_.bigraded_slice(gb.first + j1, gb.second + j2));
            im_cols += slots.back().size();
        }
        std::size_t im_rank = 0;
        if (im_cols > 0) {
            Mat<F> M(unknowns, im_cols, K_);
            for (const Block& b : blocks) {
                std::vector<std::vector<Polynomial<F>>> tuples;
                for (std::size_t i = 0; i < b.q; ++i)
                    tuples.push_back(b.slice->ctx.tuple_of(b.slice->ctx.kernel.vecs[i], K_));
                std::size_t col = 0;
                for (std::size_t k = 0; k < gens.size(); ++k) {
                    for (int slot : slots[k]) {
                        for (std::size_t i = 0; i < b.q; ++i) {
                            if (tuples[i][k].is_zero()) continue;
                            Vec<F> img = Q_.apply_poly(tuples[i][k], Q_.unit_vector(slot));
                            for (std::size_t t = 0; t < b.beta; ++t)
                                M.at(unknown_at(b, i, t), col) =
                                    K_.add(M.at(unknown_at(b, i, t), col), img[b.target[t]]);
                        }
                        ++col;
                    }
                }
            }
            im_rank = rank_of(std::move(M), K_);
        }
        return static_cast<int>(zdim - im_rank);
    }

    const ArtinQuotient<F> Q_;
    F K_;
    int max_b1_ = 0, max_b2_ = 0;
    int min_gen_ = 0;
    std::mutex mu_;
    std::map<std::pair<int, int>, BiSlice> cache_;
};

template <class F>
ObstructionReport t2_nonneg(const ArtinQuotient<F>& Q,
                            std::optional<int> cutoff = std::nullopt,
                            std::size_t threads = 0) {
    ObstructionSolver<F> solver(Q);
    return solver.run(cutoff, threads);
}

}  // namespace ec

#endif
