// Acceptance suite: reproduces every published number at desk scale, one
// pass/fail line per criterion. All comparisons are exact integer equalities.

#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ec/family.hpp"
#include "ec/oracle.hpp"
#include "ec/parse.hpp"
#include "ec/scenarios.hpp"
#include "ec/syzygy.hpp"
#include "ec/tangent.hpp"

using namespace ec;

namespace {

const PrimeField Kp(2147483647ull);
const RationalField Kq;

int failures = 0;

void criterion(int number, const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (exception: ") + e.what() + ")";
    }
    std::printf("%s  criterion %d: %s%s\n", ok ? "PASS" : "FAIL", number, name.c_str(),
                note.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

template <class F>
ArtinQuotient<F> build(const IdealSpec& spec, const F& K) {
    return ArtinQuotient<F>::build(spec, K);
}

const std::vector<std::pair<int, int>> kGrid{{2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 3}, {3, 4}};
const std::vector<long> kGridColengths{8, 15, 24, 35, 27, 42};
const std::vector<long> kGridTangents{25, 44, 69, 100, 70, 104};

const IdealSpec kSocle2Ideal =
    IdealSpec::family(3, 3).with_extras({"x^2*z^2", "x^2*w^2", "y^2*z^2"});

IdealSpec raw60() {
    return IdealSpec::raw_ideal({"x^4", "x^3*y", "x^2*y^2", "x*y^3", "y^4", "z^4", "z^3*w",
                                 "z^2*w^2", "z*w^3", "w^4", "x*z-y*w", "x*y^2*w^3", "x^3*w^3",
                                 "y^3*z*w^2", "y^3*z^3"});
}

template <class F>
Polynomial<F> random_poly(const F& K, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(1, 6), exp(0, 4), coeff(-9, 9);
    std::vector<typename Polynomial<F>::Term> terms;
    for (int i = 0, n = nterms(rng); i < n; ++i)
        terms.push_back({mono(exp(rng), exp(rng), exp(rng), exp(rng)), K.from_int(coeff(rng))});
    return Polynomial<F>(K, std::move(terms));
}

}  // namespace

int main() {
    criterion(1, "colength grid {8,15,24,35,27,42}", [] {
        for (std::size_t i = 0; i < kGrid.size(); ++i) {
            auto Q = build(IdealSpec::family(kGrid[i].first, kGrid[i].second), Kp);
            if (Q.dim() != kGridColengths[i]) return false;
            if (d_formula(kGrid[i].first, kGrid[i].second) != kGridColengths[i]) return false;
        }
        return true;
    });

    criterion(2, "tangent totals {25,44,69,100,70,104}, re-verified for n1,n2<=3", [] {
        for (std::size_t i = 0; i < kGrid.size(); ++i) {
            auto [n1, n2] = kGrid[i];
            auto Q = build(IdealSpec::family(n1, n2), Kp);
            TangentReport structured = tangent_report(Q, TangentEngine::Structured);
            if (structured.total != kGridTangents[i]) return false;
            if (n1 <= 3 && n2 <= 3) {
                TangentReport generic = tangent_report(Q, TangentEngine::Generic);
                if (generic.per_degree != structured.per_degree) return false;
                oracle::HomOracle<PrimeField> h(Q.generators(), Kp);
                long oracle_total = 0;
                for (const auto& [j, d] : h.hom_all()) oracle_total += d;
                if (oracle_total != structured.total) return false;
            }
        }
        return true;
    });

    criterion(3, "socle-quotient chain 70,77,82,85 with tnt; T^2 vanishing at steps 0 and 3", [] {
        std::vector<long> colengths{27, 26, 25, 24}, totals{70, 77, 82, 85};
        auto Q = build(IdealSpec::family(3, 3), Kp);
        std::vector<std::string> socles{"x^2*z^2", "x^2*w^2", "y^2*z^2"};
        for (int step = 0; step <= 3; ++step) {
            if (Q.dim() != colengths[step]) return false;
            TangentReport rep = tangent_report(Q);
            if (rep.total != totals[step] || !rep.tnt) return false;
            if ((step == 0 || step == 3) && !t2_nonneg(Q).vanishes_nonneg) return false;
            if (step < 3) Q = Q.extended({parse_poly(socles[step], Kp)});
        }
        return true;
    });

    criterion(4, "two components each on Hilb^24 (69 vs 85) and Hilb^60 (179 vs 146)", [] {
        auto a24 = build(IdealSpec::family(2, 4), Kp);
        auto b24 = build(kSocle2Ideal, Kp);
        if (a24.dim() != 24 || b24.dim() != 24) return false;
        if (tangent_report(a24).total != 69) return false;
        if (tangent_report(b24).total != 85) return false;
        auto a60 = build(raw60(), Kp);
        auto b60 = build(IdealSpec::family(3, 5), Kp);
        if (a60.dim() != 60 || b60.dim() != 60) return false;
        if (tangent_report(a60).total != 179) return false;
        if (tangent_report(b60).total != 146) return false;
        return true;
    });

    criterion(5, "taxicab: colength 1000, tangent total 1729, closed form 1729", [] {
        auto Q = build(IdealSpec::family(10, 10), Kp);
        if (Q.dim() != 1000) return false;
        if (tangent_report(Q).total != 1729) return false;
        return D_closed_formula(10, 10) == 1729;
    });

    criterion(6, "trivial negative tangents suite incl. the variant table rows", [] {
        for (int n1 = 2; n1 <= 6; ++n1)
            for (int n2 = n1; n2 <= 6; ++n2)
                if (!trivial_negative_tangents(build(IdealSpec::family(n1, n2), Kp)))
                    return false;
        if (trivial_negative_tangents(build(IdealSpec::raw_ideal({"y", "z", "w", "x^2"}), Kp)))
            return false;
        const std::vector<std::array<int, 3>> rows{{4, 4, 2}, {4, 5, 3}, {5, 5, 3},
                                                   {6, 7, 4}, {6, 7, 5}, {7, 8, 6}};
        for (const auto& row : rows) {
            auto Q = build(IdealSpec::family_variant(row[0], row[1], row[2]), Kp);
            TangentReport rep = tangent_report(Q);
            if (!rep.tnt) return false;
            long dB = Q.dim();
            if (!(rep.total < 4 * dB)) return false;
            bool stronger = rep.total < 3 * (dB - 1);
            if (row == std::array<int, 3>{4, 4, 2}) {
                if (stronger) return false;
            } else if (!stronger) {
                return false;
            }
        }
        return true;
    });

    criterion(7, "T^2_{>=0} vanishing for n1+n2<=7 and the socle-2 ideal; nonzero for (4,4,2)", [] {
        for (int n1 = 2; n1 <= 5; ++n1)
            for (int n2 = n1; n1 + n2 <= 7; ++n2) {
                auto rep = t2_nonneg(build(IdealSpec::family(n1, n2), Kp));
                if (!rep.vanishes_nonneg || rep.inconclusive) return false;
            }
        if (!t2_nonneg(build(kSocle2Ideal, Kp)).vanishes_nonneg) return false;
        return !t2_nonneg(build(IdealSpec::family_variant(4, 4, 2), Kp)).vanishes_nonneg;
    });

    criterion(8, "formula identity sweep 2<=a<=b<=20 with exact exception list", [] {
        std::set<std::pair<int, int>> exceptions{{2, 2}, {2, 3}, {2, 4}};
        for (int a = 2; a <= 20; ++a)
            for (int b = a; b <= 20; ++b) {
                FamilyStats s = family_stats(a, b);
                if (s.D_sum != s.D_closed) return false;
                if (!s.lt_4d) return false;
                if (s.lt_3dm1 != !exceptions.count({a, b})) return false;
            }
        return true;
    });

    criterion(9, "property suites: commutativity, oracle NF agreement, prime independence, engines", [] {
        // multiplication-matrix commutativity is asserted by every quotient
        // constructor; building this set exercises family, variant, chain,
        // and raw quotients.
        std::vector<IdealSpec> specs;
        for (int n1 = 2; n1 <= 4; ++n1)
            for (int n2 = 2; n2 <= 4; ++n2) specs.push_back(IdealSpec::family(n1, n2));
        specs.push_back(IdealSpec::family_variant(4, 4, 2));
        specs.push_back(kSocle2Ideal);
        specs.push_back(raw60());
        std::mt19937_64 rng(2026);
        for (const auto& spec : specs) {
            auto Q = build(spec, Kp);
            auto G = oracle::buchberger(expand_generators(spec, Kp));
            for (int i = 0; i < 200; ++i) {
                auto p = random_poly(Kp, rng);
                if (!(oracle::oracle_normal_form(Q.vector_to_poly(Q.nf(p)), G) ==
                      oracle::oracle_normal_form(p, G)))
                    return false;
            }
        }
        // structured vs generic on all small specs
        for (const auto& spec : specs) {
            auto Q = build(spec, Kp);
            TangentSolver<PrimeField> solver(Q);
            if (!solver.structured_available()) continue;
            auto s = tangent_report(Q, TangentEngine::Structured);
            auto g = tangent_report(Q, TangentEngine::Generic);
            if (s.per_degree != g.per_degree) return false;
        }
        // prime independence of every reported dimension
        std::vector<PrimeField> fields;
        while (fields.size() < 3)
            fields.emplace_back(next_prime_u64((1ull << 21) + rng() % (1ull << 29)));
        for (const auto& spec : {IdealSpec::family(2, 3), IdealSpec::family(3, 3),
                                 IdealSpec::family_variant(4, 4, 2), kSocle2Ideal}) {
            auto base = tangent_report(build(spec, Kp));
            auto base_t2 = t2_nonneg(build(spec, Kp));
            for (const auto& K : fields) {
                if (tangent_report(build(spec, K)).per_degree != base.per_degree) return false;
                if (t2_nonneg(build(spec, K)).per_degree != base_t2.per_degree) return false;
            }
        }
        return true;
    });

    if (failures == 0) std::printf("all acceptance criteria passed\n");
    return failures;
}
