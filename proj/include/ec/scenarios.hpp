#ifndef EC_SCENARIOS_HPP
#define EC_SCENARIOS_HPP

#include <chrono>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ec/family.hpp"
#include "ec/quotient.hpp"
#include "ec/tangent.hpp"

namespace ec {

struct ScenarioResult {
    std::string name;
    ScenarioExpectation expected;
    std::optional<long> colength;
    std::optional<long> tangent_total;
    std::optional<bool> tnt;
    std::optional<bool> t2_zero;
    std::optional<int> socle_dim;
    bool pass = true;
    std::vector<std::string> mismatches;
    double seconds = 0.0;
};

namespace detail {

template <class F>
ScenarioResult run_scenario_impl(const Scenario& sc, const F& K, std::size_t threads) {
    auto t0 = std::chrono::steady_clock::now();
    ScenarioResult r;
    r.name = sc.name;
    r.expected = sc.expected;
    ArtinQuotient<F> Q = ArtinQuotient<F>::build(sc.spec, K);
    r.colength = Q.dim();
    if (sc.expected.tangent_total.has_value()) {
        TangentReport rep = tangent_report(Q, TangentEngine::Structured, threads);
        r.tangent_total = rep.total;
        r.tnt = rep.tnt;
    } else if (sc.expected.tnt.has_value()) {
        r.tnt = trivial_negative_tangents(Q, TangentEngine::Structured, threads);
    }
    if (sc.expected.t2_zero.has_value())
        r.t2_zero = t2_nonneg(Q, std::nullopt, threads).vanishes_nonneg;
    if (sc.expected.socle_dim.has_value())
        r.socle_dim = static_cast<int>(Q.socle().size());

    auto check = [&](const std::string& what, auto expected, auto computed) {
        if (!expected.has_value()) return;
        if (!computed.has_value() || *computed != *expected) {
            r.pass = false;
            std::ostringstream os;
            os << what << ": expected " << *expected;
            if (computed.has_value())
                os << ", computed " << *computed;
            else
                os << ", not computed";
            r.mismatches.push_back(os.str());
        }
    };
    check("colength", sc.expected.colength, r.colength);
    check("tangent_total", sc.expected.tangent_total, r.tangent_total);
    check("tnt", sc.expected.tnt, r.tnt);
    check("t2_zero", sc.expected.t2_zero, r.t2_zero);
    check("socle_dim", sc.expected.socle_dim, r.socle_dim);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

}  // namespace detail

inline ScenarioResult run_scenario(const Scenario& sc, const FieldSpec& field,
                                   std::size_t threads = 0) {
    if (field.mode == FieldSpec::Mode::Rationals)
        return detail::run_scenario_impl(sc, RationalField{}, threads);
    return detail::run_scenario_impl(sc, PrimeField(field.p), threads);
}

}  // namespace ec

#endif
