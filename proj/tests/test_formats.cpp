#include "doctest.h"

#include "ec/json_io.hpp"
#include "ec/scenarios.hpp"

using namespace ec;

TEST_CASE("ideal spec JSON wire format") {
    IdealSpec s = IdealSpec::family(3, 3).with_extras({"x^2*z^2"});
    CHECK(spec_to_json(s).dump() ==
          R"({"family":{"n1":3,"n2":3},"variant_n3":null,"extra":["x^2*z^2"]})");
    IdealSpec v = IdealSpec::family_variant(4, 4, 2);
    CHECK(spec_to_json(v).dump() ==
          R"({"family":{"n1":4,"n2":4},"variant_n3":2,"extra":[]})");
    IdealSpec r = IdealSpec::raw_ideal({"x^2", "y*w"});
    CHECK(spec_to_json(r).dump() == R"({"raw":["x^2","y*w"],"extra":[]})");

    for (const auto& spec : {s, v, r}) {
        IdealSpec round = spec_from_json(spec_to_json(spec));
        CHECK(spec_to_json(round) == spec_to_json(spec));
    }
}

TEST_CASE("field JSON wire format") {
    CHECK(field_to_json(FieldSpec::rationals()).dump() == R"({"field":"Q"})");
    CHECK(field_to_json(FieldSpec::prime(2147483647ull)).dump() ==
          R"({"field":{"p":2147483647}})");
    CHECK(field_from_json(json::parse(R"({"field":"Q"})")).mode ==
          FieldSpec::Mode::Rationals);
    CHECK(field_from_json(json::parse(R"({"field":{"p":2147483647}})")).p == 2147483647ull);
    CHECK_THROWS(field_from_json(json::parse(R"({"field":{"p":123456}})")));
}

TEST_CASE("tangent report JSON shape and ordering") {
    PrimeField Kp(2147483647ull);
    auto Q = ArtinQuotient<PrimeField>::build(IdealSpec::family(2, 2), Kp);
    json j = tangent_report_to_json(tangent_report(Q));
    CHECK(j.at("total") == 25);
    CHECK(j.at("tnt") == true);
    CHECK(j.at("engine") == "structured");
    CHECK(j.at("per_degree").at("-1") == 4);
    // degree keys appear in numeric order
    std::vector<std::string> keys;
    for (auto& [k, v] : j.at("per_degree").items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"-2", "-1", "0"});
}

TEST_CASE("obstruction report JSON shape") {
    PrimeField Kp(2147483647ull);
    auto Q = ArtinQuotient<PrimeField>::build(IdealSpec::family(2, 2), Kp);
    json j = obstruction_report_to_json(t2_nonneg(Q));
    CHECK(j.at("t2_nonneg_zero") == true);
    CHECK(j.at("cutoff") == 2);
    CHECK(j.at("inconclusive") == false);
}

TEST_CASE("scenario runner flags mismatches") {
    Scenario bad;
    bad.name = "bad";
    bad.spec = IdealSpec::family(2, 2);
    bad.expected.colength = 9;  // wrong on purpose
    ScenarioResult r = run_scenario(bad, FieldSpec::prime(2147483647ull));
    CHECK_FALSE(r.pass);
    REQUIRE(r.mismatches.size() == 1);
    CHECK(r.mismatches[0].find("colength") != std::string::npos);

    ScenarioResult good =
        run_scenario(find_scenario("iarrobino-emsalem"), FieldSpec::prime(2147483647ull));
    CHECK(good.pass);
    CHECK(good.tangent_total == 25);
}

TEST_CASE("identical runs serialize identically") {
    PrimeField Kp(2147483647ull);
    auto Q = ArtinQuotient<PrimeField>::build(IdealSpec::family(3, 3), Kp);
    json a = tangent_report_to_json(tangent_report(Q, TangentEngine::Structured, 2));
    json b = tangent_report_to_json(tangent_report(Q, TangentEngine::Structured, 2));
    CHECK(a.dump() == b.dump());
}
