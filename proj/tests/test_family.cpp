#include "doctest.h"

#include <fstream>
#include <set>
#include <sstream>

#include "ec/family.hpp"
#include "ec/json_io.hpp"
#include "ec/quotient.hpp"

using namespace ec;

TEST_CASE("colength formula") {
    CHECK(d_formula(2, 2) == 8);
    CHECK(d_formula(2, 5) == 35);
    CHECK(d_formula(10, 10) == 1000);
    CHECK_THROWS_AS(d_formula(1, 5), std::invalid_argument);
}

TEST_CASE("F-sum reproduces the known component dimensions") {
    CHECK(F_formula(2, 2) + F_formula(2, 2) + d_formula(2, 2) - 1 == 25);
    CHECK(F_formula(3, 3) + F_formula(3, 3) + 27 - 1 == 70);
    CHECK(F_formula(2, 3) + F_formula(3, 2) + 15 - 1 == 44);
}

TEST_CASE("closed cubic form") {
    CHECK(D_closed_formula(2, 4) == 69);
    CHECK(D_closed_formula(3, 4) == 104);
    CHECK(D_closed_formula(10, 10) == 1729);
    CHECK(D_closed_formula(4, 2) == 69);  // symmetric in min/max
}

TEST_CASE("inequality verdicts") {
    CHECK(inequality_verdicts(2, 2) == std::pair<bool, bool>{true, false});
    CHECK(inequality_verdicts(2, 4) == std::pair<bool, bool>{true, false});
    CHECK(inequality_verdicts(3, 3) == std::pair<bool, bool>{true, true});
}

TEST_CASE("identity sweep: both forms of D agree and the exception list is exact") {
    std::set<std::pair<int, int>> exceptions{{2, 2}, {2, 3}, {2, 4}};
    for (int a = 2; a <= 20; ++a) {
        for (int b = a; b <= 20; ++b) {
            FamilyStats s = family_stats(a, b);  // asserts D_sum == D_closed
            CHECK(s.D_sum == s.D_closed);
            CHECK(s.lt_4d);
            CHECK(s.lt_3dm1 == !exceptions.count({a, b}));
        }
    }
}

TEST_CASE("colength formula matches the quotient dimension") {
    PrimeField Kp(2147483647ull);
    for (int n1 = 2; n1 <= 6; ++n1)
        for (int n2 = n1; n2 <= 6; ++n2)
            CHECK(d_formula(n1, n2) == build_family_quotient(n1, n2, Kp).dim());
}

TEST_CASE("catalog integrity") {
    const auto& cat = example_catalog();
    std::set<std::string> names;
    for (const auto& s : cat) CHECK(names.insert(s.name).second);
    CHECK(names.count("iarrobino-emsalem") == 1);
    CHECK(names.count("taxicab") == 1);
    CHECK(names.count("eg2-prime-a") == 1);

    const Scenario& ie = find_scenario("iarrobino-emsalem");
    CHECK(ie.expected.colength == 8);
    CHECK(ie.expected.tangent_total == 25);
    CHECK(find_scenario("taxicab").expected.tangent_total == 1729);
    CHECK_THROWS_AS(find_scenario("nope"), std::invalid_argument);

    // the chain scenario names form the 70,77,82,85 ladder
    CHECK(find_scenario("eg2-chain-0").expected.tangent_total == 70);
    CHECK(find_scenario("eg2-chain-1").expected.tangent_total == 77);
    CHECK(find_scenario("eg2-chain-2").expected.tangent_total == 82);
    CHECK(find_scenario("eg2-chain-3").expected.tangent_total == 85);
}

TEST_CASE("shipped catalog file matches the built-in catalog") {
    std::ifstream in(std::string(EC_SOURCE_DIR) + "/data/catalog.json");
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    json shipped = json::parse(buf.str());
    CHECK(shipped == catalog_to_json());
}
