#ifndef EC_FAMILY_HPP
#define EC_FAMILY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ec/ideal_spec.hpp"

namespace ec {

// Closed-form quantities attached to the (n1,n2) family. All arithmetic runs
// over GMP integers/rationals; results are validated to fit a long.
struct FamilyStats {
    int n1 = 0, n2 = 0;
    long d = 0;         // colength n1*n2*(n1+n2)/2
    long D_sum = 0;     // F(n1,n2) + F(n2,n1) + d - 1
    long D_closed = 0;  // cubic form in m = min, M = max
    bool lt_4d = false;
    bool lt_3dm1 = false;
};

long d_formula(int n1, int n2);
long F_formula(int a, int b);
long D_closed_formula(int n1, int n2);
std::pair<bool, bool> inequality_verdicts(int n1, int n2);  // (D < 4d, D < 3(d-1))
FamilyStats family_stats(int n1, int n2);

// --- named example catalog ---

struct ScenarioExpectation {
    std::optional<long> colength;
    std::optional<long> tangent_total;
    std::optional<bool> tnt;
    std::optional<bool> t2_zero;
    std::optional<int> socle_dim;
};

struct Scenario {
    std::string name;
    IdealSpec spec;
    ScenarioExpectation expected;
};

const std::vector<Scenario>& example_catalog();
const Scenario& find_scenario(const std::string& name);

}  // namespace ec

#endif
