#include "ec/family.hpp"

#include <stdexcept>

#include <gmpxx.h>

namespace ec {

namespace {

void require_range(int n1, int n2) {
    if (n1 < 2 || n2 < 2) throw std::invalid_argument("family formulas: need n1, n2 >= 2");
}

// binomial with C(j,k) = 0 unless j >= k >= 0
mpz_class binom(long j, long k) {
    if (k < 0 || j < k) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(k));
    return r;
}

long to_long(const mpz_class& z) {
    if (!z.fits_slong_p()) throw std::overflow_error("family formulas: value exceeds long");
    return z.get_si();
}

mpz_class d_exact(long n1, long n2) {
    mpz_class r = mpz_class(n1) * n2 * (n1 + n2);
    if (r % 2 != 0) throw std::logic_error("d_formula: n1*n2*(n1+n2) must be even");
    return r / 2;
}

mpz_class F_exact(long a, long b) {
    mpz_class r = 0;
    for (long i = 2; i <= a - 1; ++i) r += mpz_class(i - 1) * binom(b - i, 1);
    r += mpz_class(a - 1) * binom(b - a + 1, 2);
    r += mpz_class(a + 1) * (a + b - 1);
    r += binom(b - 1, 2);
    return r;
}

mpz_class D_closed_exact(long n1, long n2) {
    long m = std::min(n1, n2), M = std::max(n1, n2);
    // (1/3)m^3 + mM^2 + m^2 + 2mM + M^2 - (1/3)m - 1, evaluated over rationals
    mpq_class q = mpq_class(mpz_class(m) * m * m, 3) + mpz_class(m) * M * M +
                  mpz_class(m) * m + 2 * mpz_class(m) * M + mpz_class(M) * M -
                  mpq_class(m, 3) - 1;
    q.canonicalize();
    if (q.get_den() != 1) throw std::logic_error("D_closed_formula: non-integral value");
    return q.get_num();
}

}  // namespace

long d_formula(int n1, int n2) {
    require_range(n1, n2);
    return to_long(d_exact(n1, n2));
}

long F_formula(int a, int b) {
    if (a < 2 || b < 2) throw std::invalid_argument("F_formula: need a, b >= 2");
    return to_long(F_exact(a, b));
}

long D_closed_formula(int n1, int n2) {
    require_range(n1, n2);
    return to_long(D_closed_exact(n1, n2));
}

std::pair<bool, bool> inequality_verdicts(int n1, int n2) {
    require_range(n1, n2);
    mpz_class D = D_closed_exact(n1, n2), d = d_exact(n1, n2);
    return {D < 4 * d, D < 3 * (d - 1)};
}

FamilyStats family_stats(int n1, int n2) {
    require_range(n1, n2);
    FamilyStats s;
    s.n1 = n1;
    s.n2 = n2;
    s.d = d_formula(n1, n2);
    s.D_sum = to_long(F_exact(n1, n2) + F_exact(n2, n1) + d_exact(n1, n2) - 1);
    s.D_closed = D_closed_formula(n1, n2);
    if (s.D_sum != s.D_closed)
        throw std::logic_error("family_stats: F-sum and closed form disagree");
    auto [lt4, lt3] = inequality_verdicts(n1, n2);
    s.lt_4d = lt4;
    s.lt_3dm1 = lt3;
    return s;
}

namespace {

std::vector<Scenario> make_catalog() {
    std::vector<Scenario> c;
    auto add = [&](std::string name, IdealSpec spec, ScenarioExpectation e) {
        c.push_back({std::move(name), std::move(spec), std::move(e)});
    };
    ScenarioExpectation e;

    e = {8, 25, true, true, std::nullopt};
    add("iarrobino-emsalem", IdealSpec::family(2, 2), e);
    e = {15, 44, true, true, std::nullopt};
    add("eg1-grid-23", IdealSpec::family(2, 3), e);
    e = {24, 69, true, true, std::nullopt};
    add("eg1-grid-24", IdealSpec::family(2, 4), e);
    e = {35, 100, true, true, std::nullopt};
    add("eg1-grid-25", IdealSpec::family(2, 5), e);
    e = {27, 70, true, true, std::nullopt};
    add("eg1-grid-33", IdealSpec::family(3, 3), e);
    e = {42, 104, true, true, std::nullopt};
    add("eg1-grid-34", IdealSpec::family(3, 4), e);

    e = {27, 70, true, true, 5};
    add("eg2-chain-0", IdealSpec::family(3, 3), e);
    e = {26, 77, true, std::nullopt, std::nullopt};
    add("eg2-chain-1", IdealSpec::family(3, 3).with_extras({"x^2*z^2"}), e);
    e = {25, 82, true, std::nullopt, std::nullopt};
    add("eg2-chain-2", IdealSpec::family(3, 3).with_extras({"x^2*z^2", "x^2*w^2"}), e);
    e = {24, 85, true, true, 2};
    add("eg2-chain-3",
        IdealSpec::family(3, 3).with_extras({"x^2*z^2", "x^2*w^2", "y^2*z^2"}), e);

    e = {60, 179, std::nullopt, std::nullopt, std::nullopt};
    add("eg2-prime-a",
        IdealSpec::raw_ideal({"x^4", "x^3*y", "x^2*y^2", "x*y^3", "y^4", "z^4", "z^3*w",
                              "z^2*w^2", "z*w^3", "w^4", "x*z-y*w", "x*y^2*w^3", "x^3*w^3",
                              "y^3*z*w^2", "y^3*z^3"}),
        e);
    e = {60, 146, true, std::nullopt, std::nullopt};
    add("eg2-prime-b", IdealSpec::family(3, 5), e);

    e = {1000, 1729, true, std::nullopt, std::nullopt};
    add("taxicab", IdealSpec::family(10, 10), e);

    e = {std::nullopt, std::nullopt, true, false, std::nullopt};
    add("table1-spot-442", IdealSpec::family_variant(4, 4, 2), e);
    e = {std::nullopt, std::nullopt, true, std::nullopt, std::nullopt};
    add("table1-spot-453", IdealSpec::family_variant(4, 5, 3), e);
    add("table1-spot-553", IdealSpec::family_variant(5, 5, 3), e);
    add("table1-spot-674", IdealSpec::family_variant(6, 7, 4), e);
    add("table1-spot-675", IdealSpec::family_variant(6, 7, 5), e);
    add("table1-spot-786", IdealSpec::family_variant(7, 8, 6), e);
    return c;
}

}  // namespace

const std::vector<Scenario>& example_catalog() {
    static const std::vector<Scenario> catalog = make_catalog();
    return catalog;
}

const Scenario& find_scenario(const std::string& name) {
    for (const auto& s : example_catalog())
        if (s.name == name) return s;
    throw std::invalid_argument("unknown scenario: " + name);
}

}  // namespace ec
