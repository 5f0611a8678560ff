#include "doctest.h"

#include <random>

#include "ec/field.hpp"
#include "ec/monomial.hpp"
#include "ec/parse.hpp"
#include "ec/polynomial.hpp"

using namespace ec;

namespace {

const PrimeField Kp(2147483647ull);
const RationalField Kq;

template <class F>
Polynomial<F> random_poly(const F& K, std::mt19937_64& rng, int max_terms = 6,
                          int max_exp = 3, int coeff_range = 20) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> exp(0, max_exp);
    std::uniform_int_distribution<int> coeff(-coeff_range, coeff_range);
    std::vector<typename Polynomial<F>::Term> terms;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        Monomial m = mono(exp(rng), exp(rng), exp(rng), exp(rng));
        terms.push_back({m, K.from_int(coeff(rng))});
    }
    return Polynomial<F>(K, std::move(terms));
}

}  // namespace

TEST_CASE("monomial bidegree") {
    CHECK(mono(1, 0, 1, 0).bidegree() == std::pair<int, int>{1, 1});
    CHECK(mono(0, 0, 0, 0).bidegree() == std::pair<int, int>{0, 0});
    CHECK(mono(2, 1, 0, 3).bidegree() == std::pair<int, int>{3, 3});
}

TEST_CASE("bidegree is additive under monomial multiplication") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> exp(0, 9);
    for (int i = 0; i < 1000; ++i) {
        Monomial a = mono(exp(rng), exp(rng), exp(rng), exp(rng));
        Monomial b = mono(exp(rng), exp(rng), exp(rng), exp(rng));
        auto [a1, a2] = a.bidegree();
        auto [b1, b2] = b.bidegree();
        CHECK((a * b).bidegree() == std::pair<int, int>{a1 + b1, a2 + b2});
    }
}

TEST_CASE("grevlex order x>y>z>w") {
    CHECK(grevlex_greater(mono(1, 0, 0, 0), mono(0, 1, 0, 0)));  // x > y
    CHECK(grevlex_greater(mono(0, 0, 1, 0), mono(0, 0, 0, 1)));  // z > w
    CHECK(grevlex_greater(mono(1, 0, 1, 0), mono(0, 1, 0, 1)));  // xz > yw
    CHECK(grevlex_greater(mono(0, 3, 0, 0), mono(1, 0, 1, 0)));  // degree first
}

TEST_CASE("monomial slice enumeration") {
    CHECK(monomials_of_degree(0).size() == 1);
    CHECK(monomials_of_degree(3).size() == 20);  // C(6,3)
    CHECK(monomials_of_bidegree(2, 1).size() == 6);
    for (const auto& m : monomials_of_bidegree(2, 1))
        CHECK(m.bidegree() == std::pair<int, int>{2, 1});
}

TEST_CASE("polynomial arithmetic basics") {
    auto q = mixing_quadric(Kq);  // xz - yw
    auto yw = Polynomial<RationalField>::monomial(Kq, mono(0, 1, 0, 1), Kq.one());
    auto xz = Polynomial<RationalField>::monomial(Kq, mono(1, 0, 1, 0), Kq.one());
    CHECK(q + yw == xz);

    auto x3 = parse_poly("x^3", Kq);
    CHECK(x3.partial_derivative(0) == parse_poly("3*x^2", Kq));

    auto lhs = parse_poly("x+y", Kq) * parse_poly("x-y", Kq);
    CHECK(lhs == parse_poly("x^2-y^2", Kq));
}

TEST_CASE("multiplication is commutative and associative") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 1000; ++i) {
        auto f = random_poly(Kp, rng), g = random_poly(Kp, rng), h = random_poly(Kp, rng);
        CHECK(f * g == g * f);
        CHECK((f * g) * h == f * (g * h));
    }
}

TEST_CASE("product Leibniz rule for partial derivatives") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 400; ++i) {
        auto f = random_poly(Kq, rng, 4, 3, 9), g = random_poly(Kq, rng, 4, 3, 9);
        for (int v = 0; v < kNumVars; ++v) {
            auto lhs = (f * g).partial_derivative(v);
            auto rhs = f.partial_derivative(v) * g + f * g.partial_derivative(v);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("prime and rational products agree after reduction") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 300; ++i) {
        auto f = random_poly(Kq, rng), g = random_poly(Kq, rng);
        auto fq = f * g;
        auto lift = [&](const Polynomial<RationalField>& p) {
            std::vector<Polynomial<PrimeField>::Term> terms;
            for (const auto& t : p.terms()) terms.push_back({t.first, reduce_mod(t.second, Kp)});
            return Polynomial<PrimeField>(Kp, std::move(terms));
        };
        CHECK(lift(f) * lift(g) == lift(fq));
    }
}

TEST_CASE("mixed-field operands rejected") {
    PrimeField K2(2147483629ull);
    auto f = Polynomial<PrimeField>::variable(Kp, 0);
    auto g = Polynomial<PrimeField>::variable(K2, 0);
    CHECK_THROWS_AS(f + g, std::invalid_argument);
    CHECK_THROWS_AS(f * g, std::invalid_argument);
}

TEST_CASE("parse grammar") {
    CHECK(parse_poly("x*z - y*w", Kq) == mixing_quadric(Kq));
    CHECK(parse_poly("x^2*z^2", Kq) ==
          Polynomial<RationalField>::monomial(Kq, mono(2, 0, 2, 0), Kq.one()));
    CHECK(parse_poly("3*x^2*w - 1/2*y*z", Kq).term_count() == 2);
    CHECK(parse_poly(" 2 * x ^ 2 ", Kq) == parse_poly("2x^2", Kq));
    CHECK(parse_poly("x+x", Kq) == parse_poly("2*x", Kq));
    CHECK(parse_poly("x-x", Kq).is_zero());

    CHECK_THROWS_AS(parse_poly("x + q", Kq), ParseError);
    CHECK_THROWS_AS(parse_poly("x^1.5", Kq), ParseError);
    CHECK_THROWS_AS(parse_poly("x^0", Kq), ParseError);
    CHECK_THROWS_AS(parse_poly("", Kq), ParseError);
    CHECK_THROWS_AS(parse_poly("x +", Kq), ParseError);
    try {
        parse_poly("x*z + a", Kq);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.position == 6);  // points at the offending character
    }
    // fractional coefficients act through field division mod p
    auto half = parse_poly("1/2*x", Kp);
    CHECK(Kp.mul(half.leading_term().second, 2) == Kp.one());
}

TEST_CASE("printing round-trips through the parser") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 300; ++i) {
        auto f = random_poly(Kq, rng);
        if (f.is_zero()) continue;
        CHECK(parse_poly(f.str(), Kq) == f);
    }
    for (int i = 0; i < 300; ++i) {
        auto f = random_poly(Kp, rng);
        if (f.is_zero()) continue;
        CHECK(parse_poly(f.str(), Kp) == f);
    }
}

TEST_CASE("field spec validation") {
    CHECK(FieldSpec::prime(2147483647ull).p == 2147483647ull);
    CHECK_THROWS_AS(FieldSpec::prime(2147483645ull), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::prime(1048573ull), std::invalid_argument);  // < 2^20
    CHECK_THROWS_AS(FieldSpec::prime((1ull << 33) + 17), std::invalid_argument);
    CHECK(FieldSpec::rationals().mode == FieldSpec::Mode::Rationals);
}

TEST_CASE("deterministic primality test") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(2147483647ull));
    CHECK(is_prime_u64(4611686018427387847ull));  // prime near 2^62
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(3215031751ull));  // strong pseudoprime to 2,3,5,7
    CHECK_FALSE(is_prime_u64(2147483647ull * 3));
    CHECK(next_prime_u64(1048577) > (1ull << 20));
    CHECK(is_prime_u64(next_prime_u64(1234567891)));
}

TEST_CASE("prime field arithmetic") {
    for (std::uint64_t a : {1ull, 2ull, 12345ull, 2147483646ull}) {
        CHECK(Kp.mul(a, Kp.inv(a)) == 1);
    }
    CHECK(Kp.from_int(-1) == 2147483646ull);
    CHECK(Kp.from_fraction(1, 3) == Kp.inv(3));
}
