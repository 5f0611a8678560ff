#include "doctest.h"

#include <random>

#include "ec/ideal_spec.hpp"
#include "ec/oracle.hpp"
#include "ec/parse.hpp"

using namespace ec;
using namespace ec::oracle;

namespace {
const PrimeField Kp(2147483647ull);
const RationalField Kq;

template <class F>
bool is_autoreduced(const GroebnerBasis<F>& G) {
    for (std::size_t i = 0; i < G.basis.size(); ++i) {
        for (std::size_t j = 0; j < G.basis.size(); ++j) {
            if (i == j) continue;
            const Monomial& ltj = G.basis[j].leading_term().first;
            for (const auto& t : G.basis[i].terms())
                if (ltj.divides(t.first)) return false;
        }
    }
    return true;
}

template <class F>
bool s_pairs_reduce_to_zero(const GroebnerBasis<F>& G, const F& K) {
    for (std::size_t i = 0; i < G.basis.size(); ++i) {
        for (std::size_t j = i + 1; j < G.basis.size(); ++j) {
            const auto& f = G.basis[i];
            const auto& g = G.basis[j];
            Monomial L = lcm(f.leading_term().first, g.leading_term().first);
            auto s = f.times_monomial(f.leading_term().first.quotient_of(L),
                                      K.inv(f.leading_term().second)) -
                     g.times_monomial(g.leading_term().first.quotient_of(L),
                                      K.inv(g.leading_term().second));
            if (!oracle_normal_form(s, G).is_zero()) return false;
        }
    }
    return true;
}
}  // namespace

TEST_CASE("buchberger on trivial inputs") {
    auto G = buchberger<RationalField>({parse_poly("x", Kq)});
    CHECK(G.basis.size() == 1);
    CHECK(G.basis[0] == parse_poly("x", Kq));

    auto Gq = buchberger<RationalField>({mixing_quadric(Kq)});
    CHECK(Gq.basis.size() == 1);
    CHECK(s_pairs_reduce_to_zero(Gq, Kq));
}

TEST_CASE("family generators form a Groebner basis with staircase colength") {
    auto G = buchberger(family_generators(2, 2, Kq));
    CHECK(is_autoreduced(G));
    CHECK(s_pairs_reduce_to_zero(G, Kq));
    CHECK(staircase(G).size() == 8);

    auto G33 = buchberger(family_generators(3, 3, Kp));
    CHECK(staircase(G33).size() == 27);
    CHECK(s_pairs_reduce_to_zero(G33, Kp));
}

TEST_CASE("staircase dimensions match the quotient module") {
    for (int n1 = 2; n1 <= 4; ++n1)
        for (int n2 = 2; n2 <= 4; ++n2) {
            auto G = buchberger(family_generators(n1, n2, Kp));
            CHECK(staircase(G).size() ==
                  static_cast<std::size_t>(n1 * n2 * (n1 + n2) / 2));
        }
    auto Gv = buchberger(expand_generators(IdealSpec::family_variant(4, 4, 2), Kp));
    CHECK(staircase(Gv).size() == 56);
}

TEST_CASE("staircase requires an Artinian ideal") {
    auto G = buchberger<PrimeField>({parse_poly("x", Kp), parse_poly("y", Kp),
                                     parse_poly("z", Kp)});
    CHECK_THROWS_AS(staircase(G), std::runtime_error);
}

TEST_CASE("oracle normal form") {
    auto G = buchberger(family_generators(2, 2, Kq));
    auto yw = parse_poly("y*w", Kq);
    auto xz = parse_poly("x*z", Kq);
    // the two representatives of the same residue class reduce identically
    CHECK(oracle_normal_form(yw, G) == oracle_normal_form(xz, G));
    CHECK(oracle_normal_form(parse_poly("x^2", Kq), G).is_zero());
    CHECK(oracle_normal_form(parse_poly("1", Kq), G) == parse_poly("1", Kq));
}

TEST_CASE("membership cofactors") {
    auto gens = family_generators(2, 2, Kq);
    auto G = buchberger(gens);
    // yw is not in the ideal (its residue class is nonzero)
    CHECK_FALSE(cofactors_of(parse_poly("y*w", Kq), G).has_value());
    CHECK_FALSE(cofactors_of(parse_poly("x", Kq), G).has_value());
    // a generator certifies with a unit cofactor
    auto c = cofactors_of(parse_poly("x^2", Kq), G);
    REQUIRE(c.has_value());
    CHECK((*c)[0] == parse_poly("1", Kq));
    // yw - xz = -q
    auto cq = cofactors_of(parse_poly("y*w-x*z", Kq), G);
    REQUIRE(cq.has_value());
    CHECK((*cq)[6] == parse_poly("-1", Kq));

    // random ideal combinations certify and expand exactly
    std::mt19937_64 rng(59);
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> exp(0, 2);
    for (int iter = 0; iter < 100; ++iter) {
        Polynomial<RationalField> p = Polynomial<RationalField>::zero(Kq);
        for (const auto& g : gens) {
            Monomial m = mono(exp(rng), exp(rng), exp(rng), exp(rng));
            p = p + g.times_monomial(m, Kq.from_int(coeff(rng)));
        }
        auto cert = cofactors_of(p, G);
        REQUIRE(cert.has_value());  // expansion is checked inside
    }
}

TEST_CASE("oracle hom dimensions") {
    HomOracle<PrimeField> h22(family_generators(2, 2, Kp), Kp);
    CHECK(h22.quotient_dimension() == 8);
    CHECK(h22.hom_dim(-1) == 4);
    CHECK(h22.hom_dim(-2) == 0);
    long total = 0;
    for (const auto& [j, d] : h22.hom_all()) total += d;
    CHECK(total == 25);

    HomOracle<PrimeField> ci({parse_poly("y", Kp), parse_poly("z", Kp), parse_poly("w", Kp),
                              parse_poly("x^2", Kp)},
                             Kp);
    CHECK(ci.hom_dim(-2) == 1);

    // instance-size guard: family(5,5) has colength 125 > 100
    CHECK_THROWS_AS(HomOracle<PrimeField>(family_generators(5, 5, Kp), Kp),
                    std::runtime_error);
}

TEST_CASE("groebner works identically over the rationals and mod p") {
    auto Gq = buchberger(family_generators(3, 2, Kq));
    auto Gp = buchberger(family_generators(3, 2, Kp));
    CHECK(Gq.basis.size() == Gp.basis.size());
    CHECK(staircase(Gq).size() == staircase(Gp).size());
}
