#ifndef EC_IDEAL_SPEC_HPP
#define EC_IDEAL_SPEC_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ec/parse.hpp"
#include "ec/polynomial.hpp"

namespace ec {

// Symbolic, field-independent description of an ideal: the (n1,n2) family,
// its (xz)^n3 variant, or a raw generator list, plus optional extra
// generators. Polynomials are kept as grammar strings.
struct IdealSpec {
    enum class Kind { Family, FamilyVariant, Raw };
    Kind kind = Kind::Family;
    int n1 = 0, n2 = 0, n3 = 0;
    std::vector<std::string> raw;    // Raw only
    std::vector<std::string> extra;  // appended generators

    static IdealSpec family(int n1, int n2) {
        if (n1 < 2 || n2 < 2) throw std::invalid_argument("family: need n1, n2 >= 2");
        IdealSpec s;
        s.kind = Kind::Family;
        s.n1 = n1;
        s.n2 = n2;
        return s;
    }
    static IdealSpec family_variant(int n1, int n2, int n3) {
        if (n1 < 2 || n2 < 2) throw std::invalid_argument("family_variant: need n1, n2 >= 2");
        if (n3 < 1) throw std::invalid_argument("family_variant: need n3 >= 1");
        IdealSpec s;
        s.kind = Kind::FamilyVariant;
        s.n1 = n1;
        s.n2 = n2;
        s.n3 = n3;
        return s;
    }
    static IdealSpec raw_ideal(std::vector<std::string> gens) {
        if (gens.empty()) throw std::invalid_argument("raw_ideal: empty generator list");
        IdealSpec s;
        s.kind = Kind::Raw;
        s.raw = std::move(gens);
        return s;
    }

    IdealSpec with_extras(std::vector<std::string> gens) const {
        IdealSpec s = *this;
        for (auto& g : gens) s.extra.push_back(std::move(g));
        return s;
    }

    bool family_rooted() const { return kind != Kind::Raw; }

    std::string describe() const {
        switch (kind) {
            case Kind::Family: return "family(" + std::to_string(n1) + "," + std::to_string(n2) + ")";
            case Kind::FamilyVariant:
                return "variant(" + std::to_string(n1) + "," + std::to_string(n2) + "," +
                       std::to_string(n3) + ")";
            default: return "raw[" + std::to_string(raw.size()) + "]";
        }
    }
};

// Generators x^{n1-k} y^k (0<=k<=n1), z^{n2-l} w^l (0<=l<=n2), q = xz-yw.
template <class F>
std::vector<Polynomial<F>> family_generators(int n1, int n2, const F& K) {
    if (n1 < 2 || n2 < 2) throw std::invalid_argument("family_generators: need n1, n2 >= 2");
    std::vector<Polynomial<F>> gens;
    for (int k = 0; k <= n1; ++k)
        gens.push_back(Polynomial<F>::monomial(K, mono(n1 - k, k, 0, 0), K.one()));
    for (int l = 0; l <= n2; ++l)
        gens.push_back(Polynomial<F>::monomial(K, mono(0, 0, n2 - l, l), K.one()));
    gens.push_back(mixing_quadric(K));
    return gens;
}

// The full generator list of the spec in declaration order: family part,
// then (xz)^n3 for variants, then extras, or the raw list plus extras.
template <class F>
std::vector<Polynomial<F>> expand_generators(const IdealSpec& spec, const F& K) {
    std::vector<Polynomial<F>> gens;
    if (spec.kind == IdealSpec::Kind::Raw) {
        for (const auto& s : spec.raw) gens.push_back(parse_poly(s, K));
    } else {
        gens = family_generators(spec.n1, spec.n2, K);
        if (spec.kind == IdealSpec::Kind::FamilyVariant)
            gens.push_back(Polynomial<F>::monomial(K, mono(spec.n3, 0, spec.n3, 0), K.one()));
    }
    for (const auto& s : spec.extra) gens.push_back(parse_poly(s, K));
    return gens;
}

// Extras (and the variant generator) that extend the family chain, in order.
template <class F>
std::vector<Polynomial<F>> chain_extension_generators(const IdealSpec& spec, const F& K) {
    std::vector<Polynomial<F>> out;
    if (spec.kind == IdealSpec::Kind::FamilyVariant)
        out.push_back(Polynomial<F>::monomial(K, mono(spec.n3, 0, spec.n3, 0), K.one()));
    for (const auto& s : spec.extra) out.push_back(parse_poly(s, K));
    return out;
}

}  // namespace ec

#endif
