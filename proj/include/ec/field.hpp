#ifndef EC_FIELD_HPP
#define EC_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace ec {

// Deterministic Miller-Rabin, valid for all n < 2^62.
bool is_prime_u64(std::uint64_t n);

// Smallest prime >= lo (lo < 2^31). Used to draw random moduli for
// prime-independence checks.
std::uint64_t next_prime_u64(std::uint64_t lo);

// Prime field F_p with p an odd prime, 2^20 < p < 2^31. The upper bound keeps
// a + q*b below 2^63 in the elimination kernels.
class PrimeField {
public:
    using Elem = std::uint64_t;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (p <= (1ull << 20))
            throw std::invalid_argument("PrimeField: modulus must exceed 2^20");
        if (p >= (1ull << 31))
            throw std::invalid_argument("PrimeField: modulus must be below 2^31");
        if (p % 2 == 0 || !is_prime_u64(p))
            throw std::invalid_argument("PrimeField: modulus is not an odd prime");
    }

    std::uint64_t modulus() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }

    Elem add(Elem a, Elem b) const {
        Elem s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p_; }

    // a + c*b without intermediate reduction of the product.
    Elem addmul(Elem a, Elem b, Elem c) const { return (a + b * c) % p_; }

    Elem inv(Elem a) const {
        if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
        return pow(a, p_ - 2);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    Elem pow(Elem a, std::uint64_t e) const {
        Elem r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    Elem from_int(long long v) const {
        long long m = v % static_cast<long long>(p_);
        if (m < 0) m += static_cast<long long>(p_);
        return static_cast<Elem>(m);
    }
    Elem from_fraction(long long num, long long den) const {
        return div(from_int(num), from_int(den));
    }

    std::string to_string(Elem a) const { return std::to_string(a); }

    bool same(const PrimeField& o) const { return p_ == o.p_; }

private:
    std::uint64_t p_;
};

// Exact rationals backed by GMP; the audit field for small instances.
class RationalField {
public:
    using Elem = mpq_class;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem addmul(const Elem& a, const Elem& b, const Elem& c) const { return a + b * c; }
    Elem inv(const Elem& a) const {
        if (sgn(a) == 0) throw std::domain_error("RationalField: inverse of zero");
        return 1 / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return a / inv_guard(b); }

    Elem from_int(long long v) const { return Elem(static_cast<long>(v)); }
    Elem from_fraction(long long num, long long den) const {
        if (den == 0) throw std::domain_error("RationalField: zero denominator");
        Elem q(static_cast<long>(num), static_cast<long>(den));
        q.canonicalize();
        return q;
    }

    std::string to_string(const Elem& a) const { return a.get_str(); }

    bool same(const RationalField&) const { return true; }

private:
    const Elem& inv_guard(const Elem& b) const {
        if (sgn(b) == 0) throw std::domain_error("RationalField: division by zero");
        return b;
    }
};

// Reduce a rational mod p; denominator must be a unit.
inline PrimeField::Elem reduce_mod(const mpq_class& q, const PrimeField& K) {
    mpz_class num = q.get_num(), den = q.get_den();
    mpz_class p(static_cast<unsigned long>(K.modulus()));
    mpz_class nr = num % p, dr = den % p;
    if (nr < 0) nr += p;
    if (dr < 0) dr += p;
    if (dr == 0) throw std::domain_error("reduce_mod: denominator divisible by p");
    return K.div(nr.get_ui(), dr.get_ui());
}

// Runtime description of the coefficient field; construction validates the
// modulus so downstream code can assume a usable field.
struct FieldSpec {
    enum class Mode { Rationals, Prime };
    Mode mode = Mode::Prime;
    std::uint64_t p = 2147483647ull;  // default modulus 2^31 - 1

    static FieldSpec rationals() { return FieldSpec{Mode::Rationals, 0}; }
    static FieldSpec prime(std::uint64_t p) {
        PrimeField check(p);  // validates
        return FieldSpec{Mode::Prime, check.modulus()};
    }

    bool operator==(const FieldSpec& o) const { return mode == o.mode && p == o.p; }
};

}  // namespace ec

#endif
