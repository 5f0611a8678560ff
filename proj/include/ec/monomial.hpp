#ifndef EC_MONOMIAL_HPP
#define EC_MONOMIAL_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ec {

inline constexpr int kNumVars = 4;
inline constexpr char kVarNames[kNumVars] = {'x', 'y', 'z', 'w'};

// Monomial x^u1 y^u2 z^u3 w^u4 of the fixed four-variable ring.
struct Monomial {
    std::array<std::uint16_t, kNumVars> e{0, 0, 0, 0};

    int degree() const { return e[0] + e[1] + e[2] + e[3]; }
    std::pair<int, int> bidegree() const { return {e[0] + e[1], e[2] + e[3]}; }

    bool is_one() const { return degree() == 0; }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kNumVars; ++i) r.e[i] = static_cast<std::uint16_t>(e[i] + o.e[i]);
        return r;
    }
    bool divides(const Monomial& o) const {
        for (int i = 0; i < kNumVars; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    // Quotient o / this, valid when divides(o).
    Monomial quotient_of(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kNumVars; ++i) r.e[i] = static_cast<std::uint16_t>(o.e[i] - e[i]);
        return r;
    }

    bool operator==(const Monomial& o) const { return e == o.e; }

    std::uint64_t pack() const {
        return (std::uint64_t(e[0]) << 48) | (std::uint64_t(e[1]) << 32) |
               (std::uint64_t(e[2]) << 16) | std::uint64_t(e[3]);
    }

    std::string str() const;
};

inline Monomial mono(int a, int b, int c, int d) {
    Monomial m;
    m.e = {static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b),
           static_cast<std::uint16_t>(c), static_cast<std::uint16_t>(d)};
    return m;
}
inline Monomial var_mono(int v, int k = 1) {
    Monomial m;
    m.e[v] = static_cast<std::uint16_t>(k);
    return m;
}

// Graded reverse lexicographic order with x > y > z > w: higher degree wins;
// at equal degree the last nonzero entry of a - b decides (negative => a > b).
inline bool grevlex_greater(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    for (int i = kNumVars - 1; i >= 0; --i) {
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
    }
    return false;
}
inline bool grevlex_less(const Monomial& a, const Monomial& b) { return grevlex_greater(b, a); }

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return std::hash<std::uint64_t>()(m.pack()); }
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);

// All degree-d monomials, grevlex-descending. dim = C(d+3,3).
std::vector<Monomial> monomials_of_degree(int d);
// All monomials of bidegree (a,b), grevlex-descending. dim = (a+1)(b+1).
std::vector<Monomial> monomials_of_bidegree(int a, int b);

}  // namespace ec

#endif
