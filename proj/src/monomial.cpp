#include "ec/monomial.hpp"

#include <algorithm>

namespace ec {

std::string Monomial::str() const {
    if (is_one()) return "1";
    std::string s;
    for (int i = 0; i < kNumVars; ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += kVarNames[i];
        if (e[i] > 1) {
            s += '^';
            s += std::to_string(e[i]);
        }
    }
    return s;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kNumVars; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kNumVars; ++i) r.e[i] = std::min(a.e[i], b.e[i]);
    return r;
}

std::vector<Monomial> monomials_of_degree(int d) {
    std::vector<Monomial> out;
    if (d < 0) return out;
    for (int a = d; a >= 0; --a)
        for (int b = d - a; b >= 0; --b)
            for (int c = d - a - b; c >= 0; --c) out.push_back(mono(a, b, c, d - a - b - c));
    std::sort(out.begin(), out.end(), grevlex_greater);
    return out;
}

std::vector<Monomial> monomials_of_bidegree(int a, int b) {
    std::vector<Monomial> out;
    if (a < 0 || b < 0) return out;
    for (int i = 0; i <= a; ++i)
        for (int j = 0; j <= b; ++j) out.push_back(mono(i, a - i, j, b - j));
    std::sort(out.begin(), out.end(), grevlex_greater);
    return out;
}

}  // namespace ec
