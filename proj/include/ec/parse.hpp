#ifndef EC_PARSE_HPP
#define EC_PARSE_HPP

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ec/polynomial.hpp"

namespace ec {

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// Grammar: terms separated by '+'/'-'; term = [integer or integer/integer
// coefficient] ['*'] variable factors x,y,z,w each optionally '^' positive
// integer; whitespace ignored.  Example: "3*x^2*w - 1/2*y*z".
template <class F>
Polynomial<F> parse_poly(const std::string& text, const F& K) {
    using Term = typename Polynomial<F>::Term;
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto skip_ws = [&] {
        while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto parse_uint = [&]() -> long long {
        std::size_t start = i;
        long long v = 0;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + (text[i] - '0');
            if (v > (1ll << 60)) throw ParseError("integer literal too large", start);
            ++i;
        }
        if (i == start) throw ParseError("expected integer", i);
        return v;
    };
    auto var_index = [](char c) -> int {
        switch (c) {
            case 'x': return 0;
            case 'y': return 1;
            case 'z': return 2;
            case 'w': return 3;
            default: return -1;
        }
    };

    std::vector<Term> terms;
    skip_ws();
    if (i == n) throw ParseError("empty polynomial", 0);
    bool first = true;
    while (true) {
        skip_ws();
        if (i == n) {
            if (first) throw ParseError("empty polynomial", i);
            break;
        }
        bool negative = false;
        if (text[i] == '+' || text[i] == '-') {
            negative = text[i] == '-';
            ++i;
            skip_ws();
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms", i);
        }
        first = false;

        typename F::Elem coeff = K.one();
        bool saw_anything = false;
        if (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
            long long num = parse_uint();
            long long den = 1;
            skip_ws();
            if (i < n && text[i] == '/') {
                ++i;
                skip_ws();
                std::size_t dpos = i;
                den = parse_uint();
                if (den == 0) throw ParseError("zero denominator", dpos);
            }
            coeff = K.from_fraction(num, den);
            saw_anything = true;
            skip_ws();
            if (i < n && text[i] == '*') {
                ++i;
                skip_ws();
            }
        }
        Monomial m;
        while (i < n) {
            skip_ws();
            if (i >= n) break;
            char c = text[i];
            if (c == '+' || c == '-') break;
            if (c == '*') {
                ++i;
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(c))) {
                int v = var_index(c);
                if (v < 0) throw ParseError(std::string("unknown variable '") + c + "'", i);
                ++i;
                long long exp = 1;
                skip_ws();
                if (i < n && text[i] == '^') {
                    ++i;
                    skip_ws();
                    if (i < n && (text[i] == '-' || text[i] == '.'))
                        throw ParseError("exponent must be a positive integer", i);
                    std::size_t epos = i;
                    exp = parse_uint();
                    if (i < n && text[i] == '.')
                        throw ParseError("nonintegral exponent", epos);
                    if (exp <= 0) throw ParseError("exponent must be a positive integer", epos);
                    if (exp > 10000) throw ParseError("exponent too large", epos);
                }
                m.e[v] = static_cast<std::uint16_t>(m.e[v] + exp);
                saw_anything = true;
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(c)))
                throw ParseError("coefficient must precede variables", i);
            throw ParseError(std::string("unexpected character '") + c + "'", i);
        }
        if (!saw_anything) throw ParseError("expected term", i);
        if (negative) coeff = K.neg(coeff);
        terms.push_back({m, coeff});
    }
    return Polynomial<F>(K, std::move(terms));
}

template <class F>
std::vector<Polynomial<F>> parse_poly_list(const std::string& text, const F& K, char sep = ';') {
    std::vector<Polynomial<F>> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(sep, start);
        std::string piece = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
        bool blank = piece.find_first_not_of(" \t\r\n") == std::string::npos;
        if (!blank) out.push_back(parse_poly(piece, K));
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return out;
}

}  // namespace ec

#endif
