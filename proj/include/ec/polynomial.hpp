#ifndef EC_POLYNOMIAL_HPP
#define EC_POLYNOMIAL_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ec/field.hpp"
#include "ec/monomial.hpp"

namespace ec {

// Sparse polynomial in k[x,y,z,w]: nonzero terms in grevlex-descending order.
template <class F>
class Polynomial {
public:
    using Elem = typename F::Elem;
    using Term = std::pair<Monomial, Elem>;

    explicit Polynomial(const F& K) : K_(K) {}
    Polynomial(const F& K, std::vector<Term> terms) : K_(K), terms_(std::move(terms)) {
        normalize();
    }

    static Polynomial zero(const F& K) { return Polynomial(K); }
    static Polynomial constant(const F& K, Elem c) {
        Polynomial p(K);
        if (!K.is_zero(c)) p.terms_.push_back({Monomial{}, c});
        return p;
    }
    static Polynomial monomial(const F& K, const Monomial& m, Elem c) {
        Polynomial p(K);
        if (!K.is_zero(c)) p.terms_.push_back({m, c});
        return p;
    }
    static Polynomial variable(const F& K, int v) {
        return monomial(K, var_mono(v), K.one());
    }

    const F& field() const { return K_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    const Term& leading_term() const {
        if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
        return terms_.front();
    }

    // Degree of the leading term; -1 for the zero polynomial.
    int degree() const { return terms_.empty() ? -1 : terms_.front().first.degree(); }

    bool is_homogeneous() const {
        for (const auto& t : terms_)
            if (t.first.degree() != terms_.front().first.degree()) return false;
        return true;
    }
    bool is_bihomogeneous() const {
        for (const auto& t : terms_)
            if (t.first.bidegree() != terms_.front().first.bidegree()) return false;
        return true;
    }
    std::optional<std::pair<int, int>> bidegree() const {
        if (terms_.empty() || !is_bihomogeneous()) return std::nullopt;
        return terms_.front().first.bidegree();
    }

    Polynomial operator+(const Polynomial& o) const {
        check_field(o);
        Polynomial r(K_);
        r.terms_.reserve(terms_.size() + o.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() || j < o.terms_.size()) {
            if (j == o.terms_.size() ||
                (i < terms_.size() && grevlex_greater(terms_[i].first, o.terms_[j].first))) {
                r.terms_.push_back(terms_[i++]);
            } else if (i == terms_.size() || grevlex_greater(o.terms_[j].first, terms_[i].first)) {
                r.terms_.push_back(o.terms_[j++]);
            } else {
                Elem c = K_.add(terms_[i].second, o.terms_[j].second);
                if (!K_.is_zero(c)) r.terms_.push_back({terms_[i].first, c});
                ++i;
                ++j;
            }
        }
        return r;
    }
    Polynomial operator-(const Polynomial& o) const { return *this + o.negated(); }
    Polynomial negated() const {
        Polynomial r(K_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.first, K_.neg(t.second)});
        return r;
    }
    Polynomial operator-() const { return negated(); }

    Polynomial scaled(Elem c) const {
        Polynomial r(K_);
        if (K_.is_zero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            Elem v = K_.mul(t.second, c);
            if (!K_.is_zero(v)) r.terms_.push_back({t.first, v});
        }
        return r;
    }
    Polynomial times_monomial(const Monomial& m, Elem c) const {
        Polynomial r(K_);
        if (K_.is_zero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            Elem v = K_.mul(t.second, c);
            if (!K_.is_zero(v)) r.terms_.push_back({t.first * m, v});
        }
        return r;  // monomial shift preserves grevlex order
    }

    Polynomial operator*(const Polynomial& o) const {
        check_field(o);
        std::unordered_map<Monomial, Elem, MonomialHash> acc;
        acc.reserve(terms_.size() * o.terms_.size());
        for (const auto& a : terms_) {
            for (const auto& b : o.terms_) {
                Monomial m = a.first * b.first;
                auto it = acc.find(m);
                if (it == acc.end())
                    acc.emplace(m, K_.mul(a.second, b.second));
                else
                    it->second = K_.addmul(it->second, a.second, b.second);
            }
        }
        Polynomial r(K_);
        r.terms_.reserve(acc.size());
        for (auto& kv : acc)
            if (!K_.is_zero(kv.second)) r.terms_.push_back({kv.first, kv.second});
        std::sort(r.terms_.begin(), r.terms_.end(),
                  [](const Term& s, const Term& t) { return grevlex_greater(s.first, t.first); });
        return r;
    }

    // Formal partial derivative in variable v.
    Polynomial partial_derivative(int v) const {
        Polynomial r(K_);
        for (const auto& t : terms_) {
            int e = t.first.e[v];
            if (e == 0) continue;
            Monomial m = t.first;
            m.e[v] = static_cast<std::uint16_t>(e - 1);
            Elem c = K_.mul(t.second, K_.from_int(e));
            if (!K_.is_zero(c)) r.terms_.push_back({m, c});
        }
        return r;
    }

    bool operator==(const Polynomial& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            if (!(terms_[i].first == o.terms_[i].first)) return false;
            if (!K_.eq(terms_[i].second, o.terms_[i].second)) return false;
        }
        return true;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& t : terms_) {
            std::string c = K_.to_string(t.second);
            bool negative = !c.empty() && c[0] == '-';
            if (negative) c = c.substr(1);
            if (first) {
                if (negative) s += "-";
                first = false;
            } else {
                s += negative ? " - " : " + ";
            }
            if (t.first.is_one()) {
                s += c;
            } else if (c == "1") {
                s += t.first.str();
            } else {
                s += c + "*" + t.first.str();
            }
        }
        return s;
    }

private:
    void normalize() {
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term& s, const Term& t) { return grevlex_greater(s.first, t.first); });
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!out.empty() && out.back().first == t.first)
                out.back().second = K_.add(out.back().second, t.second);
            else
                out.push_back(t);
        }
        std::erase_if(out, [&](const Term& t) { return K_.is_zero(t.second); });
        terms_ = std::move(out);
    }
    void check_field(const Polynomial& o) const {
        if (!K_.same(o.K_))
            throw std::invalid_argument("polynomial arithmetic across distinct fields");
    }

    F K_;
    std::vector<Term> terms_;
};

// q = xz - yw, the mixing relation shared by the whole ideal family.
template <class F>
Polynomial<F> mixing_quadric(const F& K) {
    return Polynomial<F>(K, {{mono(1, 0, 1, 0), K.one()}, {mono(0, 1, 0, 1), K.neg(K.one())}});
}

}  // namespace ec

#endif
