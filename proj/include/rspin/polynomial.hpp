#pragma once

#include <map>
#include <string>
#include <vector>

#include "rspin/rational.hpp"

namespace rspin {

/// Exponent vector over a fixed variable list; graded-lex comparison.
struct Monomial {
    std::vector<int> exps;

    int degree() const {
        int d = 0;
        for (int e : exps) d += e;
        return d;
    }
    bool operator==(const Monomial&) const = default;
};

inline bool operator<(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db;  // higher degree first
    return a.exps > b.exps;        // then lex, larger exponents first
}

/// Exact multivariate polynomial in expanded monomial form. The variable
/// order for chamber polynomials is (m_1, ..., m_n, r).
class Polynomial {
  public:
    explicit Polynomial(size_t vars = 0) : vars_(vars) {}

    static Polynomial constant(size_t vars, const Rational& c) {
        Polynomial p(vars);
        if (c != 0) p.terms_[Monomial{std::vector<int>(vars, 0)}] = c;
        return p;
    }
    static Polynomial variable(size_t vars, size_t index) {
        Polynomial p(vars);
        Monomial m{std::vector<int>(vars, 0)};
        m.exps[index] = 1;
        p.terms_[m] = 1;
        return p;
    }

    size_t vars() const { return vars_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int total_degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    Polynomial& operator+=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial out(a.vars_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m = ma;
                for (size_t i = 0; i < m.exps.size(); ++i) m.exps[i] += mb.exps[i];
                out.add_term(m, ca * cb);
            }
        return out;
    }

    Polynomial& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, coeff] : terms_) coeff *= c;
        return *this;
    }

    bool operator==(const Polynomial&) const = default;

    Rational evaluate(const std::vector<Rational>& point) const {
        Rational total(0);
        for (const auto& [m, c] : terms_) {
            Rational t = c;
            for (size_t i = 0; i < m.exps.size(); ++i)
                for (int e = 0; e < m.exps[i]; ++e) t *= point[i];
            total += t;
        }
        return total;
    }

    /// Canonical text form, monomials in graded-lex order.
    std::string to_text(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : terms_) {
            bool neg = c < 0;
            Rational a = neg ? Rational(-c) : c;
            out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
            std::string factors;
            for (size_t i = 0; i < m.exps.size(); ++i) {
                if (m.exps[i] == 0) continue;
                if (!factors.empty()) factors += '*';
                factors += names[i];
                if (m.exps[i] > 1) factors += '^' + std::to_string(m.exps[i]);
            }
            if (factors.empty()) {
                out += to_string(a);
            } else {
                if (a != 1) out += to_string(a) + '*';
                out += factors;
            }
        }
        return out;
    }

  private:
    void add_term(const Monomial& m, const Rational& c) {
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    size_t vars_;
    std::map<Monomial, Rational> terms_;
};

}  // namespace rspin
