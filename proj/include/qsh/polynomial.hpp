#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qsh/rational.hpp"

namespace qsh {

/// Univariate polynomial in the deformation parameter q with Rational
/// coefficients. Coefficients are stored in ascending degree with no
/// trailing zeros; the zero polynomial has an empty coefficient vector.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(Rational c) {
        if (!c.is_zero()) c_.push_back(std::move(c));
    }
    Polynomial(long n) : Polynomial(Rational(n)) {}
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial q() { return monomial(Rational(1), 1); }
    static Polynomial monomial(Rational c, int deg) {
        Polynomial p;
        if (!c.is_zero()) {
            p.c_.assign(static_cast<std::size_t>(deg) + 1, Rational());
            p.c_.back() = std::move(c);
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_constant() const { return c_.size() <= 1; }
    /// Degree of the zero polynomial is -1 by convention.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    int term_count() const {
        int n = 0;
        for (const auto& c : c_)
            if (!c.is_zero()) ++n;
        return n;
    }
    const Rational& coeff(int deg) const {
        static const Rational kZero;
        if (deg < 0 || deg >= static_cast<int>(c_.size())) return kZero;
        return c_[static_cast<std::size_t>(deg)];
    }
    const Rational& leading_coeff() const {
        static const Rational kZero;
        return c_.empty() ? kZero : c_.back();
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        Polynomial r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.c_.size(); ++i) {
            if (i < a.c_.size()) r.c_[i] += a.c_[i];
            if (i < b.c_.size()) r.c_[i] += b.c_[i];
        }
        r.trim();
        return r;
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial r;
        if (a.is_zero() || b.is_zero()) return r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    /// Euclidean division: returns (quotient, remainder) with deg rem < deg divisor.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const {
        if (divisor.is_zero()) throw DivisionByZero();
        Polynomial rem = *this;
        Polynomial quot;
        const int dd = divisor.degree();
        if (rem.degree() >= dd)
            quot.c_.assign(static_cast<std::size_t>(rem.degree() - dd) + 1, Rational());
        while (!rem.is_zero() && rem.degree() >= dd) {
            const int shift = rem.degree() - dd;
            Rational f = rem.leading_coeff() / divisor.leading_coeff();
            quot.c_[static_cast<std::size_t>(shift)] = f;
            for (int i = 0; i <= dd; ++i)
                rem.c_[static_cast<std::size_t>(i + shift)] -= f * divisor.coeff(i);
            rem.trim();
        }
        quot.trim();
        return {quot, rem};
    }
    friend Polynomial operator/(const Polynomial& a, const Polynomial& b) {
        return a.divmod(b).first;
    }
    friend Polynomial operator%(const Polynomial& a, const Polynomial& b) {
        return a.divmod(b).second;
    }

    /// Monic associate (zero stays zero).
    Polynomial monic() const {
        if (is_zero()) return *this;
        Polynomial r = *this;
        const Rational lc = leading_coeff();
        for (auto& c : r.c_) c /= lc;
        return r;
    }

    /// Monic gcd by the Euclidean algorithm.
    static Polynomial gcd(Polynomial a, Polynomial b) {
        while (!b.is_zero()) {
            Polynomial r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }
    friend bool operator<(const Polynomial& a, const Polynomial& b) {
        if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
        for (std::size_t i = a.c_.size(); i-- > 0;) {
            if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
        }
        return false;
    }

    /// Is this a single term c*q^k with c = 1 (so it prints without '*')?
    bool is_unit_monomial() const {
        return term_count() == 1 && leading_coeff().is_one() && !is_zero();
    }

    /// Canonical text, highest degree first: "2*q^3 + 1/2*q - 5".
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (int deg = degree(); deg >= 0; --deg) {
            const Rational& c = c_[static_cast<std::size_t>(deg)];
            if (c.is_zero()) continue;
            Rational a = c;
            if (out.empty()) {
                if (a.is_negative()) {
                    out += "-";
                    a = -a;
                }
            } else {
                out += a.is_negative() ? " - " : " + ";
                if (a.is_negative()) a = -a;
            }
            const bool unit = a.is_one();
            if (deg == 0) {
                out += a.str();
            } else {
                if (!unit) out += a.str() + "*";
                out += (deg == 1) ? "q" : "q^" + std::to_string(deg);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

} // namespace qsh
