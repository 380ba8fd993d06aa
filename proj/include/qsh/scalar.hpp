#pragma once

#include <cctype>
#include <string>
#include <utility>
#include <variant>

#include "qsh/polynomial.hpp"

namespace qsh {

/// Ground field of a session: the rationals or rational functions in q.
enum class Field { Q, Qq };

inline std::string field_name(Field f) { return f == Field::Q ? "Q" : "Q(q)"; }

/// Quotient of two polynomials in canonical form: numerator and denominator
/// coprime, denominator monic, zero is 0/1.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Rational(1)) {}
    RationalFunction(Rational c) : num_(std::move(c)), den_(Rational(1)) {}
    RationalFunction(Polynomial p) : num_(std::move(p)), den_(Rational(1)) {}
    RationalFunction(Polynomial n, Polynomial d) { assign(std::move(n), std::move(d)); }

    static RationalFunction q() { return RationalFunction(Polynomial::q()); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    RationalFunction operator-() const {
        RationalFunction r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return a + (-b);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw DivisionByZero();
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    RationalFunction inverse() const {
        if (is_zero()) throw DivisionByZero();
        return RationalFunction(den_, num_);
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
        return !(a == b);
    }
    friend bool operator<(const RationalFunction& a, const RationalFunction& b) {
        if (a.den_ != b.den_) return a.den_ < b.den_;
        return a.num_ < b.num_;
    }

    /// True (for the " - " join in element printing) when the numerator's
    /// leading coefficient is negative; the denominator is monic.
    bool display_negative() const { return num_.leading_coeff().is_negative(); }

    std::string str() const {
        if (den_.is_one()) return num_.str();
        std::string n = (num_.term_count() >= 2) ? "(" + num_.str() + ")" : num_.str();
        std::string d = den_.is_unit_monomial() ? den_.str() : "(" + den_.str() + ")";
        return n + "/" + d;
    }

private:
    void assign(Polynomial n, Polynomial d) {
        if (d.is_zero()) throw DivisionByZero();
        if (n.is_zero()) {
            num_ = Polynomial();
            den_ = Polynomial(Rational(1));
            return;
        }
        Polynomial g = Polynomial::gcd(n, d);
        n = n / g;
        d = d / g;
        const Rational lc = d.leading_coeff();
        num_ = Polynomial();
        den_ = Polynomial();
        for (int i = 0; i <= n.degree(); ++i)
            num_ += Polynomial::monomial(n.coeff(i) / lc, i);
        for (int i = 0; i <= d.degree(); ++i)
            den_ += Polynomial::monomial(d.coeff(i) / lc, i);
    }

    Polynomial num_, den_;
};

/// Exact field element, tagged by the ambient field. All scalars appearing
/// together in one element or operation must share the same field.
class Scalar {
public:
    Scalar() : field_(Field::Q), v_(Rational()) {}
    explicit Scalar(Rational r) : field_(Field::Q), v_(std::move(r)) {}
    explicit Scalar(RationalFunction f) : field_(Field::Qq), v_(std::move(f)) {}

    static Scalar zero(Field f) {
        return f == Field::Q ? Scalar(Rational()) : Scalar(RationalFunction());
    }
    static Scalar one(Field f) {
        return f == Field::Q ? Scalar(Rational(1)) : Scalar(RationalFunction(Rational(1)));
    }
    static Scalar integer(Field f, long n) {
        return f == Field::Q ? Scalar(Rational(n)) : Scalar(RationalFunction(Rational(n)));
    }
    static Scalar q() { return Scalar(RationalFunction::q()); }

    Field field() const { return field_; }
    bool is_zero() const {
        return field_ == Field::Q ? rat().is_zero() : fun().is_zero();
    }
    bool is_one() const { return field_ == Field::Q ? rat().is_one() : fun().is_one(); }

    const Rational& rat() const { return std::get<Rational>(v_); }
    const RationalFunction& fun() const { return std::get<RationalFunction>(v_); }

    Scalar operator-() const {
        return field_ == Field::Q ? Scalar(-rat()) : Scalar(-fun());
    }
    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        a.check(b);
        return a.field_ == Field::Q ? Scalar(a.rat() + b.rat()) : Scalar(a.fun() + b.fun());
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        a.check(b);
        return a.field_ == Field::Q ? Scalar(a.rat() * b.rat()) : Scalar(a.fun() * b.fun());
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        a.check(b);
        return a.field_ == Field::Q ? Scalar(a.rat() / b.rat()) : Scalar(a.fun() / b.fun());
    }
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar inverse() const {
        return field_ == Field::Q ? Scalar(rat().inverse()) : Scalar(fun().inverse());
    }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        a.check(b);
        return a.field_ == Field::Q ? a.rat() == b.rat() : a.fun() == b.fun();
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    bool display_negative() const {
        return field_ == Field::Q ? rat().is_negative() : fun().display_negative();
    }
    /// Whether the printed form needs parentheses when prefixed to "*word".
    bool needs_parens_as_coeff() const {
        if (field_ == Field::Q) return false;
        return fun().is_polynomial() && fun().num().term_count() >= 2;
    }

    std::string str() const { return field_ == Field::Q ? rat().str() : fun().str(); }

private:
    void check(const Scalar& o) const {
        if (field_ != o.field_) throw FieldMismatch();
    }

    Field field_;
    std::variant<Rational, RationalFunction> v_;
};

inline Scalar scalar_arith(const Scalar& a, const Scalar& b, char op) {
    switch (op) {
        case '+': return a + b;
        case '-': return a - b;
        case '*': return a * b;
        case '/': return a / b;
        default: throw Error("unknown scalar operation");
    }
}

namespace detail {

/// Recursive-descent parser for the scalar grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := ('-'|'+') factor | primary ('^' signed-integer)?
///   primary:= integer | 'q' | '(' expr ')'
class ScalarParser {
public:
    ScalarParser(const std::string& text, Field field) : s_(text), field_(field) {}

    Scalar parse() {
        Scalar v = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
        return v;
    }

private:
    Scalar expr() {
        Scalar v = term();
        for (;;) {
            skip_ws();
            if (peek() == '+') {
                ++pos_;
                v += term();
            } else if (peek() == '-') {
                ++pos_;
                v -= term();
            } else {
                return v;
            }
        }
    }

    Scalar term() {
        Scalar v = factor();
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                v *= factor();
            } else if (peek() == '/') {
                ++pos_;
                v = v / factor();
            } else {
                return v;
            }
        }
    }

    Scalar factor() {
        skip_ws();
        if (peek() == '-') {
            ++pos_;
            return -factor();
        }
        if (peek() == '+') {
            ++pos_;
            return factor();
        }
        Scalar base = primary();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            long e = parse_exponent();
            return pow(base, e);
        }
        return base;
    }

    Scalar primary() {
        skip_ws();
        const char c = peek();
        if (c == '(') {
            ++pos_;
            Scalar v = expr();
            skip_ws();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return v;
        }
        if (c == 'q') {
            if (field_ != Field::Qq)
                throw ParseError("parameter q is not available over field Q", pos_);
            ++pos_;
            return Scalar::q();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            Rational r = Rational::from_integer_string(s_.substr(start, pos_ - start));
            return field_ == Field::Q ? Scalar(std::move(r))
                                      : Scalar(RationalFunction(std::move(r)));
        }
        throw ParseError("expected number, 'q' or '('", pos_);
    }

    long parse_exponent() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        } else if (peek() == '+') {
            ++pos_;
        }
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected integer exponent", pos_);
        long e = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            e = e * 10 + (peek() - '0');
            if (e > 1000000) throw ParseError("exponent too large", pos_);
            ++pos_;
        }
        return neg ? -e : e;
    }

    static Scalar pow(const Scalar& base, long e) {
        Scalar b = base;
        if (e < 0) {
            b = base.inverse();
            e = -e;
        }
        Scalar acc = Scalar::one(base.field());
        for (long i = 0; i < e; ++i) acc *= b;
        return acc;
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    const std::string& s_;
    Field field_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline Scalar scalar_parse(const std::string& text, Field field) {
    return detail::ScalarParser(text, field).parse();
}

inline std::string scalar_print(const Scalar& s) { return s.str(); }

} // namespace qsh
