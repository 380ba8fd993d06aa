#pragma once

#include <functional>
#include <memory>
#include <shared_mutex>
#include <utility>

#include "qsh/algebra.hpp"

namespace qsh {

namespace detail {

inline Element prepend_letter(int letter, const Element& e) {
    Element out(e.dim(), e.cap(), e.field());
    for (const auto& [w, c] : e.terms()) out.add_term(w.prepend(letter), c);
    return out;
}

/// Prepend a grade-1 combination (e.g. an algebra product or a unit vector).
inline Element prepend_combination(const Element& letters, const Element& e) {
    Element out(e.dim(), e.cap(), e.field());
    for (const auto& [lw, lc] : letters.terms())
        for (const auto& [w, c] : e.terms()) out.add_term(w.prepend(lw.first()), lc * c);
    return out;
}

} // namespace detail

/// Classical shuffle product on T(V):
/// u sh v = u1 (x) (u' sh v) + v1 (x) (u sh v'), with 1 as unit.
inline Element shuffle_words(const Word& u, const Word& v, int dim, int cap, Field field) {
    if (u.grade() + v.grade() > cap)
        throw TruncationOverflow("shuffle exceeds cap");
    if (u.empty()) return Element::of_word(v, dim, cap, field);
    if (v.empty()) return Element::of_word(u, dim, cap, field);
    Element left = detail::prepend_letter(u.first(), shuffle_words(u.rest(), v, dim, cap, field));
    Element right = detail::prepend_letter(v.first(), shuffle_words(u, v.rest(), dim, cap, field));
    return left + right;
}

inline Element shuffle(const Element& x, const Element& y) {
    x.check_compat(y);
    Element out(x.dim(), x.cap(), x.field());
    for (const auto& [u, cu] : x.terms())
        for (const auto& [v, cv] : y.terms())
            out += shuffle_words(u, v, x.dim(), x.cap(), x.field()).scaled(cu * cv);
    return out;
}

/// Loday's classical splitting on T^+(V):
/// u prec v = u1 (x) (u' sh v), u succ v = v1 (x) (u sh v').
inline Element shuffle_prec_words(const Word& u, const Word& v, int dim, int cap, Field field) {
    if (u.empty() || v.empty()) throw GradeZeroInput();
    return detail::prepend_letter(u.first(), shuffle_words(u.rest(), v, dim, cap, field));
}
inline Element shuffle_succ_words(const Word& u, const Word& v, int dim, int cap, Field field) {
    if (u.empty() || v.empty()) throw GradeZeroInput();
    return detail::prepend_letter(v.first(), shuffle_words(u, v.rest(), dim, cap, field));
}

/// Quantum shuffle algebra T_sigma(V): the recursion
///   u sh_(m,n) v = (id (x) sh_(m-1,n))(u (x) v)
///               + (id (x) sh_(m,n-1))(beta_{m,1} (x) id^(n-1))(u (x) v)
/// with the shuffle-set closed form as an independent oracle.
class QuantumShuffle {
public:
    QuantumShuffle(BraidingPtr sigma, int cap)
        : s_(std::move(sigma)), cap_(cap), st_(std::make_shared<State>()) {
        if (!s_->ybe_verified()) throw UnverifiedBraiding();
    }

    int dim() const { return s_->dim(); }
    int cap() const { return cap_; }
    Field field() const { return s_->field(); }
    const BraidingPtr& braiding() const { return s_; }

    Element mul(const Element& x, const Element& y) const { return bilinear(x, y, kMul); }
    Element prec(const Element& x, const Element& y) const {
        require_positive(x, y);
        return bilinear(x, y, kPrec);
    }
    Element succ(const Element& x, const Element& y) const {
        require_positive(x, y);
        return bilinear(x, y, kSucc);
    }

    Element mul_words(const Word& u, const Word& v) const {
        check_cap(u, v);
        if (u.empty()) return Element::of_word(v, dim(), cap_, field());
        if (v.empty()) return Element::of_word(u, dim(), cap_, field());
        {
            std::shared_lock lock(st_->mx);
            auto it = st_->memo.find({u, v});
            if (it != st_->memo.end()) return it->second;
        }
        Element out = prec_words(u, v) + succ_words(u, v);
        std::unique_lock lock(st_->mx);
        return st_->memo.emplace(std::make_pair(u, v), std::move(out)).first->second;
    }

    /// u prec v = (id (x) sh_(m-1,n))(u (x) v): keep u's first letter in front.
    Element prec_words(const Word& u, const Word& v) const {
        check_cap(u, v);
        if (u.empty() || v.empty()) throw GradeZeroInput();
        return detail::prepend_letter(u.first(), mul_words(u.rest(), v));
    }

    /// u succ v: braid v's first letter across u, then recurse.
    Element succ_words(const Word& u, const Word& v) const {
        check_cap(u, v);
        if (u.empty() || v.empty()) throw GradeZeroInput();
        Element out(dim(), cap_, field());
        TupleElement crossed = s_->beta_pair(u, Word::letter(v.first()), cap_);
        for (const auto& [pair, c] : crossed.terms())
            out += detail::prepend_letter(pair[0].first(), mul_words(pair[1], v.rest()))
                       .scaled(c);
        return out;
    }

    /// Closed form: sum over shuffle representatives of braid lifts.
    /// Test-only evaluation path, independent of the recursion above.
    Element oracle_words(const Word& u, const Word& v) const {
        check_cap(u, v);
        Element out(dim(), cap_, field());
        const Word joined = concat(u, v);
        for (const auto& w : shuffle_set(u.grade(), v.grade())) {
            Element lifted = s_->braid_lift(w).apply(joined); // lives at cap m+n
            for (const auto& [word, c] : lifted.terms()) out.add_term(word, c);
        }
        return out;
    }
    Element oracle(const Element& x, const Element& y) const { return bilinear(x, y, kOracle); }

private:
    enum Kind { kMul, kPrec, kSucc, kOracle };

    Element bilinear(const Element& x, const Element& y, Kind kind) const {
        x.check_compat(y);
        Element out(x.dim(), x.cap(), x.field());
        for (const auto& [u, cu] : x.terms())
            for (const auto& [v, cv] : y.terms()) {
                Element part = kind == kMul    ? mul_words(u, v)
                               : kind == kPrec ? prec_words(u, v)
                               : kind == kSucc ? succ_words(u, v)
                                               : oracle_words(u, v);
                out += part.scaled(cu * cv);
            }
        return out;
    }

    static void require_positive(const Element& x, const Element& y) {
        if (x.has_grade_zero() || y.has_grade_zero()) throw GradeZeroInput();
    }
    void check_cap(const Word& u, const Word& v) const {
        if (u.grade() + v.grade() > cap_)
            throw TruncationOverflow("quantum shuffle exceeds cap");
    }

    struct State {
        std::map<std::pair<Word, Word>, Element> memo;
        mutable std::shared_mutex mx;
    };

    BraidingPtr s_;
    int cap_;
    std::shared_ptr<State> st_;
};

/// Quantum quasi-shuffle and mixable-shuffle products over a braided algebra:
/// star on sha^+_sigma(A) = (+)_{i>=0} A^(x i), diamond on
/// sha_sigma(A) = (+)_{i>=1} A^(x i), the Rota-Baxter operator P, and the
/// dendriform pair split off P.
///
/// The middle summand of the star recursion braids the WHOLE first word
/// across the incoming letter (beta_{i,1}); the printed source's
/// beta_{i-1,1} fails its own lambda = 0 specialization, which pins the
/// corrected form here (see the specialization tests).
class QuasiShuffle {
public:
    QuasiShuffle(AlgebraPtr algebra, Scalar lambda, int cap)
        : a_(std::move(algebra)), lambda_(std::move(lambda)), cap_(cap),
          st_(std::make_shared<State>()) {
        if (!a_->sigma()->ybe_verified()) throw UnverifiedBraiding();
        if (!a_->associative_flag() || !a_->braided_flag())
            throw IncompatibleAlgebra(
                "quasi-shuffle requires a verified associative braided algebra");
        if (lambda_.field() != a_->field()) throw FieldMismatch();
    }

    int dim() const { return a_->dim(); }
    int cap() const { return cap_; }
    Field field() const { return a_->field(); }
    const Scalar& weight() const { return lambda_; }
    const AlgebraPtr& algebra() const { return a_; }

    // --- star: quantum quasi-shuffle on sha^+ ------------------------------

    Element star(const Element& x, const Element& y) const {
        x.check_compat(y);
        Element out(x.dim(), x.cap(), x.field());
        for (const auto& [u, cu] : x.terms())
            for (const auto& [v, cv] : y.terms()) out += star_words(u, v).scaled(cu * cv);
        return out;
    }

    Element star_words(const Word& u, const Word& v) const {
        if (u.grade() + v.grade() > cap_)
            throw TruncationOverflow("quasi-shuffle exceeds cap");
        if (u.empty()) return Element::of_word(v, dim(), cap_, field());
        if (v.empty()) return Element::of_word(u, dim(), cap_, field());
        {
            std::shared_lock lock(st_->mx);
            auto it = st_->star_memo.find({u, v});
            if (it != st_->star_memo.end()) return it->second;
        }
        Element out = detail::prepend_letter(u.first(), star_words(u.rest(), v));
        {
            TupleElement crossed = a_->sigma()->beta_pair(u, Word::letter(v.first()), cap_);
            for (const auto& [pair, c] : crossed.terms())
                out += detail::prepend_letter(pair[0].first(), star_words(pair[1], v.rest()))
                           .scaled(c);
        }
        if (!lambda_.is_zero()) {
            // lambda (mu (x) star_(i-1,j-1)) (id (x) beta_{i-1,1} (x) id^(j-1))
            TupleElement crossed =
                a_->sigma()->beta_pair(u.rest(), Word::letter(v.first()), cap_);
            for (const auto& [pair, c] : crossed.terms()) {
                Element heads = a_->mul_letters(u.first(), pair[0].first(), cap_);
                out += detail::prepend_combination(heads, star_words(pair[1], v.rest()))
                           .scaled(c * lambda_);
            }
        }
        std::unique_lock lock(st_->mx);
        return st_->star_memo.emplace(std::make_pair(u, v), std::move(out)).first->second;
    }

    // --- diamond: the product of sha_sigma(A) = A (x) sha^+_sigma(A) -------

    Element diamond(const Element& x, const Element& y) const {
        x.check_compat(y);
        if (x.has_grade_zero() || y.has_grade_zero()) throw GradeZeroInput();
        Element out(x.dim(), x.cap(), x.field());
        for (const auto& [u, cu] : x.terms())
            for (const auto& [v, cv] : y.terms()) out += diamond_words(u, v).scaled(cu * cv);
        return out;
    }

    /// (mu (x) star_(m,n)) (id (x) beta_{m,1} (x) id^n) on
    /// a = a0 (x) a* in A^(m+1), b = b0 (x) b* in A^(n+1).
    Element diamond_words(const Word& a, const Word& b) const {
        if (a.empty() || b.empty()) throw GradeZeroInput();
        if (a.grade() + b.grade() - 1 > cap_)
            throw TruncationOverflow("mixable product exceeds cap");
        {
            std::shared_lock lock(st_->mx);
            auto it = st_->diamond_memo.find({a, b});
            if (it != st_->diamond_memo.end()) return it->second;
        }
        const Word a_tail = a.rest();
        const Word b_tail = b.rest();
        Element out(dim(), cap_, field());
        TupleElement crossed =
            a_->sigma()->beta_pair(a_tail, Word::letter(b.first()), cap_);
        for (const auto& [pair, c] : crossed.terms()) {
            Element heads = a_->mul_letters(a.first(), pair[0].first(), cap_);
            out += detail::prepend_combination(heads, star_words(pair[1], b_tail)).scaled(c);
        }
        std::unique_lock lock(st_->mx);
        return st_->diamond_memo.emplace(std::make_pair(a, b), std::move(out)).first->second;
    }

    // --- Rota-Baxter operator and its dendriform split ---------------------

    /// P(x) = 1_A (x) x.
    Element P(const Element& x) const {
        Element unit = a_->unit_element(cap_);
        Element out(x.dim(), x.cap(), x.field());
        for (const auto& [w, c] : x.terms()) {
            if (w.grade() + 1 > cap_)
                throw TruncationOverflow("Rota-Baxter operator exceeds cap");
            out += detail::prepend_combination(unit, Element::of_word(w, dim(), cap_, field()))
                       .scaled(c);
        }
        return out;
    }

    /// x prec_P y = x d P(y) + lambda x d y,  x succ_P y = P(x) d y.
    Element prec_P(const Element& x, const Element& y) const {
        Element out = diamond(x, P(y));
        if (!lambda_.is_zero()) out += diamond(x, y).scaled(lambda_);
        return out;
    }
    Element succ_P(const Element& x, const Element& y) const { return diamond(P(x), y); }

private:
    struct State {
        std::map<std::pair<Word, Word>, Element> star_memo;
        std::map<std::pair<Word, Word>, Element> diamond_memo;
        mutable std::shared_mutex mx;
    };

    AlgebraPtr a_;
    Scalar lambda_;
    int cap_;
    std::shared_ptr<State> st_;
};

/// Classical mixable/quasi-shuffle product on sha(A) for a commutative
/// unital algebra, by the textbook three-term recursion. Independent of the
/// braided machinery; serves as the flip-specialization oracle.
inline Element classical_quasi_shuffle_words(const BraidedAlgebra& a, const Scalar& lambda,
                                             const Word& u, const Word& v, int cap) {
    if (u.empty() || v.empty()) throw GradeZeroInput();
    if (u.grade() + v.grade() - 1 > cap)
        throw TruncationOverflow("quasi-shuffle exceeds cap");
    const int d = a.dim();
    const Field f = a.field();
    Element head = a.mul_letters(u.first(), v.first(), cap);
    if (u.grade() == 1 && v.grade() == 1) return head;
    if (u.grade() == 1)
        return detail::prepend_combination(head, Element::of_word(v.rest(), d, cap, f));
    if (v.grade() == 1)
        return detail::prepend_combination(head, Element::of_word(u.rest(), d, cap, f));

    const Element unit = a.unit_element(cap);
    const Element a_tail = Element::of_word(u.rest(), d, cap, f);
    const Element b_tail = Element::of_word(v.rest(), d, cap, f);
    auto qs = [&](const Element& x, const Element& y) {
        Element out(d, cap, f);
        for (const auto& [xw, xc] : x.terms())
            for (const auto& [yw, yc] : y.terms())
                out += classical_quasi_shuffle_words(a, lambda, xw, yw, cap).scaled(xc * yc);
        return out;
    };
    Element bracket = qs(a_tail, detail::prepend_combination(unit, b_tail));
    bracket += qs(detail::prepend_combination(unit, a_tail), b_tail);
    if (!lambda.is_zero()) bracket += qs(a_tail, b_tail).scaled(lambda);
    return detail::prepend_combination(head, bracket);
}

inline Element classical_quasi_shuffle(const BraidedAlgebra& a, const Scalar& lambda,
                                       const Element& x, const Element& y) {
    x.check_compat(y);
    if (x.has_grade_zero() || y.has_grade_zero()) throw GradeZeroInput();
    Element out(x.dim(), x.cap(), x.field());
    for (const auto& [u, cu] : x.terms())
        for (const auto& [v, cv] : y.terms())
            out += classical_quasi_shuffle_words(a, lambda, u, v, x.cap()).scaled(cu * cv);
    return out;
}

/// Dendriform pair of a Rota-Baxter context:
/// x prec_P y = mul(x, P(y)) + lambda mul(x, y), x succ_P y = mul(P(x), y).
inline Element dendriform_from_rb_prec(
    const std::function<Element(const Element&, const Element&)>& mul,
    const std::function<Element(const Element&)>& P, const Scalar& lambda, const Element& x,
    const Element& y) {
    Element out = mul(x, P(y));
    if (!lambda.is_zero()) out += mul(x, y).scaled(lambda);
    return out;
}
inline Element dendriform_from_rb_succ(
    const std::function<Element(const Element&, const Element&)>& mul,
    const std::function<Element(const Element&)>& P, const Element& x, const Element& y) {
    return mul(P(x), y);
}

} // namespace qsh
