#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qsh/scalar.hpp"
#include "qsh/word.hpp"

namespace qsh {

/// Finite scalar-weighted combination of basis words in a degree-truncated
/// tensor space. Stored sparsely; zero coefficients are never kept.
class Element {
public:
    Element(int dim, int cap, Field field) : dim_(dim), cap_(cap), field_(field) {}

    static Element zero(int dim, int cap, Field field) { return Element(dim, cap, field); }
    static Element of_word(const Word& w, int dim, int cap, Field field) {
        Element e(dim, cap, field);
        e.add_term(w, Scalar::one(field));
        return e;
    }
    static Element unit(int dim, int cap, Field field) {
        return of_word(Word(), dim, cap, field);
    }

    int dim() const { return dim_; }
    int cap() const { return cap_; }
    Field field() const { return field_; }
    const std::map<Word, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Accumulate c on w, dropping the entry if it cancels.
    /// Enforces the truncation contract and the letter range.
    void add_term(const Word& w, const Scalar& c) {
        if (c.is_zero()) return;
        if (w.grade() > cap_)
            throw TruncationOverflow("word " + w.str() + " exceeds cap " +
                                     std::to_string(cap_));
        if (w.max_letter() > dim_)
            throw DimensionMismatch("letter out of range in " + w.str());
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(w, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Scalar coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Scalar::zero(field_) : it->second;
    }

    Element operator-() const {
        Element r(dim_, cap_, field_);
        for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
        return r;
    }
    friend Element operator+(const Element& a, const Element& b) {
        a.check_compat(b);
        Element r = a;
        for (const auto& [w, c] : b.terms_) r.add_term(w, c);
        return r;
    }
    friend Element operator-(const Element& a, const Element& b) { return a + (-b); }
    Element& operator+=(const Element& o) { return *this = *this + o; }
    Element& operator-=(const Element& o) { return *this = *this - o; }

    Element scaled(const Scalar& c) const {
        Element r(dim_, cap_, field_);
        if (c.is_zero()) return r;
        for (const auto& [w, k] : terms_) r.terms_.emplace(w, k * c);
        return r;
    }

    friend bool operator==(const Element& a, const Element& b) {
        a.check_compat(b);
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

    /// Largest grade carrying a nonzero term (-1 if zero).
    int top_grade() const {
        return terms_.empty() ? -1 : terms_.rbegin()->first.grade();
    }
    int min_grade() const {
        return terms_.empty() ? -1 : terms_.begin()->first.grade();
    }
    bool has_grade_zero() const { return terms_.count(Word()) > 0; }

    /// Canonical text: terms in word order, e.g. "e1|e2 + q*e2|e1 - 3*e1".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [w, c] : terms_) {
            Scalar a = c;
            if (out.empty()) {
                if (a.display_negative()) {
                    out += "-";
                    a = -a;
                }
            } else {
                out += a.display_negative() ? " - " : " + ";
                if (a.display_negative()) a = -a;
            }
            if (a.is_one()) {
                out += w.str();
            } else {
                std::string cs = a.str();
                if (a.needs_parens_as_coeff()) cs = "(" + cs + ")";
                out += cs + "*" + w.str();
            }
        }
        return out;
    }

    void check_compat(const Element& o) const {
        if (dim_ != o.dim_ || cap_ != o.cap_)
            throw DimensionMismatch("elements live in different truncated spaces");
        if (field_ != o.field_) throw FieldMismatch();
    }

private:
    int dim_;
    int cap_;
    Field field_;
    std::map<Word, Scalar> terms_;
};

inline Element element_add(const Element& x, const Element& y) { return x + y; }
inline Element element_scale(const Element& x, const Scalar& c) { return x.scaled(c); }

/// Element of an external tensor power T(V) (x) ... (x) T(V): a combination
/// of tuples of basis words. Arity 1 coincides with Element; arity 2 carries
/// coproduct outputs.
class TupleElement {
public:
    using Key = std::vector<Word>;

    TupleElement(int arity, int dim, int cap, Field field)
        : arity_(arity), dim_(dim), cap_(cap), field_(field) {}

    static TupleElement of(const Element& e) {
        TupleElement t(1, e.dim(), e.cap(), e.field());
        for (const auto& [w, c] : e.terms()) t.terms_.emplace(Key{w}, c);
        return t;
    }
    static TupleElement of_pair(const Element& a, const Element& b) {
        a.check_compat(b);
        TupleElement t(2, a.dim(), a.cap(), a.field());
        for (const auto& [u, cu] : a.terms())
            for (const auto& [v, cv] : b.terms()) t.add_term({u, v}, cu * cv);
        return t;
    }
    static TupleElement of_tuple(const Key& k, int dim, int cap, Field field) {
        TupleElement t(static_cast<int>(k.size()), dim, cap, field);
        t.add_term(k, Scalar::one(field));
        return t;
    }

    int arity() const { return arity_; }
    int dim() const { return dim_; }
    int cap() const { return cap_; }
    Field field() const { return field_; }
    const std::map<Key, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Key& k, const Scalar& c) {
        if (c.is_zero()) return;
        if (static_cast<int>(k.size()) != arity_)
            throw DimensionMismatch("tuple arity mismatch");
        for (const auto& w : k)
            if (w.grade() > cap_)
                throw TruncationOverflow("tuple slot exceeds cap");
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    TupleElement operator-() const {
        TupleElement r(arity_, dim_, cap_, field_);
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
        return r;
    }
    friend TupleElement operator+(const TupleElement& a, const TupleElement& b) {
        a.check_compat(b);
        TupleElement r = a;
        for (const auto& [k, c] : b.terms_) r.add_term(k, c);
        return r;
    }
    friend TupleElement operator-(const TupleElement& a, const TupleElement& b) {
        return a + (-b);
    }
    TupleElement& operator+=(const TupleElement& o) { return *this = *this + o; }
    TupleElement scaled(const Scalar& c) const {
        TupleElement r(arity_, dim_, cap_, field_);
        if (c.is_zero()) return r;
        for (const auto& [k, x] : terms_) r.terms_.emplace(k, x * c);
        return r;
    }

    friend bool operator==(const TupleElement& a, const TupleElement& b) {
        a.check_compat(b);
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const TupleElement& a, const TupleElement& b) { return !(a == b); }

    /// Replace slot `slot` through a linear map given on words.
    TupleElement apply_linear(int slot, const std::function<Element(const Word&)>& f) const {
        TupleElement r(arity_, dim_, cap_, field_);
        for (const auto& [k, c] : terms_) {
            Element img = f(k[static_cast<std::size_t>(slot)]);
            for (const auto& [w, cw] : img.terms()) {
                Key nk = k;
                nk[static_cast<std::size_t>(slot)] = w;
                r.add_term(nk, c * cw);
            }
        }
        return r;
    }

    /// Multiply slots (slot, slot+1) through a product given on word pairs;
    /// the arity drops by one.
    TupleElement apply_product(int slot,
                               const std::function<Element(const Word&, const Word&)>& mul) const {
        TupleElement r(arity_ - 1, dim_, cap_, field_);
        for (const auto& [k, c] : terms_) {
            Element img = mul(k[static_cast<std::size_t>(slot)],
                              k[static_cast<std::size_t>(slot) + 1]);
            for (const auto& [w, cw] : img.terms()) {
                Key nk;
                nk.reserve(k.size() - 1);
                nk.insert(nk.end(), k.begin(), k.begin() + slot);
                nk.push_back(w);
                nk.insert(nk.end(), k.begin() + slot + 2, k.end());
                r.add_term(nk, c * cw);
            }
        }
        return r;
    }

    /// Braid slots (slot, slot+1) through a braiding given on word pairs as a
    /// combination of pairs; the arity is unchanged.
    TupleElement apply_braid(
        int slot, const std::function<TupleElement(const Word&, const Word&)>& braid) const {
        TupleElement r(arity_, dim_, cap_, field_);
        for (const auto& [k, c] : terms_) {
            TupleElement img = braid(k[static_cast<std::size_t>(slot)],
                                     k[static_cast<std::size_t>(slot) + 1]);
            for (const auto& [pk, cp] : img.terms()) {
                Key nk = k;
                nk[static_cast<std::size_t>(slot)] = pk[0];
                nk[static_cast<std::size_t>(slot) + 1] = pk[1];
                r.add_term(nk, c * cp);
            }
        }
        return r;
    }

    /// Split slot `slot` through a coproduct given on words as a combination
    /// of pairs; the arity grows by one.
    TupleElement apply_coproduct(int slot,
                                 const std::function<TupleElement(const Word&)>& co) const {
        TupleElement r(arity_ + 1, dim_, cap_, field_);
        for (const auto& [k, c] : terms_) {
            TupleElement img = co(k[static_cast<std::size_t>(slot)]);
            for (const auto& [pk, cp] : img.terms()) {
                Key nk;
                nk.reserve(k.size() + 1);
                nk.insert(nk.end(), k.begin(), k.begin() + slot);
                nk.push_back(pk[0]);
                nk.push_back(pk[1]);
                nk.insert(nk.end(), k.begin() + slot + 1, k.end());
                r.add_term(nk, c * cp);
            }
        }
        return r;
    }

    /// Collapse an arity-1 tuple back to an Element.
    Element to_element() const {
        if (arity_ != 1) throw DimensionMismatch("tuple arity is not 1");
        Element e(dim_, cap_, field_);
        for (const auto& [k, c] : terms_) e.add_term(k[0], c);
        return e;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [k, c] : terms_) {
            Scalar a = c;
            if (out.empty()) {
                if (a.display_negative()) {
                    out += "-";
                    a = -a;
                }
            } else {
                out += a.display_negative() ? " - " : " + ";
                if (a.display_negative()) a = -a;
            }
            std::string ws;
            for (std::size_t i = 0; i < k.size(); ++i) {
                if (i) ws += " (x) ";
                ws += k[i].str();
            }
            if (!a.is_one()) {
                std::string cs = a.str();
                if (a.needs_parens_as_coeff()) cs = "(" + cs + ")";
                out += cs + "*[" + ws + "]";
            } else {
                out += "[" + ws + "]";
            }
        }
        return out;
    }

    void check_compat(const TupleElement& o) const {
        if (arity_ != o.arity_ || dim_ != o.dim_ || cap_ != o.cap_)
            throw DimensionMismatch("tuple elements live in different spaces");
        if (field_ != o.field_) throw FieldMismatch();
    }

private:
    int arity_;
    int dim_;
    int cap_;
    Field field_;
    std::map<Key, Scalar> terms_;
};

/// Concatenation product, bilinear on words. The empty word is its unit.
inline Element concat(const Element& x, const Element& y) {
    x.check_compat(y);
    Element r(x.dim(), x.cap(), x.field());
    for (const auto& [u, cu] : x.terms())
        for (const auto& [v, cv] : y.terms()) r.add_term(concat(u, v), cu * cv);
    return r;
}

/// Deconcatenation coproduct including both extreme terms.
inline TupleElement deconcat(const Element& x) {
    TupleElement r(2, x.dim(), x.cap(), x.field());
    for (const auto& [w, c] : x.terms())
        for (int i = 0; i <= w.grade(); ++i)
            r.add_term({w.sub(0, i), w.sub(i, w.grade() - i)}, c);
    return r;
}

/// Reduced deconcatenation: interior cuts only; zero on grade-1 words.
inline TupleElement deconcat_reduced(const Element& x) {
    if (x.has_grade_zero()) throw GradeZeroInput();
    TupleElement r(2, x.dim(), x.cap(), x.field());
    for (const auto& [w, c] : x.terms())
        for (int i = 1; i <= w.grade() - 1; ++i)
            r.add_term({w.sub(0, i), w.sub(i, w.grade() - i)}, c);
    return r;
}

/// Counit: the coefficient of the empty word.
inline Scalar counit(const Element& x) { return x.coeff(Word()); }

namespace detail {

inline bool is_word_token(const std::string& t) {
    if (t == "1") return true;
    std::size_t i = 0;
    while (i < t.size()) {
        if (t[i] != 'e') return false;
        ++i;
        if (i >= t.size() || !std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
        if (i < t.size()) {
            if (t[i] != '|') return false;
            ++i;
            if (i >= t.size()) return false; // no trailing '|'
        }
    }
    return true;
}

inline Word parse_word_token(const std::string& t, std::size_t base_pos) {
    if (t == "1") return Word();
    std::vector<std::uint8_t> letters;
    std::size_t i = 0;
    while (i < t.size()) {
        if (t[i] != 'e') throw ParseError("expected generator like e1", base_pos + i);
        ++i;
        int v = 0;
        if (i >= t.size() || !std::isdigit(static_cast<unsigned char>(t[i])))
            throw ParseError("expected generator index", base_pos + i);
        while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) {
            v = v * 10 + (t[i] - '0');
            if (v > 255) throw ParseError("generator index too large", base_pos + i);
            ++i;
        }
        if (v == 0) throw ParseError("generator indices start at 1", base_pos + i);
        letters.push_back(static_cast<std::uint8_t>(v));
        if (i < t.size()) {
            if (t[i] != '|') throw ParseError("expected '|'", base_pos + i);
            ++i;
        }
    }
    return Word(std::move(letters));
}

inline std::string strip_ws(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

} // namespace detail

/// Parse element text "c1*W1 + c2*W2" with the scalar grammar for
/// coefficients and "e1|e2" / "1" for words.
inline Element element_parse(const std::string& text, int dim, int cap, Field field) {
    const std::string s = detail::strip_ws(text);
    if (s.empty()) throw ParseError("empty element text", 0);
    Element out(dim, cap, field);

    std::size_t i = 0;
    bool lead = true;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            if (lead && s[i] == '+') throw ParseError("unexpected leading '+'", i);
            sign = (s[i] == '-') ? -1 : 1;
            ++i;
        }
        lead = false;
        // take the term: up to the next top-level +/-
        int depth = 0;
        std::size_t start = i;
        while (i < s.size()) {
            char c = s[i];
            if (c == '(') ++depth;
            if (c == ')') --depth;
            if (depth == 0 && (c == '+' || c == '-') && i > start && s[i - 1] != '^') break;
            ++i;
        }
        std::string term = s.substr(start, i - start);
        if (term.empty()) throw ParseError("empty term", start);

        // split off the trailing word token at the last top-level '*'
        std::string coeff_text, word_text;
        if (detail::is_word_token(term) && term != "1") {
            coeff_text = "1";
            word_text = term;
        } else {
            std::size_t split = std::string::npos;
            int d2 = 0;
            for (std::size_t p = 0; p < term.size(); ++p) {
                if (term[p] == '(') ++d2;
                if (term[p] == ')') --d2;
                if (d2 == 0 && term[p] == '*') split = p;
            }
            if (split != std::string::npos &&
                detail::is_word_token(term.substr(split + 1))) {
                coeff_text = term.substr(0, split);
                word_text = term.substr(split + 1);
            } else {
                // bare scalar: a multiple of the empty word
                coeff_text = term;
                word_text = "1";
            }
        }
        Scalar c = scalar_parse(coeff_text, field);
        if (sign < 0) c = -c;
        Word w = detail::parse_word_token(word_text, start);
        if (w.grade() > cap) throw TruncationOverflow("parsed word exceeds cap");
        if (w.max_letter() > dim) throw ParseError("generator index exceeds dimension", start);
        out.add_term(w, c);
    }
    return out;
}

} // namespace qsh
