#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "qsh/braiding.hpp"

namespace qsh {

/// Finite-dimensional braided algebra given by structure constants
/// e_i . e_j = sum c * e_k, an optional unit coordinate vector, and a
/// braiding on the underlying space. Flags are filled in by the checks and
/// shared between copies.
class BraidedAlgebra {
public:
    using MuEntry = std::pair<int, Scalar>; // (k, c)

    BraidedAlgebra(int dim, Field field,
                   std::map<std::pair<int, int>, std::vector<MuEntry>> mu,
                   std::optional<std::vector<Scalar>> unit, BraidingPtr sigma)
        : dim_(dim), field_(field), mu_(std::move(mu)), unit_(std::move(unit)),
          sigma_(std::move(sigma)) {
        if (sigma_->dim() != dim_ || sigma_->field() != field_)
            throw DimensionMismatch("braiding does not match the algebra");
    }

    int dim() const { return dim_; }
    Field field() const { return field_; }
    const BraidingPtr& sigma() const { return sigma_; }
    bool has_unit() const { return unit_.has_value(); }
    const std::vector<Scalar>& unit_coords() const {
        if (!unit_) throw NoUnit();
        return *unit_;
    }

    /// e_i . e_j as a grade-<=1 element (grade 0 never occurs; products of
    /// basis vectors are coordinate combinations).
    Element mul_letters(int i, int j, int cap = 1) const {
        Element out(dim_, cap, field_);
        auto it = mu_.find({i, j});
        if (it == mu_.end()) return out;
        for (const auto& [k, c] : it->second) out.add_term(Word::letter(k), c);
        return out;
    }

    /// Bilinear product of two grade-1 elements.
    Element mul(const Element& x, const Element& y) const {
        Element out(x.dim(), x.cap(), x.field());
        for (const auto& [u, cu] : x.terms())
            for (const auto& [v, cv] : y.terms())
                out += mul_letters(u.first(), v.first(), x.cap()).scaled(cu * cv);
        return out;
    }

    Element unit_element(int cap = 1) const {
        if (!unit_) throw NoUnit();
        Element out(dim_, cap, field_);
        for (int k = 1; k <= dim_; ++k)
            out.add_term(Word::letter(k), (*unit_)[static_cast<std::size_t>(k - 1)]);
        return out;
    }

    /// Braiding on pairs of basis letters, as a combination of letter pairs.
    TupleElement braid_letters(const Word& u, const Word& v, int cap = 1) const {
        TupleElement out(2, dim_, cap, field_);
        Element img = sigma_->pair_image(u.first(), v.first(), 2);
        for (const auto& [w, c] : img.terms())
            out.add_term({Word::letter(w.at(0)), Word::letter(w.at(1))}, c);
        return out;
    }

    // --- axiom checks -------------------------------------------------------

    bool check_associativity(std::string* witness = nullptr) const {
        if (fl().associative) return *fl().associative;
        bool ok = true;
        for (int i = 1; i <= dim_ && ok; ++i)
            for (int j = 1; j <= dim_ && ok; ++j)
                for (int k = 1; k <= dim_ && ok; ++k) {
                    Element left = mul(mul_letters(i, j), Element::of_word(Word::letter(k), dim_, 1, field_));
                    Element right = mul(Element::of_word(Word::letter(i), dim_, 1, field_), mul_letters(j, k));
                    if (left != right) {
                        ok = false;
                        if (witness)
                            *witness = "(e" + std::to_string(i) + ", e" + std::to_string(j) +
                                       ", e" + std::to_string(k) + "): " + left.str() +
                                       " != " + right.str();
                    }
                }
        set_flag(fl().associative, ok);
        return ok;
    }

    /// Conditions (id (x) mu) s1 s2 = s (mu (x) id) and
    /// (mu (x) id) s2 s1 = s (id (x) mu) on all basis triples.
    bool check_braided_algebra(std::string* witness = nullptr) const {
        if (!sigma_->ybe_verified()) throw UnverifiedBraiding();
        if (fl().braided) return *fl().braided;
        auto braid = [this](const Word& u, const Word& v) { return braid_letters(u, v); };
        auto mulw = [this](const Word& u, const Word& v) {
            return mul_letters(u.first(), v.first());
        };
        bool ok = true;
        for (int i = 1; i <= dim_ && ok; ++i)
            for (int j = 1; j <= dim_ && ok; ++j)
                for (int k = 1; k <= dim_ && ok; ++k) {
                    TupleElement in = TupleElement::of_tuple(
                        {Word::letter(i), Word::letter(j), Word::letter(k)}, dim_, 1, field_);
                    TupleElement lhs1 =
                        in.apply_braid(1, braid).apply_braid(0, braid).apply_product(1, mulw);
                    TupleElement rhs1 = in.apply_product(0, mulw).apply_braid(0, braid);
                    bool first = lhs1 == rhs1;

                    TupleElement lhs2 =
                        in.apply_braid(0, braid).apply_braid(1, braid).apply_product(0, mulw);
                    TupleElement rhs2 = in.apply_product(1, mulw).apply_braid(0, braid);
                    bool second = lhs2 == rhs2;
                    if (!(first && second)) {
                        ok = false;
                        if (witness)
                            *witness = "(e" + std::to_string(i) + ", e" + std::to_string(j) +
                                       ", e" + std::to_string(k) + ")";
                    }
                }
        set_flag(fl().braided, ok);
        return ok;
    }

    /// sigma(a (x) 1) = 1 (x) a and sigma(1 (x) a) = a (x) 1.
    bool check_unital_braided(std::string* witness = nullptr) const {
        if (!unit_) throw NoUnit();
        if (fl().unital_braided) return *fl().unital_braided;
        auto braid = [this](const Word& u, const Word& v) { return braid_letters(u, v); };
        const Element one = unit_element();
        bool ok = true;
        for (int a = 1; a <= dim_ && ok; ++a) {
            Element ea = Element::of_word(Word::letter(a), dim_, 1, field_);
            if (TupleElement::of_pair(ea, one).apply_braid(0, braid) !=
                    TupleElement::of_pair(one, ea) ||
                TupleElement::of_pair(one, ea).apply_braid(0, braid) !=
                    TupleElement::of_pair(ea, one)) {
                ok = false;
                if (witness) *witness = "e" + std::to_string(a);
            }
        }
        set_flag(fl().unital_braided, ok);
        return ok;
    }

    /// mu . sigma = mu on all basis pairs.
    bool check_commutative(std::string* witness = nullptr) const {
        if (fl().commutative) return *fl().commutative;
        auto braid = [this](const Word& u, const Word& v) { return braid_letters(u, v); };
        auto mulw = [this](const Word& u, const Word& v) {
            return mul_letters(u.first(), v.first());
        };
        bool ok = true;
        for (int i = 1; i <= dim_ && ok; ++i)
            for (int j = 1; j <= dim_ && ok; ++j) {
                TupleElement in = TupleElement::of_tuple({Word::letter(i), Word::letter(j)},
                                                         dim_, 1, field_);
                if (in.apply_braid(0, braid).apply_product(0, mulw) !=
                    in.apply_product(0, mulw)) {
                    ok = false;
                    if (witness) *witness = "(e" + std::to_string(i) + ", e" + std::to_string(j) + ")";
                }
            }
        set_flag(fl().commutative, ok);
        return ok;
    }

    bool associative_flag() const { return fl().associative && *fl().associative; }
    bool braided_flag() const { return fl().braided && *fl().braided; }
    bool unital_braided_flag() const { return fl().unital_braided && *fl().unital_braided; }
    bool commutative_flag() const { return fl().commutative && *fl().commutative; }

private:
    struct Flags {
        std::optional<bool> associative, braided, unital_braided, commutative;
        std::mutex mx;
    };
    Flags& fl() const { return *flags_; }
    void set_flag(std::optional<bool>& f, bool v) const {
        std::lock_guard lock(flags_->mx);
        f = v;
    }

    int dim_;
    Field field_;
    std::map<std::pair<int, int>, std::vector<MuEntry>> mu_;
    std::optional<std::vector<Scalar>> unit_;
    BraidingPtr sigma_;
    std::shared_ptr<Flags> flags_ = std::make_shared<Flags>();
};

using AlgebraPtr = std::shared_ptr<const BraidedAlgebra>;

/// Augmented unital algebra A-bar = A + k: the original basis keeps its
/// indices, the adjoined unit is the last direction d+1. The induced braiding
/// braids the unit trivially and restricts to sigma on A (x) A.
inline BraidedAlgebra augment(const BraidedAlgebra& a) {
    if (!a.sigma()->ybe_verified()) throw UnverifiedBraiding();
    const int d = a.dim();
    const int u = d + 1;
    const Field f = a.field();
    const Scalar one = Scalar::one(f);

    std::map<std::pair<int, int>, std::vector<BraidedAlgebra::MuEntry>> mu;
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j) {
            Element prod = a.mul_letters(i, j);
            std::vector<BraidedAlgebra::MuEntry> entries;
            for (const auto& [w, c] : prod.terms()) entries.emplace_back(w.first(), c);
            if (!entries.empty()) mu[{i, j}] = std::move(entries);
        }
    for (int i = 1; i <= u; ++i) {
        mu[{i, u}] = {{i, one}};
        mu[{u, i}] = {{i, one}};
    }

    std::map<std::pair<int, int>, std::vector<Braiding::Entry>> sig;
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j) {
            Element img = a.sigma()->pair_image(i, j, 2);
            std::vector<Braiding::Entry> entries;
            for (const auto& [w, c] : img.terms())
                entries.push_back({w.at(0), w.at(1), c});
            if (!entries.empty()) sig[{i, j}] = std::move(entries);
        }
    for (int i = 1; i <= d; ++i) {
        sig[{i, u}] = {{u, i, one}};
        sig[{u, i}] = {{i, u, one}};
    }
    sig[{u, u}] = {{u, u, one}};

    std::vector<Scalar> unit(static_cast<std::size_t>(u), Scalar::zero(f));
    unit.back() = one;

    return BraidedAlgebra(u, f, std::move(mu), std::move(unit),
                          make_explicit(u, f, std::move(sig)));
}

} // namespace qsh
