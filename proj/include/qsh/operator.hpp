#pragma once

#include <functional>
#include <map>
#include <memory>
#include <shared_mutex>
#include <utility>

#include "qsh/element.hpp"

namespace qsh {

/// Sparse linear map between truncated tensor spaces, evaluated lazily on
/// basis words and cached. Safe for concurrent readers.
class GradedOperator {
public:
    using WordFn = std::function<Element(const Word&)>;

    GradedOperator(int dim, int cap, Field field, WordFn fn)
        : dim_(dim), cap_(cap), field_(field),
          state_(std::make_shared<State>(std::move(fn))) {}

    static GradedOperator identity(int dim, int cap, Field field) {
        return GradedOperator(dim, cap, field, [dim, cap, field](const Word& w) {
            return Element::of_word(w, dim, cap, field);
        });
    }

    int dim() const { return dim_; }
    int cap() const { return cap_; }
    Field field() const { return field_; }

    Element apply(const Word& w) const {
        {
            std::shared_lock lock(state_->mx);
            auto it = state_->cache.find(w);
            if (it != state_->cache.end()) return it->second;
        }
        Element out = state_->fn(w);
        std::unique_lock lock(state_->mx);
        return state_->cache.emplace(w, std::move(out)).first->second;
    }

    Element apply(const Element& x) const {
        Element out(x.dim(), x.cap(), x.field());
        for (const auto& [w, c] : x.terms()) out += apply(w).scaled(c);
        return out;
    }

    /// this . other (other is applied first).
    GradedOperator compose(const GradedOperator& other) const {
        GradedOperator outer = *this;
        GradedOperator inner = other;
        return GradedOperator(dim_, cap_, field_, [outer, inner](const Word& w) {
            return outer.apply(inner.apply(w));
        });
    }

    GradedOperator operator+(const GradedOperator& o) const {
        GradedOperator a = *this, b = o;
        return GradedOperator(dim_, cap_, field_,
                              [a, b](const Word& w) { return a.apply(w) + b.apply(w); });
    }

    GradedOperator scaled(const Scalar& c) const {
        GradedOperator a = *this;
        return GradedOperator(dim_, cap_, field_,
                              [a, c](const Word& w) { return a.apply(w).scaled(c); });
    }

    /// Exhaustive agreement on every basis word of the given grades.
    bool equals_on_grades(const GradedOperator& o, const std::vector<int>& grades) const {
        for (int g : grades)
            for (const auto& w : words_of_grade(dim_, g))
                if (apply(w) != o.apply(w)) return false;
        return true;
    }

    /// Materialized block: word -> image, for every word of the source grade.
    std::map<Word, Element> block(int source_grade) const {
        std::map<Word, Element> out;
        for (const auto& w : words_of_grade(dim_, source_grade)) out.emplace(w, apply(w));
        return out;
    }

private:
    struct State {
        explicit State(WordFn f) : fn(std::move(f)) {}
        WordFn fn;
        std::map<Word, Element> cache;
        mutable std::shared_mutex mx;
    };

    int dim_;
    int cap_;
    Field field_;
    std::shared_ptr<State> state_;
};

} // namespace qsh
