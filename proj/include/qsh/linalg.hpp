#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qsh/element.hpp"

namespace qsh {

/// Row space in reduced echelon form over the exact scalar field.
///
/// Pivots are chosen as the canonically LARGEST word of each row, so the
/// earliest words in the length-lex order survive as quotient
/// representatives. Rows are kept mutually reduced (RREF) with pivot
/// coefficient 1, which makes reduce() a single pass and the representatives
/// deterministic.
class EchelonBasis {
public:
    EchelonBasis(int dim, int cap, Field field) : dim_(dim), cap_(cap), field_(field) {}

    int dim() const { return dim_; }
    int cap() const { return cap_; }
    Field field() const { return field_; }

    /// Insert a vector; returns true when the rank grows.
    bool insert(Element v) {
        v = reduce(std::move(v));
        if (v.is_zero()) return false;
        const Word pivot = v.terms().rbegin()->first; // largest word
        v = v.scaled(v.coeff(pivot).inverse());
        // back-reduce the existing rows against the new pivot
        for (auto& [p, row] : rows_) {
            Scalar c = row.coeff(pivot);
            if (!c.is_zero()) row -= v.scaled(c);
        }
        rows_.emplace(pivot, std::move(v));
        return true;
    }

    /// Residual of v modulo the row space: supported on non-pivot words only.
    Element reduce(Element v) const {
        std::vector<std::pair<Word, Scalar>> hits;
        for (const auto& [w, c] : v.terms())
            if (rows_.count(w)) hits.emplace_back(w, c);
        for (const auto& [w, c] : hits) v -= rows_.at(w).scaled(c);
        return v;
    }

    bool contains(const Element& v) const { return reduce(v).is_zero(); }
    int rank() const { return static_cast<int>(rows_.size()); }
    bool is_pivot(const Word& w) const { return rows_.count(w) > 0; }

    std::vector<Word> pivots() const {
        std::vector<Word> out;
        out.reserve(rows_.size());
        for (const auto& [p, row] : rows_) out.push_back(p);
        return out;
    }
    const std::map<Word, Element>& rows() const { return rows_; }

private:
    int dim_;
    int cap_;
    Field field_;
    std::map<Word, Element> rows_;
};

/// Kernel of a linear map given by images of labelled inputs: returns, per
/// vanishing combination, the input-side Element (over the label words).
/// Augmented elimination: the input tracker follows every row operation.
inline std::vector<Element> kernel_basis(
    const std::vector<std::pair<Word, Element>>& images, int dim, int cap, Field field) {
    struct Row {
        Element img;
        Element pre;
    };
    std::map<Word, Row> rows; // keyed by image pivot (largest word of img)
    std::vector<Element> kernel;
    for (const auto& [label, image] : images) {
        Row r{image, Element::of_word(label, dim, cap, field)};
        // eliminating the largest word strictly lowers it, so this terminates
        while (!r.img.is_zero()) {
            const Word top = r.img.terms().rbegin()->first;
            auto it = rows.find(top);
            if (it == rows.end()) break;
            const Scalar c = r.img.coeff(top);
            r.img -= it->second.img.scaled(c);
            r.pre -= it->second.pre.scaled(c);
        }
        if (r.img.is_zero()) {
            // normalize so the largest label has coefficient 1
            const Scalar lead = r.pre.terms().rbegin()->second;
            kernel.push_back(r.pre.scaled(lead.inverse()));
        } else {
            const Word pivot = r.img.terms().rbegin()->first;
            const Scalar lc = r.img.coeff(pivot).inverse();
            r.img = r.img.scaled(lc);
            r.pre = r.pre.scaled(lc);
            rows.emplace(pivot, std::move(r));
        }
    }
    return kernel;
}

} // namespace qsh
