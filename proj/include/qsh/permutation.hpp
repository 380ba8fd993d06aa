#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "qsh/errors.hpp"

namespace qsh {

/// Permutation of {1..n}, stored as its one-line image vector.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
        std::vector<bool> seen(img_.size() + 1, false);
        for (int v : img_) {
            if (v < 1 || v > static_cast<int>(img_.size()) || seen[static_cast<std::size_t>(v)])
                throw IndexOutOfRange("image vector is not a bijection");
            seen[static_cast<std::size_t>(v)] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> img(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i + 1;
        return Permutation(std::move(img));
    }
    /// Adjacent transposition s_i in S_n (swaps i, i+1), 1 <= i <= n-1.
    static Permutation transposition(int n, int i) {
        if (i < 1 || i > n - 1) throw IndexOutOfRange("transposition index");
        Permutation p = identity(n);
        std::swap(p.img_[static_cast<std::size_t>(i - 1)], p.img_[static_cast<std::size_t>(i)]);
        return p;
    }

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int p) const { return img_[static_cast<std::size_t>(p - 1)]; }
    const std::vector<int>& images() const { return img_; }
    bool is_identity() const {
        for (int i = 1; i <= size(); ++i)
            if ((*this)(i) != i) return false;
        return true;
    }

    /// (a o b)(p) = a(b(p)).
    friend Permutation compose(const Permutation& a, const Permutation& b) {
        std::vector<int> img(b.img_.size());
        for (int p = 1; p <= b.size(); ++p)
            img[static_cast<std::size_t>(p - 1)] = a(b(p));
        return Permutation(std::move(img));
    }

    Permutation inverse() const {
        std::vector<int> img(img_.size());
        for (int p = 1; p <= size(); ++p) img[static_cast<std::size_t>((*this)(p)-1)] = p;
        return Permutation(std::move(img));
    }

    int length() const { // inversion count
        int inv = 0;
        for (int i = 1; i <= size(); ++i)
            for (int j = i + 1; j <= size(); ++j)
                if ((*this)(i) > (*this)(j)) ++inv;
        return inv;
    }

    /// One reduced word, by repeatedly removing the leftmost descent:
    /// if w(i) > w(i+1) then w = w' s_i with l(w') = l(w) - 1.
    std::vector<int> reduced_word() const {
        std::vector<int> out;
        std::vector<int> v = img_;
        for (;;) {
            int i = -1;
            for (int p = 0; p + 1 < static_cast<int>(v.size()); ++p)
                if (v[static_cast<std::size_t>(p)] > v[static_cast<std::size_t>(p) + 1]) {
                    i = p;
                    break;
                }
            if (i < 0) break;
            std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(i) + 1]);
            out.push_back(i + 1);
        }
        std::reverse(out.begin(), out.end());
        return out;
    }

    /// Every reduced word (exponential; intended for small n).
    std::vector<std::vector<int>> all_reduced_words() const {
        if (is_identity()) return {{}};
        std::vector<std::vector<int>> out;
        for (int i = 1; i <= size() - 1; ++i) {
            if ((*this)(i) > (*this)(i + 1)) {
                Permutation shorter = compose(*this, transposition(size(), i));
                for (auto w : shorter.all_reduced_words()) {
                    w.push_back(i);
                    out.push_back(std::move(w));
                }
            }
        }
        return out;
    }

    friend bool operator==(const Permutation& a, const Permutation& b) = default;
    friend bool operator<(const Permutation& a, const Permutation& b) {
        return a.img_ < b.img_;
    }

    std::string str() const {
        std::string s = "(";
        for (int i = 0; i < size(); ++i) {
            if (i) s += " ";
            s += std::to_string(img_[static_cast<std::size_t>(i)]);
        }
        return s + ")";
    }

private:
    std::vector<int> img_;
};

/// Shuffle representatives S_{i,j} in S_{i+j}: increasing on 1..i and on
/// i+1..i+j. By convention S_{i,0} = S_{0,i} = {identity}.
inline std::vector<Permutation> shuffle_set(int i, int j) {
    if (i < 0 || j < 0) throw IndexOutOfRange("shuffle set arguments");
    const int n = i + j;
    std::vector<Permutation> out;
    std::vector<int> pick(static_cast<std::size_t>(i));
    // choose the image set of the first block
    std::vector<bool> in_first(static_cast<std::size_t>(n) + 1, false);
    std::function<void(int, int)> rec = [&](int from, int chosen) {
        if (chosen == i) {
            std::vector<int> img(static_cast<std::size_t>(n));
            int a = 0;
            for (int p = 1; p <= n; ++p)
                if (in_first[static_cast<std::size_t>(p)]) img[static_cast<std::size_t>(a++)] = p;
            int b = i;
            for (int p = 1; p <= n; ++p)
                if (!in_first[static_cast<std::size_t>(p)]) img[static_cast<std::size_t>(b++)] = p;
            out.emplace_back(std::move(img));
            return;
        }
        for (int p = from; p <= n - (i - chosen - 1); ++p) {
            in_first[static_cast<std::size_t>(p)] = true;
            rec(p + 1, chosen + 1);
            in_first[static_cast<std::size_t>(p)] = false;
        }
    };
    if (n == 0) {
        out.push_back(Permutation::identity(0));
        return out;
    }
    rec(1, 0);
    return out;
}

/// The block-swap permutation chi_{ij} in S_{i+j}: 1..i -> j+1..j+i and
/// i+1..i+j -> 1..j.
inline Permutation chi_block_swap(int i, int j) {
    std::vector<int> img(static_cast<std::size_t>(i + j));
    for (int p = 1; p <= i; ++p) img[static_cast<std::size_t>(p - 1)] = j + p;
    for (int p = 1; p <= j; ++p) img[static_cast<std::size_t>(i + p - 1)] = p;
    return Permutation(std::move(img));
}

/// The permutation tau_{kn}^{ij} in S_n from the shuffle-set decomposition:
/// fixed outside (i, k+j], shifts (i, k] up by j, pulls (k, k+j] down to
/// follow position i.
inline Permutation tau_kn(int k, int n, int i, int j) {
    if (!(0 <= i && i <= k && 0 <= j && j <= n - k))
        throw IndexOutOfRange("tau_kn arguments");
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int p = 1; p <= n; ++p) {
        int v;
        if (p <= i || p >= k + j + 1)
            v = p;
        else if (p <= k)
            v = p + j;
        else
            v = p - k + i;
        img[static_cast<std::size_t>(p - 1)] = v;
    }
    return Permutation(std::move(img));
}

/// u on {1..l} and v on {l+1..l+m}, as one permutation of S_{l+m}.
inline Permutation block_embed(const Permutation& u, const Permutation& v) {
    const int l = u.size(), m = v.size();
    std::vector<int> img(static_cast<std::size_t>(l + m));
    for (int p = 1; p <= l; ++p) img[static_cast<std::size_t>(p - 1)] = u(p);
    for (int p = 1; p <= m; ++p) img[static_cast<std::size_t>(l + p - 1)] = l + v(p);
    return Permutation(std::move(img));
}

namespace detail {

enum class ShuffleRefinement { Full, FirstFixed, FirstOfSecondBlock };

inline std::vector<Permutation> refined_shuffles(int i, int j, ShuffleRefinement r) {
    std::vector<Permutation> out;
    for (const auto& w : shuffle_set(i, j)) {
        switch (r) {
            case ShuffleRefinement::Full:
                out.push_back(w);
                break;
            case ShuffleRefinement::FirstFixed:
                if (w.size() == 0 || w(1) == 1) out.push_back(w);
                break;
            case ShuffleRefinement::FirstOfSecondBlock:
                if (i + 1 <= w.size() && w(i + 1) == 1) out.push_back(w);
                break;
        }
    }
    return out;
}

/// Assemble the union of (S_{ij} x S_{k-i,n-k-j}) tau_{kn}^{ij} over i+j = l,
/// with the first factor optionally refined. Returns false on any collision
/// (the decompositions are disjoint unions).
inline bool assemble_decomposition(int n, int k, int l, ShuffleRefinement refinement,
                                   std::set<Permutation>& out) {
    for (int i = std::max(0, l - (n - k)); i <= std::min(k, l); ++i) {
        const int j = l - i;
        if (refinement == ShuffleRefinement::FirstFixed && i == 0) continue;
        if (refinement == ShuffleRefinement::FirstOfSecondBlock && j == 0) continue;
        const Permutation tau = tau_kn(k, n, i, j);
        for (const auto& u : refined_shuffles(i, j, refinement))
            for (const auto& v : shuffle_set(k - i, n - k - j)) {
                Permutation w = compose(block_embed(u, v), tau);
                if (!out.insert(w).second) return false;
            }
    }
    return true;
}

} // namespace detail

/// Exact set equality of the shuffle-set decompositions
///   S_{k,n-k} = U_{i+j=l} (S_{ij} x S_{k-i,n-k-j}) tau_{kn}^{ij}
/// and, for l >= 1, of the two refinements restricted by w(1)=1 (first block
/// leads, so k >= 1) and w(k+1)=1 (second block leads, so k < n).
inline bool verify_shuffle_decomposition(int n, int k, int l) {
    if (!(0 <= k && k <= n && 0 <= l && l <= n)) throw IndexOutOfRange("decomposition args");
    auto base = shuffle_set(k, n - k);
    std::set<Permutation> full(base.begin(), base.end());

    std::set<Permutation> assembled;
    if (!detail::assemble_decomposition(n, k, l, detail::ShuffleRefinement::Full, assembled))
        return false;
    if (assembled != full) return false;

    std::set<Permutation> s1_expected, s2_expected;
    for (const auto& w : full) {
        if (k >= 1 && w(1) == 1) s1_expected.insert(w);
        if (k < n && w(k + 1) == 1) s2_expected.insert(w);
    }
    // whichever block is nonempty leads with 1 exactly once
    if (n >= 1 && s1_expected.size() + s2_expected.size() != full.size()) return false;

    if (l >= 1) {
        std::set<Permutation> s1, s2;
        if (!detail::assemble_decomposition(n, k, l, detail::ShuffleRefinement::FirstFixed, s1))
            return false;
        if (s1 != s1_expected) return false;
        if (!detail::assemble_decomposition(n, k, l,
                                            detail::ShuffleRefinement::FirstOfSecondBlock, s2))
            return false;
        if (s2 != s2_expected) return false;
    }
    return true;
}

} // namespace qsh
