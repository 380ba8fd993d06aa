#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <tuple>
#include <utility>
#include <vector>

#include "qsh/linalg.hpp"
#include "qsh/operator.hpp"
#include "qsh/permutation.hpp"

namespace qsh {

/// Braiding (Yang-Baxter operator) on a d-dimensional space: the sparse
/// matrix of sigma on V (x) V, with validity flags filled in by the checks.
///
/// Every constructor verifies invertibility by exact elimination; the
/// braid-relation flag gates the braid-group lifts.
class Braiding {
public:
    struct Entry {
        int k, l;
        Scalar c;
    };

    /// sigma(e_i (x) e_j) = sum of entries c * (e_k (x) e_l).
    Braiding(int dim, Field field,
             std::map<std::pair<int, int>, std::vector<Entry>> matrix)
        : dim_(dim), field_(field), mat_(std::move(matrix)) {
        verify_invertible();
    }

    static Braiding flip(int dim, Field field) {
        Braiding b(dim, field, flip_matrix(dim, field, Scalar::one(field)));
        // the flip is a symmetry of the braid relation by inspection
        b.sh_->ybe_verified = b.sh_->ybe_checked = true;
        b.sh_->symmetric = b.sh_->symmetric_checked = true;
        return b;
    }

    static Braiding scaled_flip(int dim, Field field, const Scalar& c) {
        return Braiding(dim, field, flip_matrix(dim, field, c));
    }

    /// sigma(e_i (x) e_j) = q_{ij} * e_j (x) e_i.
    static Braiding diagonal(int dim, Field field,
                             const std::vector<std::vector<Scalar>>& q) {
        std::map<std::pair<int, int>, std::vector<Entry>> m;
        for (int i = 1; i <= dim; ++i)
            for (int j = 1; j <= dim; ++j) {
                const Scalar& c = q[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
                if (c.is_zero()) throw ZeroDiagonalEntry();
                m[{i, j}] = {Entry{j, i, c}};
            }
        return Braiding(dim, field, std::move(m));
    }

    int dim() const { return dim_; }
    Field field() const { return field_; }
    bool ybe_verified() const { return sh_->ybe_verified; }
    bool symmetric() const { return sh_->symmetric; }

    /// sigma applied to a single letter pair, as a grade-2 element.
    Element pair_image(int i, int j, int cap) const {
        Element out(dim_, cap, field_);
        auto it = mat_.find({i, j});
        if (it == mat_.end()) return out;
        for (const auto& e : it->second)
            out.add_term(Word({static_cast<std::uint8_t>(e.k), static_cast<std::uint8_t>(e.l)}),
                         e.c);
        return out;
    }

    /// sigma acting at positions (pos, pos+1) of a word, 1-based.
    Element apply_at(const Word& w, int pos) const {
        Element out(dim_, w.grade(), field_);
        auto it = mat_.find({w.at(pos - 1), w.at(pos)});
        if (it == mat_.end()) return out;
        for (const auto& e : it->second) {
            Word nw = w.with_letter(pos - 1, e.k).with_letter(pos, e.l);
            out.add_term(nw, e.c);
        }
        return out;
    }

    Element apply_at(const Element& x, int pos) const {
        Element out(x.dim(), x.cap(), x.field());
        for (const auto& [w, c] : x.terms()) out += apply_at(w, pos).scaled(c);
        return out;
    }

    /// The operator id^(i-1) (x) sigma (x) id^(n-i-1) on grade n.
    GradedOperator sigma_i(int i, int n) const {
        if (i < 1 || i > n - 1) throw IndexOutOfRange("sigma_i position");
        const Braiding* self = this;
        return GradedOperator(dim_, n, field_,
                              [self, i](const Word& w) { return self->apply_at(w, i); });
    }

    /// Both braid-relation composites agree on all d^3 words. Sets the flag.
    bool check_ybe() const {
        if (sh_->ybe_checked) return sh_->ybe_verified;
        bool ok = true;
        for (const auto& w : words_of_grade(dim_, 3)) {
            Element lhs = apply_at(apply_at(apply_at(w, 1), 2), 1);
            Element rhs = apply_at(apply_at(apply_at(Element::of_word(w, dim_, 3, field_), 2), 1), 2);
            if (lhs != rhs) {
                ok = false;
                break;
            }
        }
        std::lock_guard lock(sh_->flag_mx);
        sh_->ybe_checked = true;
        sh_->ybe_verified = ok;
        return ok;
    }

    /// sigma^2 = id on all d^2 pairs. Sets the flag.
    bool check_symmetric() const {
        if (sh_->symmetric_checked) return sh_->symmetric;
        bool ok = true;
        for (int i = 1; i <= dim_ && ok; ++i)
            for (int j = 1; j <= dim_ && ok; ++j) {
                Word w({static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)});
                if (apply_at(apply_at(w, 1), 1) != Element::of_word(w, dim_, 2, field_))
                    ok = false;
            }
        std::lock_guard lock(sh_->flag_mx);
        sh_->symmetric_checked = true;
        sh_->symmetric = ok;
        return ok;
    }

    /// Braid-group lift T^sigma_w from any reduced word of w; well defined
    /// once the braid relation holds. Lift images are memoized per
    /// (permutation, word) across the whole instance.
    GradedOperator braid_lift(const Permutation& w) const {
        if (!sh_->ybe_verified) throw UnverifiedBraiding();
        const int n = w.size();
        const Braiding* self = this;
        const std::vector<int> rw = w.reduced_word();
        const std::vector<int> key = w.images();
        return GradedOperator(dim_, n, field_, [self, rw, key, n](const Word& input) {
            {
                std::shared_lock lock(self->sh_->lift_mx);
                auto it = self->sh_->lift_cache.find({key, input});
                if (it != self->sh_->lift_cache.end()) return it->second;
            }
            Element cur = Element::of_word(input, self->dim_, n, self->field_);
            for (auto p = rw.rbegin(); p != rw.rend(); ++p) cur = self->apply_at(cur, *p);
            std::unique_lock lock(self->sh_->lift_mx);
            return self->sh_->lift_cache.emplace(std::make_pair(key, input), std::move(cur))
                .first->second;
        });
    }

    /// beta_{ij} = T^sigma_{chi_ij} : V^i (x) V^j -> V^j (x) V^i, with
    /// beta_{0i} = beta_{i0} = id.
    GradedOperator beta(int i, int j) const {
        if (i < 0 || j < 0) throw IndexOutOfRange("beta grades");
        if (i == 0 || j == 0) return GradedOperator::identity(dim_, i + j, field_);
        return braid_lift(chi_block_swap(i, j));
    }

    /// beta on a pair of words, as a combination of pairs (grades swap).
    TupleElement beta_pair(const Word& u, const Word& v, int cap) const {
        TupleElement out(2, dim_, cap, field_);
        Element img = beta(u.grade(), v.grade()).apply(concat(u, v));
        for (const auto& [w, c] : img.terms())
            out.add_term({w.sub(0, v.grade()), w.sub(v.grade(), u.grade())}, c);
        return out;
    }

    /// Eq-style factorizations of beta:
    ///   beta_{m+n,k} = (beta_{mk} (x) id^n)(id^m (x) beta_{nk})
    ///   beta_{m,n+k} = (id^n (x) beta_{mk})(beta_{mn} (x) id^k)
    /// verified exhaustively on grade m+n+k.
    bool verify_beta_identities(int m, int n, int k) const {
        const int total = m + n + k;
        for (const auto& w : words_of_grade(dim_, total)) {
            const Element start = Element::of_word(w, dim_, total, field_);
            {
                Element lhs = beta(m + n, k).apply(start);
                Element rhs = apply_block(beta(n, k), start, m);           // id^m (x) beta_nk
                rhs = apply_block(beta(m, k), rhs, 0, m + k);              // beta_mk (x) id^n
                if (lhs != rhs) return false;
            }
            {
                Element lhs = beta(m, n + k).apply(start);
                Element rhs = apply_block(beta(m, n), start, 0, m + n);    // beta_mn (x) id^k
                rhs = apply_block(beta(m, k), rhs, n);                     // id^n (x) beta_mk
                if (lhs != rhs) return false;
            }
        }
        return true;
    }

    /// Apply an operator to the letters [from, from+len) of each word,
    /// leaving the rest in place. len defaults to "through the end".
    static Element apply_block(const GradedOperator& op, const Element& x, int from,
                               int len = -1) {
        Element out(x.dim(), x.cap(), x.field());
        for (const auto& [w, c] : x.terms()) {
            const int n = (len < 0) ? w.grade() - from : len;
            Element mid = op.apply(w.sub(from, n));
            for (const auto& [m, cm] : mid.terms()) {
                Word nw = concat(concat(w.sub(0, from), m), w.sub(from + n, w.grade() - from - n));
                out.add_term(nw, c * cm);
            }
        }
        return out;
    }

    const std::map<std::pair<int, int>, std::vector<Entry>>& matrix() const { return mat_; }

private:
    static std::map<std::pair<int, int>, std::vector<Entry>> flip_matrix(int dim, Field field,
                                                                         const Scalar& c) {
        std::map<std::pair<int, int>, std::vector<Entry>> m;
        for (int i = 1; i <= dim; ++i)
            for (int j = 1; j <= dim; ++j) m[{i, j}] = {Entry{j, i, c}};
        return m;
    }

    void verify_invertible() const {
        EchelonBasis rows(dim_, 2, field_);
        for (int i = 1; i <= dim_; ++i)
            for (int j = 1; j <= dim_; ++j) {
                Element img = pair_image(i, j, 2);
                if (!rows.insert(img)) throw SingularMatrix();
            }
    }

    // Flags and the lift memo are shared between copies: they describe the
    // same immutable matrix.
    struct Shared {
        bool ybe_verified = false, ybe_checked = false;
        bool symmetric = false, symmetric_checked = false;
        std::mutex flag_mx;
        std::map<std::pair<std::vector<int>, Word>, Element> lift_cache;
        std::shared_mutex lift_mx;
    };

    int dim_;
    Field field_;
    std::map<std::pair<int, int>, std::vector<Entry>> mat_;
    std::shared_ptr<Shared> sh_ = std::make_shared<Shared>();
};

using BraidingPtr = std::shared_ptr<const Braiding>;

inline BraidingPtr make_flip(int dim, Field field) {
    return std::make_shared<Braiding>(Braiding::flip(dim, field));
}
inline BraidingPtr make_scaled_flip(int dim, Field field, const Scalar& c) {
    return std::make_shared<Braiding>(Braiding::scaled_flip(dim, field, c));
}
inline BraidingPtr make_diagonal(int dim, Field field,
                                 const std::vector<std::vector<Scalar>>& q) {
    return std::make_shared<Braiding>(Braiding::diagonal(dim, field, q));
}
inline BraidingPtr make_explicit(int dim, Field field,
                                 std::map<std::pair<int, int>, std::vector<Braiding::Entry>> m) {
    return std::make_shared<Braiding>(Braiding(dim, field, std::move(m)));
}

} // namespace qsh
