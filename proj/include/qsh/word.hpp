#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "qsh/errors.hpp"

namespace qsh {

/// Basis word of the tensor algebra: a sequence of generator indices in
/// 1..d. The empty word is the unit 1_k of grade 0.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<std::uint8_t> letters) : letters_(std::move(letters)) {}
    static Word letter(int i) { return Word({static_cast<std::uint8_t>(i)}); }

    int grade() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }
    int at(int pos) const { return letters_[static_cast<std::size_t>(pos)]; } // 0-based
    const std::vector<std::uint8_t>& letters() const { return letters_; }

    int first() const { return letters_.front(); }
    Word rest() const {
        return Word(std::vector<std::uint8_t>(letters_.begin() + 1, letters_.end()));
    }
    Word prepend(int letter) const {
        std::vector<std::uint8_t> l;
        l.reserve(letters_.size() + 1);
        l.push_back(static_cast<std::uint8_t>(letter));
        l.insert(l.end(), letters_.begin(), letters_.end());
        return Word(std::move(l));
    }
    Word append(int letter) const {
        std::vector<std::uint8_t> l = letters_;
        l.push_back(static_cast<std::uint8_t>(letter));
        return Word(std::move(l));
    }
    friend Word concat(const Word& a, const Word& b) {
        std::vector<std::uint8_t> l = a.letters_;
        l.insert(l.end(), b.letters_.begin(), b.letters_.end());
        return Word(std::move(l));
    }
    /// Sub-word [from, from+len), 0-based.
    Word sub(int from, int len) const {
        return Word(std::vector<std::uint8_t>(letters_.begin() + from,
                                              letters_.begin() + from + len));
    }
    /// Swap the letters at positions pos, pos+1 (0-based).
    Word swapped(int pos) const {
        std::vector<std::uint8_t> l = letters_;
        std::swap(l[static_cast<std::size_t>(pos)], l[static_cast<std::size_t>(pos) + 1]);
        return Word(std::move(l));
    }
    Word with_letter(int pos, int letter) const {
        std::vector<std::uint8_t> l = letters_;
        l[static_cast<std::size_t>(pos)] = static_cast<std::uint8_t>(letter);
        return Word(std::move(l));
    }

    int max_letter() const {
        int m = 0;
        for (auto l : letters_) m = std::max(m, static_cast<int>(l));
        return m;
    }

    /// Length-then-lexicographic total order; canonical throughout the library.
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (a.letters_.size() != b.letters_.size())
            return a.letters_.size() <=> b.letters_.size();
        return a.letters_ <=> b.letters_;
    }
    friend bool operator==(const Word& a, const Word& b) = default;

    /// "1" for the empty word, otherwise "e1|e2|e1".
    std::string str() const {
        if (letters_.empty()) return "1";
        std::string out;
        for (std::size_t i = 0; i < letters_.size(); ++i) {
            if (i) out += "|";
            out += "e" + std::to_string(letters_[i]);
        }
        return out;
    }

private:
    std::vector<std::uint8_t> letters_;
};

/// All words of the given grade over a d-letter alphabet, in canonical order.
inline std::vector<Word> words_of_grade(int d, int grade) {
    std::vector<Word> out;
    std::vector<std::uint8_t> cur(static_cast<std::size_t>(grade), 1);
    if (grade == 0) {
        out.emplace_back();
        return out;
    }
    for (;;) {
        out.emplace_back(cur);
        int pos = grade - 1;
        while (pos >= 0 && cur[static_cast<std::size_t>(pos)] == d) {
            cur[static_cast<std::size_t>(pos)] = 1;
            --pos;
        }
        if (pos < 0) break;
        ++cur[static_cast<std::size_t>(pos)];
    }
    return out;
}

} // namespace qsh
