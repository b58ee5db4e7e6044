#pragma once

/**
 * @file words.hpp
 * @brief Column words of a border set and the rules that govern them.
 *
 * A border set R in rows 1..5 labels each border vertex v:
 *   0  v in R
 *   1  v outside R with >= 2 neighbors of R in its own column or the previous one
 *   2  exactly one such neighbor
 *   3  none
 * Reading a column top to bottom gives a 5-letter word over {0,1,2,3}.
 *
 * Which words may occur ("suitable") and which word may occur right after
 * another ("follow") are encoded below as data tables. Every clause lives in
 * SuitabilityRules / FollowRules so the transcription can be audited line by
 * line and perturbed by the negative-control tests.
 */

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cylinder.hpp"

namespace cyl2dom {

inline constexpr int kWordLength = kBorderRows;
inline constexpr int kAlphabetSize = 4;
inline constexpr int kCandidateWords = 1024;  // 4^5

struct Word {
    std::array<std::uint8_t, kWordLength> letters{};

    static Word parse(std::string_view s) {
        if (s.size() != kWordLength) throw std::invalid_argument("word: expected 5 letters, got '" + std::string(s) + "'");
        Word w;
        for (int k = 0; k < kWordLength; ++k) {
            const char c = s[k];
            if (c < '0' || c > '3') throw std::invalid_argument("word: letter outside {0,1,2,3} in '" + std::string(s) + "'");
            w.letters[k] = static_cast<std::uint8_t>(c - '0');
        }
        return w;
    }

    /// Base-4 code with the first letter most significant; numeric order is lexicographic order.
    static Word from_code(int code) {
        if (code < 0 || code >= kCandidateWords) throw std::out_of_range("word: code out of range");
        Word w;
        for (int k = kWordLength - 1; k >= 0; --k) {
            w.letters[k] = static_cast<std::uint8_t>(code % kAlphabetSize);
            code /= kAlphabetSize;
        }
        return w;
    }

    int code() const noexcept {
        int c = 0;
        for (auto l : letters) c = c * kAlphabetSize + l;
        return c;
    }

    /// 1-based letter access, matching row numbers.
    int at(int k) const { return letters.at(static_cast<std::size_t>(k - 1)); }

    std::string str() const {
        std::string s(kWordLength, '0');
        for (int k = 0; k < kWordLength; ++k) s[k] = static_cast<char>('0' + letters[k]);
        return s;
    }

    friend auto operator<=>(const Word&, const Word&) = default;
};

// ---------------------------------------------------------------------------
// Suitability

struct SuitabilityRules {
    /// Letter 3 may only appear in the last position.
    std::uint8_t last_only_letter = 3;
    /// Forbidden values of p1 p2.
    std::vector<std::string> forbidden_prefixes{"12", "11"};
    /// Forbidden values of p4 p5.
    std::vector<std::string> forbidden_suffixes{"21", "11", "03"};
    /// Forbidden factors p_k p_{k+1} p_{k+2}, k = 1, 2, 3.
    std::vector<std::string> forbidden_triples{"020", "111", "112", "211", "212", "113", "213"};
};

inline const SuitabilityRules& default_suitability_rules() {
    static const SuitabilityRules rules{};
    return rules;
}

inline bool is_suitable(const Word& w, const SuitabilityRules& rules = default_suitability_rules()) {
    for (auto l : w.letters)
        if (l >= kAlphabetSize) throw std::invalid_argument("word: letter outside {0,1,2,3}");
    const std::string s = w.str();
    for (int k = 0; k < kWordLength - 1; ++k)
        if (w.letters[k] == rules.last_only_letter) return false;
    for (const auto& f : rules.forbidden_prefixes)
        if (s.compare(0, f.size(), f) == 0) return false;
    for (const auto& f : rules.forbidden_suffixes)
        if (s.compare(kWordLength - f.size(), f.size(), f) == 0) return false;
    for (const auto& f : rules.forbidden_triples)
        for (int k = 0; k + 3 <= kWordLength; ++k)
            if (s.compare(k, 3, f) == 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Follow relation

enum class LetterCondition : std::uint8_t { Any, Zero, NonZero };

inline bool satisfies(LetterCondition c, std::uint8_t letter) noexcept {
    switch (c) {
        case LetterCondition::Any: return true;
        case LetterCondition::Zero: return letter == 0;
        case LetterCondition::NonZero: return letter != 0;
    }
    return false;
}

/// One admissible case: the letter p_k, with conditions on p_{k-1} and p_{k+1}.
struct FollowCase {
    std::uint8_t p = 0;
    LetterCondition above = LetterCondition::Any;
    LetterCondition below = LetterCondition::Any;
};

enum class WordPosition : std::uint8_t { First = 0, Middle = 1, Last = 2 };

inline WordPosition position_of(int k) noexcept {
    return k == 1 ? WordPosition::First : k == kWordLength ? WordPosition::Last : WordPosition::Middle;
}

/// p may follow q iff for every position k the letter pair (q_k, p_k) matches
/// one of the cases listed under cases[position][q_k]. An empty list forbids q_k.
struct FollowRules {
    std::array<std::array<std::vector<FollowCase>, kAlphabetSize>, 3> cases;
};

inline const FollowRules& default_follow_rules() {
    using enum LetterCondition;
    static const FollowRules rules{{{
        // First letter (no letter above).
        {{
            /* q1 = 0 */ {{0, Any, Any}, {1, Any, Any}, {2, Any, NonZero}},
            /* q1 = 1 */ {{0, Any, Any}, {2, Any, Zero}},
            /* q1 = 2 */ {{0, Any, Any}},
            /* q1 = 3 */ {},
        }},
        // Intermediate letters, k = 2, 3, 4.
        {{
            /* qk = 0 */ {{0, Any, Any}, {1, Any, Any}, {2, NonZero, NonZero}},
            /* qk = 1 */ {{0, Any, Any}, {1, Zero, Zero}, {2, Zero, Any}, {2, Any, Zero}},
            /* qk = 2 */ {{0, Any, Any}},
            /* qk = 3 */ {},
        }},
        // Last letter (no letter below).
        {{
            /* q5 = 0 */ {{0, Any, Any}, {1, Any, Any}, {2, NonZero, Any}},
            /* q5 = 1 */ {{0, Any, Any}, {2, Zero, Any}, {3, Any, Any}},
            /* q5 = 2 */ {{0, Any, Any}, {2, Zero, Any}, {3, Any, Any}},
            /* q5 = 3 */ {{0, Any, Any}},
        }},
    }}};
    return rules;
}

/// True iff word p may be the column right after word q.
inline bool can_follow(const Word& p, const Word& q, const FollowRules& rules = default_follow_rules()) {
    for (int k = 1; k <= kWordLength; ++k) {
        const auto& options = rules.cases[static_cast<int>(position_of(k))][q.at(k)];
        const std::uint8_t pk = static_cast<std::uint8_t>(p.at(k));
        bool ok = false;
        for (const auto& c : options) {
            if (c.p != pk) continue;
            if (k > 1 && !satisfies(c.above, static_cast<std::uint8_t>(p.at(k - 1)))) continue;
            if (k < kWordLength && !satisfies(c.below, static_cast<std::uint8_t>(p.at(k + 1)))) continue;
            ok = true;
            break;
        }
        if (!ok) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Word table

class WordTable {
public:
    static constexpr std::size_t kExpectedSize = 111;

    const std::vector<Word>& words() const noexcept { return words_; }
    std::size_t size() const noexcept { return words_.size(); }
    const Word& operator[](std::size_t i) const { return words_.at(i); }

    std::optional<std::size_t> index_of(const Word& w) const {
        const int pos = index_by_code_[static_cast<std::size_t>(w.code())];
        if (pos < 0) return std::nullopt;
        return static_cast<std::size_t>(pos);
    }

    /// All 1024 candidates filtered by the rules, in lexicographic order. No size check.
    static WordTable build(const SuitabilityRules& rules) {
        WordTable t;
        t.index_by_code_.fill(-1);
        for (int code = 0; code < kCandidateWords; ++code) {
            const Word w = Word::from_code(code);
            if (!is_suitable(w, rules)) continue;
            t.index_by_code_[static_cast<std::size_t>(code)] = static_cast<int>(t.words_.size());
            t.words_.push_back(w);
        }
        return t;
    }

private:
    std::vector<Word> words_;
    std::array<int, kCandidateWords> index_by_code_{};
};

class WordTableSizeError : public std::runtime_error {
public:
    explicit WordTableSizeError(std::size_t got)
        : std::runtime_error("words: " + std::to_string(got) + " suitable words, expected " +
                             std::to_string(WordTable::kExpectedSize) + " (suitability rules mis-transcribed?)"),
          got_(got) {}
    std::size_t got() const noexcept { return got_; }

private:
    std::size_t got_;
};

/// The suitable words in lexicographic order; fails hard unless there are exactly 111.
inline WordTable generate_word_table(const SuitabilityRules& rules = default_suitability_rules()) {
    WordTable t = WordTable::build(rules);
    if (t.size() != WordTable::kExpectedSize) throw WordTableSizeError(t.size());
    return t;
}

// ---------------------------------------------------------------------------
// Border sets <-> closed word sequences

/// Label of border vertex (row, col) with respect to R; see the file comment.
inline int border_label(const VertexSet& R, int row, int col) {
    const auto& spec = R.spec();
    if (R.contains({row, col})) return 0;
    int count = 0;
    if (row > 1 && R.contains({row - 1, col})) ++count;
    if (row < kBorderRows && R.contains({row + 1, col})) ++count;
    if (R.contains({row, spec.wrap_col(col - 1)})) ++count;
    return count >= 2 ? 1 : count == 1 ? 2 : 3;
}

/// The column words of a top-border set, one per column.
inline std::vector<Word> label_border_set(const VertexSet& R) {
    if (!R.all_rows_within(1, kBorderRows) || !is_border_2dominating(R))
        throw std::invalid_argument("words: labeling needs a border-2-dominating set in rows 1..5");
    const int n = R.spec().n();
    std::vector<Word> out(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= kBorderRows; ++i)
            out[j - 1].letters[i - 1] = static_cast<std::uint8_t>(border_label(R, i, j));
    return out;
}

/// Checks that consecutive words (with wraparound) satisfy the follow relation.
inline bool is_closed_walk(std::span<const Word> words, const FollowRules& rules = default_follow_rules()) {
    if (words.empty()) return false;
    for (std::size_t j = 0; j < words.size(); ++j)
        if (!can_follow(words[(j + 1) % words.size()], words[j], rules)) return false;
    return true;
}

/// The top-border set whose letter-0 vertices are given by a closed word sequence.
inline VertexSet path_to_border_set(const CylinderSpec& spec, std::span<const Word> words,
                                    const FollowRules& rules = default_follow_rules()) {
    require_border_geometry(spec);
    if (words.size() != static_cast<std::size_t>(spec.n()))
        throw std::invalid_argument("words: sequence length " + std::to_string(words.size()) +
                                    " differs from n = " + std::to_string(spec.n()));
    for (std::size_t j = 0; j < words.size(); ++j) {
        const Word& q = words[j];
        const Word& p = words[(j + 1) % words.size()];
        if (!can_follow(p, q, rules))
            throw std::invalid_argument("words: invalid path, " + p.str() + " cannot follow " + q.str() +
                                        " at column " + std::to_string(j + 1));
    }
    VertexSet R(spec);
    for (int j = 1; j <= spec.n(); ++j)
        for (int i = 1; i <= kBorderRows; ++i)
            if (words[j - 1].at(i) == 0) R.insert({i, j});
    return R;
}

}  // namespace cyl2dom
