#pragma once

// Test-only generators and reference implementations. Nothing here calls the
// code paths it is used to check.

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <vector>

#include "cyl2dom/cylinder.hpp"
#include "cyl2dom/tropical.hpp"
#include "cyl2dom/words.hpp"

namespace cyl2dom::testkit {

/// Random arc-labeled digraph as a tropical matrix: each arc present with
/// probability `density`, label uniform in [lo, hi].
inline TropicalMatrix random_labeled_digraph(std::mt19937& rng, std::size_t s, double density, int lo, int hi) {
    std::bernoulli_distribution arc(density);
    std::uniform_int_distribution<int> label(lo, hi);
    std::vector<TropicalValue> e(s * s, kInf);
    for (auto& x : e)
        if (arc(rng)) x = TropicalValue{label(rng)};
    return TropicalMatrix(s, std::move(e));
}

inline TropicalMatrix random_dense_matrix(std::mt19937& rng, std::size_t s, int lo, int hi) {
    return random_labeled_digraph(rng, s, 1.0, lo, hi);
}

/// Minimum label sum over every path with exactly `length` arcs from i to j, by depth-first enumeration.
inline std::optional<long long> brute_min_path_weight(const TropicalMatrix& A, std::size_t i, std::size_t j,
                                                      std::size_t length) {
    std::optional<long long> best;
    std::function<void(std::size_t, std::size_t, long long)> walk = [&](std::size_t at, std::size_t left,
                                                                         long long acc) {
        if (left == 0) {
            if (at == j && (!best || acc < *best)) best = acc;
            return;
        }
        for (std::size_t k = 0; k < A.order(); ++k) {
            const TropicalValue w = A(at, k);
            if (w.is_finite()) walk(k, left - 1, acc + w.value());
        }
    };
    walk(i, length, 0);
    return best;
}

/// Uniform random subset at density 0.5, then every deficient vertex is added until the set 2-dominates.
inline VertexSet random_2dominating(const CylinderSpec& spec, std::mt19937& rng) {
    std::bernoulli_distribution coin(0.5);
    VertexSet s(spec);
    for (int i = 1; i <= spec.m(); ++i)
        for (int j = 1; j <= spec.n(); ++j)
            if (coin(rng)) s.insert({i, j});
    for (;;) {
        const auto bad = deficient_vertices(s);
        if (bad.empty()) return s;
        for (Vertex v : bad) s.insert(v);
    }
}

// ---------------------------------------------------------------------------
// Second encoder: the suitability and follow clauses written out as plain
// conditionals, independent of the rule tables in words.hpp.

inline bool clause_suitable(const Word& w) {
    const auto p = [&](int k) { return w.at(k); };
    for (int k = 1; k <= 4; ++k)
        if (p(k) == 3) return false;
    if (p(1) == 1 && (p(2) == 2 || p(2) == 1)) return false;
    if ((p(4) == 2 && p(5) == 1) || (p(4) == 1 && p(5) == 1) || (p(4) == 0 && p(5) == 3)) return false;
    for (int k = 1; k <= 3; ++k) {
        const int a = p(k), b = p(k + 1), c = p(k + 2);
        if (a == 0 && b == 2 && c == 0) return false;
        if (b == 1 && (a == 1 || a == 2) && (c == 1 || c == 2 || c == 3)) return false;
    }
    return true;
}

inline bool clause_can_follow(const Word& pw, const Word& qw) {
    const auto p = [&](int k) { return pw.at(k); };
    const auto q = [&](int k) { return qw.at(k); };
    // first letter
    if (q(1) == 0 && !(p(1) == 0 || p(1) == 1 || (p(1) == 2 && p(2) != 0))) return false;
    if (q(1) == 1 && !(p(1) == 0 || (p(1) == 2 && p(2) == 0))) return false;
    if (q(1) == 2 && p(1) != 0) return false;
    if (q(1) == 3) return false;
    // intermediate letters
    for (int k = 2; k <= 4; ++k) {
        if (q(k) == 0 && !(p(k) == 0 || p(k) == 1 || (p(k) == 2 && p(k - 1) != 0 && p(k + 1) != 0))) return false;
        if (q(k) == 1 && !(p(k) == 0 || (p(k) == 1 && p(k - 1) == 0 && p(k + 1) == 0) ||
                           (p(k) == 2 && p(k - 1) == 0) || (p(k) == 2 && p(k + 1) == 0)))
            return false;
        if (q(k) == 2 && p(k) != 0) return false;
        if (q(k) == 3) return false;
    }
    // last letter
    if (q(5) == 0 && !(p(5) == 0 || p(5) == 1 || (p(5) == 2 && p(4) != 0))) return false;
    if (q(5) == 1 && !(p(5) == 0 || (p(5) == 2 && p(4) == 0) || p(5) == 3)) return false;
    if (q(5) == 2 && !(p(5) == 0 || (p(5) == 2 && p(4) == 0) || p(5) == 3)) return false;
    if (q(5) == 3 && p(5) != 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Border strip without wraparound: rows 1..5 hold R, row 6 only receives.

namespace strip_detail {

inline bool member(const std::vector<std::uint32_t>& cols, int row, int col) {
    if (col < 0 || col >= static_cast<int>(cols.size()) || row < 1 || row > kBorderRows) return false;
    return (cols[static_cast<std::size_t>(col)] >> (row - 1)) & 1u;
}

inline int member_neighbors(const std::vector<std::uint32_t>& cols, int row, int col) {
    return member(cols, row, col - 1) + member(cols, row, col + 1) + member(cols, row - 1, col) +
           member(cols, row + 1, col);
}

inline bool column_ok(const std::vector<std::uint32_t>& cols, int col) {
    for (int row = 1; row <= kBorderRows; ++row) {
        if (member(cols, row, col)) continue;
        if (member_neighbors(cols, row, col) < (row < kBorderRows ? 2 : 1)) return false;
    }
    return true;
}

}  // namespace strip_detail

/// Minimum wasted 2-domination on a 5 x k strip by column backtracking, counted vertex by vertex.
inline long long brute_strip_omega2(int k) {
    using namespace strip_detail;
    std::vector<std::uint32_t> cols(static_cast<std::size_t>(k), 0);
    long long best = std::numeric_limits<long long>::max();
    std::function<void(int)> place = [&](int j) {
        if (j == k) {
            if (!column_ok(cols, k - 1)) return;
            long long r = 0, a = 0, b = 0;
            for (int col = 0; col < k; ++col)
                for (int row = 1; row <= kBorderRows + 1; ++row) {
                    if (member(cols, row, col)) {
                        ++r;
                        continue;
                    }
                    const int c = member_neighbors(cols, row, col);
                    if (c >= 2) ++a;
                    else if (c == 1) ++b;
                }
            best = std::min(best, 4 * r - 2 * a - b);
            return;
        }
        for (std::uint32_t c = 0; c < (1u << kBorderRows); ++c) {
            cols[static_cast<std::size_t>(j)] = c;
            if (j >= 1 && !column_ok(cols, j - 1)) continue;
            place(j + 1);
        }
        cols[static_cast<std::size_t>(j)] = 0;
    };
    place(0);
    return best;
}

}  // namespace cyl2dom::testkit
