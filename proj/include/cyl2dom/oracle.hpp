#pragma once

/**
 * @file oracle.hpp
 * @brief Exact reference solvers that share no code with the word/transfer pipeline.
 *
 * - brute_gamma2: subset enumeration by increasing size (m n <= 24).
 * - gamma2_oracle: cyclic column-profile DP. A column state is the member mask
 *   plus the mask of non-members that still need one neighbor from the next
 *   column. A closed walk of n states is exactly a 2-dominating set.
 * - omega2_oracle: cyclic DP over pairs of consecutive 5-row border column
 *   subsets. Each column's share of 4|R| - 2|A^R| - |B^R| (including the row-6
 *   vertex below it) and its border feasibility depend only on the column and
 *   its two horizontal neighbors.
 */

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "cylinder.hpp"

namespace cyl2dom::oracle {

struct Gamma2Result {
    long long value = 0;
    VertexSet witness;
};

struct Omega2Result {
    long long value = 0;
    VertexSet witness;  ///< top-border set on P_13 x C_n
};

inline constexpr int kBruteMaxVertices = 24;
inline constexpr int kDpMaxRows = 9;
inline constexpr int kDpMaxColumns = 12;
inline constexpr int kOmegaOracleMinColumns = 16;
inline constexpr int kOmegaOracleMaxColumns = 24;

// ---------------------------------------------------------------------------
// Brute force

/// Minimum 2-dominating set by enumerating subsets of each size in turn.
inline Gamma2Result brute_gamma2(int m, int n) {
    const CylinderSpec spec(m, n);
    const int V = m * n;
    if (V > kBruteMaxVertices)
        throw std::invalid_argument("oracle: brute force limited to m*n <= 24 (got " + std::to_string(V) + ")");
    std::vector<std::uint32_t> nbr(static_cast<std::size_t>(V), 0);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < n; ++c) {
            std::uint32_t mask = 0;
            mask |= 1u << (r * n + (c + 1) % n);
            mask |= 1u << (r * n + (c + n - 1) % n);
            if (r > 0) mask |= 1u << ((r - 1) * n + c);
            if (r + 1 < m) mask |= 1u << ((r + 1) * n + c);
            nbr[static_cast<std::size_t>(r * n + c)] = mask;
        }
    auto dominates = [&](std::uint32_t s) {
        for (int v = 0; v < V; ++v) {
            if (s >> v & 1u) continue;
            if (std::popcount(nbr[static_cast<std::size_t>(v)] & s) < 2) return false;
        }
        return true;
    };
    const std::uint64_t limit = std::uint64_t{1} << V;
    for (int k = 0; k <= V; ++k) {
        std::uint64_t s = (std::uint64_t{1} << k) - 1;
        while (s < limit) {
            if (dominates(static_cast<std::uint32_t>(s))) {
                VertexSet w(spec);
                for (int v = 0; v < V; ++v)
                    if (s >> v & 1u) w.insert({v / n + 1, v % n + 1});
                return {k, w};
            }
            if (k == 0) break;
            // Next subset with the same popcount.
            const std::uint64_t lowest = s & (~s + 1);
            const std::uint64_t ripple = s + lowest;
            s = ripple | (((ripple ^ s) >> 2) / lowest);
        }
    }
    throw std::logic_error("oracle: the full vertex set must 2-dominate");
}

// ---------------------------------------------------------------------------
// Column-profile DP for gamma2

namespace detail {

class ColumnAutomaton {
public:
    struct Edge {
        std::uint32_t target;
        std::uint16_t column;  ///< member mask of the target column
        std::uint8_t cost;
    };

    explicit ColumnAutomaton(int m) : m_(m) {
        const std::uint32_t full = (1u << m) - 1;
        id_.assign(std::size_t{1} << (2 * m), -1);
        for (std::uint32_t c = 0; c <= full; ++c) {
            const std::uint32_t free = full & ~c;
            for (std::uint32_t need = free;; need = (need - 1) & free) {
                id_[key(c, need)] = static_cast<std::int32_t>(states_.size());
                states_.push_back({c, need});
                if (need == 0) break;
            }
        }
        offsets_.reserve(states_.size() + 1);
        offsets_.push_back(0);
        for (const auto& [c, need] : states_) {
            for (std::uint32_t d = 0; d <= full; ++d) {
                if ((need & ~d) != 0) continue;
                std::uint32_t next_need = 0;
                bool ok = true;
                for (int i = 0; i < m && ok; ++i) {
                    if (d >> i & 1u) continue;
                    int cnt = static_cast<int>(c >> i & 1u);
                    if (i > 0) cnt += static_cast<int>(d >> (i - 1) & 1u);
                    if (i + 1 < m) cnt += static_cast<int>(d >> (i + 1) & 1u);
                    if (cnt == 0) ok = false;
                    else if (cnt == 1) next_need |= 1u << i;
                }
                if (!ok) continue;
                edges_.push_back({static_cast<std::uint32_t>(id_[key(d, next_need)]), static_cast<std::uint16_t>(d),
                                  static_cast<std::uint8_t>(std::popcount(d))});
            }
            offsets_.push_back(edges_.size());
        }
    }

    std::size_t state_count() const noexcept { return states_.size(); }
    std::uint32_t members(std::size_t s) const { return states_[s].first; }
    std::size_t edges_begin(std::size_t s) const { return offsets_[s]; }
    std::size_t edges_end(std::size_t s) const { return offsets_[s + 1]; }
    const Edge& edge(std::size_t e) const { return edges_[e]; }

private:
    std::size_t key(std::uint32_t c, std::uint32_t need) const { return (std::size_t{c} << m_) | need; }

    int m_;
    std::vector<std::int32_t> id_;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> states_;
    std::vector<std::size_t> offsets_;
    std::vector<Edge> edges_;
};

}  // namespace detail

/// Exact gamma2 by cyclic column DP.
///
/// Column 1 is taken to be a column of minimum size s (some rotation always
/// achieves this), so every later column has at least s members and a start
/// is pruned once value + s * (remaining columns) reaches the incumbent.
inline Gamma2Result gamma2_oracle(int m, int n) {
    const CylinderSpec spec(m, n);
    if (m > kDpMaxRows || n > kDpMaxColumns)
        throw std::invalid_argument("oracle: column DP limited to m <= 9, n <= 12 (got m = " + std::to_string(m) +
                                    ", n = " + std::to_string(n) + ")");
    const detail::ColumnAutomaton automaton(m);
    const std::size_t S = automaton.state_count();
    constexpr int kUnreached = std::numeric_limits<int>::max();

    std::vector<std::size_t> starts(S);
    for (std::size_t s = 0; s < S; ++s) starts[s] = s;
    std::stable_sort(starts.begin(), starts.end(), [&](std::size_t a, std::size_t b) {
        return std::popcount(automaton.members(a)) < std::popcount(automaton.members(b));
    });

    int best = m * n + 1;
    std::vector<std::uint16_t> best_columns;

    struct Back {
        std::uint32_t prev;
        std::uint16_t column;
    };
    std::vector<std::vector<int>> dist(static_cast<std::size_t>(n) + 1, std::vector<int>(S, kUnreached));
    std::vector<std::vector<Back>> back(static_cast<std::size_t>(n) + 1, std::vector<Back>(S));
    std::vector<std::vector<std::uint32_t>> touched(static_cast<std::size_t>(n) + 1);

    for (std::size_t start : starts) {
        const int min_col = std::popcount(automaton.members(start));
        if (min_col * n >= best) break;
        for (auto& layer : touched) layer.clear();
        dist[0][start] = 0;
        touched[0].push_back(static_cast<std::uint32_t>(start));
        for (int t = 0; t < n; ++t) {
            const int remaining_after = n - t - 1;
            for (std::uint32_t s : touched[static_cast<std::size_t>(t)]) {
                const int base = dist[static_cast<std::size_t>(t)][s];
                for (std::size_t e = automaton.edges_begin(s); e < automaton.edges_end(s); ++e) {
                    const auto& ed = automaton.edge(e);
                    if (ed.cost < min_col) continue;
                    if (t + 1 == n && ed.target != start) continue;
                    const int v = base + ed.cost;
                    if (v + remaining_after * min_col >= best) continue;
                    int& slot = dist[static_cast<std::size_t>(t) + 1][ed.target];
                    if (slot == kUnreached) touched[static_cast<std::size_t>(t) + 1].push_back(ed.target);
                    if (v < slot) {
                        slot = v;
                        back[static_cast<std::size_t>(t) + 1][ed.target] = {s, ed.column};
                    }
                }
            }
        }
        const int closed = dist[static_cast<std::size_t>(n)][start];
        if (closed < best) {
            best = closed;
            best_columns.assign(static_cast<std::size_t>(n), 0);
            std::uint32_t s = static_cast<std::uint32_t>(start);
            for (int t = n; t >= 1; --t) {
                const Back b = back[static_cast<std::size_t>(t)][s];
                best_columns[static_cast<std::size_t>(t) % n] = b.column;
                s = b.prev;
            }
        }
        for (std::size_t t = 0; t <= static_cast<std::size_t>(n); ++t)
            for (std::uint32_t s : touched[t]) dist[t][s] = kUnreached;
    }
    if (best_columns.empty()) throw std::logic_error("oracle: column DP found no 2-dominating set");

    VertexSet w(spec);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < m; ++i)
            if (best_columns[static_cast<std::size_t>(j)] >> i & 1u) w.insert({i + 1, j + 1});
    if (static_cast<int>(w.size()) != best) throw std::logic_error("oracle: witness size mismatch");
    return {best, w};
}

// ---------------------------------------------------------------------------
// Border DP for omega2

namespace detail {

inline constexpr int kBorderMasks = 1 << kBorderRows;
inline constexpr int kNoCost = std::numeric_limits<int>::max() / 4;

/// Share of 4|R| - 2|A^R| - |B^R| owned by the middle column `mid`, given its
/// left and right neighbor columns; kNoCost if the middle column violates the
/// border conditions. Row 6 of the middle column is owned here too.
inline int border_column_cost(std::uint32_t left, std::uint32_t mid, std::uint32_t right) {
    int cost = 4 * std::popcount(mid);
    for (int i = 0; i < kBorderRows; ++i) {
        if (mid >> i & 1u) continue;
        int cnt = static_cast<int>(left >> i & 1u) + static_cast<int>(right >> i & 1u);
        if (i > 0) cnt += static_cast<int>(mid >> (i - 1) & 1u);
        if (i + 1 < kBorderRows) cnt += static_cast<int>(mid >> (i + 1) & 1u);
        const int need = i + 1 < kBorderRows ? 2 : 1;
        if (cnt < need) return kNoCost;
        cost -= cnt >= 2 ? 2 : 1;
    }
    if (mid >> (kBorderRows - 1) & 1u) cost -= 1;  // row 6 below a fifth-row member
    return cost;
}

using CostCube = std::array<int, kBorderMasks * kBorderMasks * kBorderMasks>;

inline const CostCube& border_cost_cube() {
    static const CostCube cube = [] {
        CostCube c{};
        for (std::uint32_t a = 0; a < kBorderMasks; ++a)
            for (std::uint32_t b = 0; b < kBorderMasks; ++b)
                for (std::uint32_t d = 0; d < kBorderMasks; ++d)
                    c[(a * kBorderMasks + b) * kBorderMasks + d] = border_column_cost(a, b, d);
        return c;
    }();
    return cube;
}

inline int cube_at(const CostCube& c, std::uint32_t a, std::uint32_t b, std::uint32_t d) {
    return c[(a * kBorderMasks + b) * kBorderMasks + d];
}

}  // namespace detail

/// Minimum wasted 2-domination over all border sets of a cylinder with n columns, with a witness.
inline Omega2Result omega2_oracle(int n) {
    if (n < kOmegaOracleMinColumns || n > kOmegaOracleMaxColumns)
        throw std::invalid_argument("oracle: omega2 oracle limited to 16 <= n <= 24 (got " + std::to_string(n) + ")");
    using namespace detail;
    const auto& cube = border_cost_cube();
    constexpr int P = kBorderMasks * kBorderMasks;  // pair state (previous, current)

    int best = kNoCost;
    std::vector<std::uint8_t> best_columns;
    std::vector<std::vector<int>> dist(static_cast<std::size_t>(n), std::vector<int>(P, kNoCost));
    std::vector<std::vector<std::uint8_t>> back(static_cast<std::size_t>(n), std::vector<std::uint8_t>(P, 0));

    // Fix columns 1 and 2; dist[j][(c_j, c_{j+1})] (0-based j) holds the cost of columns 2..j.
    for (std::uint32_t c1 = 0; c1 < kBorderMasks; ++c1) {
        for (std::uint32_t c2 = 0; c2 < kBorderMasks; ++c2) {
            for (auto& layer : dist) std::fill(layer.begin(), layer.end(), kNoCost);
            dist[0][c1 * kBorderMasks + c2] = 0;
            for (int j = 0; j + 2 < n; ++j) {
                const auto& cur = dist[static_cast<std::size_t>(j)];
                auto& nxt = dist[static_cast<std::size_t>(j) + 1];
                auto& bk = back[static_cast<std::size_t>(j) + 1];
                for (int st = 0; st < P; ++st) {
                    if (cur[st] >= kNoCost) continue;
                    const std::uint32_t a = static_cast<std::uint32_t>(st) / kBorderMasks;
                    const std::uint32_t b = static_cast<std::uint32_t>(st) % kBorderMasks;
                    for (std::uint32_t c = 0; c < kBorderMasks; ++c) {
                        const int w = cube_at(cube, a, b, c);
                        if (w >= kNoCost) continue;
                        const int v = cur[st] + w;
                        const int to = static_cast<int>(b * kBorderMasks + c);
                        if (v < nxt[to]) {
                            nxt[to] = v;
                            bk[to] = static_cast<std::uint8_t>(a);
                        }
                    }
                }
            }
            // Close: column n sees (c_{n-1}, c_n, c1), column 1 sees (c_n, c1, c2).
            const auto& last = dist[static_cast<std::size_t>(n) - 2];
            for (int st = 0; st < P; ++st) {
                if (last[st] >= kNoCost) continue;
                const std::uint32_t a = static_cast<std::uint32_t>(st) / kBorderMasks;
                const std::uint32_t b = static_cast<std::uint32_t>(st) % kBorderMasks;
                const int wn = cube_at(cube, a, b, c1);
                const int w1 = cube_at(cube, b, c1, c2);
                if (wn >= kNoCost || w1 >= kNoCost) continue;
                const int v = last[st] + wn + w1;
                if (v < best) {
                    best = v;
                    best_columns.assign(static_cast<std::size_t>(n), 0);
                    best_columns[0] = static_cast<std::uint8_t>(c1);
                    int state = st;
                    for (int j = n - 2; j >= 1; --j) {
                        const std::uint32_t cur_col = static_cast<std::uint32_t>(state) % kBorderMasks;
                        const std::uint32_t prev_col = static_cast<std::uint32_t>(state) / kBorderMasks;
                        best_columns[static_cast<std::size_t>(j) + 1] = static_cast<std::uint8_t>(cur_col);
                        const std::uint32_t before = back[static_cast<std::size_t>(j)][state];
                        state = static_cast<int>(before * kBorderMasks + prev_col);
                    }
                    best_columns[1] = static_cast<std::uint8_t>(c2);
                }
            }
        }
    }
    if (best >= kNoCost) throw std::logic_error("oracle: no border set found");

    const CylinderSpec spec(kMinBorderRows, n);
    VertexSet w(spec);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < kBorderRows; ++i)
            if (best_columns[static_cast<std::size_t>(j)] >> i & 1u) w.insert({i + 1, j + 1});
    return {best, w};
}

/// Minimum wasted 2-domination on a non-cyclic 5 x k border strip (plus the row below it):
/// the end columns simply have no outer horizontal neighbor.
inline long long omega2_strip_oracle(int k) {
    if (k < 1 || k > 64) throw std::invalid_argument("oracle: strip length must be in 1..64");
    using namespace detail;
    const auto& cube = border_cost_cube();
    constexpr int P = kBorderMasks * kBorderMasks;
    // State (c_{j-1}, c_j) with column 0 empty; columns 1..j-1 already charged.
    std::vector<int> cur(P, kNoCost), nxt(P, kNoCost);
    for (std::uint32_t c = 0; c < kBorderMasks; ++c) cur[c] = 0;
    for (int j = 1; j < k; ++j) {
        std::fill(nxt.begin(), nxt.end(), kNoCost);
        for (int st = 0; st < P; ++st) {
            if (cur[st] >= kNoCost) continue;
            const std::uint32_t a = static_cast<std::uint32_t>(st) / kBorderMasks;
            const std::uint32_t b = static_cast<std::uint32_t>(st) % kBorderMasks;
            for (std::uint32_t c = 0; c < kBorderMasks; ++c) {
                const int w = cube_at(cube, a, b, c);
                if (w >= kNoCost) continue;
                auto& slot = nxt[b * kBorderMasks + c];
                slot = std::min(slot, cur[st] + w);
            }
        }
        std::swap(cur, nxt);
    }
    int best = kNoCost;
    for (int st = 0; st < P; ++st) {
        if (cur[st] >= kNoCost) continue;
        const int w = cube_at(cube, static_cast<std::uint32_t>(st) / kBorderMasks,
                              static_cast<std::uint32_t>(st) % kBorderMasks, 0);
        if (w < kNoCost) best = std::min(best, cur[st] + w);
    }
    if (best >= kNoCost) throw std::logic_error("oracle: no border strip set found");
    return best;
}

}  // namespace cyl2dom::oracle
