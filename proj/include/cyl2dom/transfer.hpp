#pragma once

// Labeled digraph on the suitable words and its (min,+) arc-label matrix.
//
// For an arc q -> p (p may follow q):
//   d   = letters 0 in p                              (dominating vertices)
//   nd2 = letters 1 in p, plus rows with q_k = 2, p_k = 0   (newly 2-dominated)
//   nd1 = [q5 = 3] + [q5 = 2, p5 != 0] + [p5 = 0]           (newly 1-dominated)
// The last nd1 term is the row-6 vertex under a dominating fifth-row vertex of p.
// label = 4 d - (2 nd2 + nd1); summed along the closed walk of a border set it
// equals that set's wasted 2-domination.

#include <map>
#include <span>
#include <stdexcept>
#include <utility>

#include "tropical.hpp"
#include "words.hpp"

namespace cyl2dom {

struct ArcStats {
    int d = 0;
    int nd2 = 0;
    int nd1 = 0;
    int label = 0;

    friend bool operator==(const ArcStats&, const ArcStats&) = default;
};

/// Statistics of the arc q -> p. Throws unless p can follow q.
inline ArcStats arc_stats(const Word& q, const Word& p, const FollowRules& rules = default_follow_rules()) {
    if (!can_follow(p, q, rules))
        throw std::invalid_argument("transfer: " + p.str() + " cannot follow " + q.str());
    ArcStats s;
    for (int k = 1; k <= kWordLength; ++k) {
        if (p.at(k) == 0) ++s.d;
        if (p.at(k) == 1) ++s.nd2;
        if (q.at(k) == 2 && p.at(k) == 0) ++s.nd2;
    }
    const int q5 = q.at(kWordLength);
    const int p5 = p.at(kWordLength);
    s.nd1 = (q5 == 3 ? 1 : 0) + (q5 == 2 && p5 != 0 ? 1 : 0) + (p5 == 0 ? 1 : 0);
    s.label = 4 * s.d - (2 * s.nd2 + s.nd1);
    if (s.d < 0 || s.d > 5 || s.nd2 < 0 || s.nd2 > 10 || s.nd1 < 0 || s.nd1 > 3)
        throw std::logic_error("transfer: arc statistics out of range");
    return s;
}

class TransferDigraph {
public:
    using Arc = std::pair<std::size_t, std::size_t>;  // (tail q, head p) word indices

    TransferDigraph(WordTable table, std::map<Arc, ArcStats> arcs)
        : table_(std::move(table)), arcs_(std::move(arcs)) {}

    const WordTable& words() const noexcept { return table_; }
    std::size_t vertex_count() const noexcept { return table_.size(); }
    std::size_t arc_count() const noexcept { return arcs_.size(); }
    const std::map<Arc, ArcStats>& arcs() const noexcept { return arcs_; }

    const ArcStats* find(std::size_t q, std::size_t p) const {
        auto it = arcs_.find({q, p});
        return it == arcs_.end() ? nullptr : &it->second;
    }

    const ArcStats* find(const Word& q, const Word& p) const {
        auto qi = table_.index_of(q);
        auto pi = table_.index_of(p);
        if (!qi || !pi) return nullptr;
        return find(*qi, *pi);
    }

private:
    WordTable table_;
    std::map<Arc, ArcStats> arcs_;
};

/// Arcs over an explicit word table; the table is not size-checked here.
inline TransferDigraph build_transfer_digraph(WordTable table, const FollowRules& rules) {
    std::map<TransferDigraph::Arc, ArcStats> arcs;
    const auto& w = table.words();
    for (std::size_t qi = 0; qi < w.size(); ++qi)
        for (std::size_t pi = 0; pi < w.size(); ++pi)
            if (can_follow(w[pi], w[qi], rules)) arcs.emplace(TransferDigraph::Arc{qi, pi}, arc_stats(w[qi], w[pi], rules));
    return TransferDigraph(std::move(table), std::move(arcs));
}

inline TransferDigraph build_transfer_digraph() {
    return build_transfer_digraph(generate_word_table(), default_follow_rules());
}

/// A(D): entry (q, p) is the arc label, infinity where there is no arc. Row/column order is word-table order.
inline TropicalMatrix build_transfer_matrix(const TransferDigraph& D) {
    const std::size_t s = D.vertex_count();
    std::vector<TropicalValue> e(s * s, kInf);
    for (const auto& [arc, st] : D.arcs()) e[arc.first * s + arc.second] = TropicalValue{st.label};
    return TropicalMatrix(s, std::move(e));
}

/// Sum of arc labels along the closed walk w_1 -> w_2 -> ... -> w_n -> w_1.
inline long long closed_walk_weight(const TransferDigraph& D, std::span<const Word> walk) {
    if (walk.empty()) throw std::invalid_argument("transfer: empty walk");
    long long total = 0;
    for (std::size_t j = 0; j < walk.size(); ++j) {
        const Word& q = walk[j];
        const Word& p = walk[(j + 1) % walk.size()];
        const ArcStats* st = D.find(q, p);
        if (!st) throw std::invalid_argument("transfer: walk uses missing arc " + q.str() + " -> " + p.str());
        total += st->label;
    }
    return total;
}

}  // namespace cyl2dom
