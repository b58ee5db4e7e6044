#pragma once

// The cylinder P_m □ C_n: m rows along the path, n columns around the cycle.
// Vertices are addressed 1-based as (row, column); column n is adjacent to
// column 1.

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyl2dom {

/// Rows in each border region.
inline constexpr int kBorderRows = 5;
/// Smallest m for which the two borders and the center are disjoint and the center is nonempty.
inline constexpr int kMinBorderRows = 13;

struct Vertex {
    int row = 0;
    int col = 0;
    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

class CylinderSpec {
public:
    CylinderSpec(int m, int n) : m_(m), n_(n) {
        if (m < 2) throw std::invalid_argument("cylinder: m must be >= 2 (got " + std::to_string(m) + ")");
        if (n < 3) throw std::invalid_argument("cylinder: n must be >= 3 (got " + std::to_string(n) + ")");
    }

    int m() const noexcept { return m_; }
    int n() const noexcept { return n_; }
    std::size_t vertex_count() const noexcept { return static_cast<std::size_t>(m_) * n_; }

    bool contains(Vertex v) const noexcept { return v.row >= 1 && v.row <= m_ && v.col >= 1 && v.col <= n_; }

    std::size_t index(Vertex v) const {
        if (!contains(v))
            throw std::out_of_range("cylinder: vertex (" + std::to_string(v.row) + "," + std::to_string(v.col) +
                                    ") outside P_" + std::to_string(m_) + " x C_" + std::to_string(n_));
        return static_cast<std::size_t>(v.row - 1) * n_ + (v.col - 1);
    }

    Vertex vertex(std::size_t idx) const {
        return Vertex{static_cast<int>(idx / n_) + 1, static_cast<int>(idx % n_) + 1};
    }

    /// Column index modulo n, 1-based.
    int wrap_col(int c) const noexcept { return ((c - 1) % n_ + n_) % n_ + 1; }

    /// Row reflection i -> m + 1 - i, mapping the bottom border onto the top one.
    Vertex reflect(Vertex v) const noexcept { return Vertex{m_ + 1 - v.row, v.col}; }

    friend bool operator==(const CylinderSpec&, const CylinderSpec&) = default;

private:
    int m_;
    int n_;
};

/// Horizontal neighbors first (column - 1, column + 1), then vertical (row - 1, row + 1) when inside the path.
inline std::vector<Vertex> neighbors(const CylinderSpec& spec, Vertex v) {
    (void)spec.index(v);
    std::vector<Vertex> out;
    out.reserve(4);
    out.push_back({v.row, spec.wrap_col(v.col - 1)});
    out.push_back({v.row, spec.wrap_col(v.col + 1)});
    if (v.row > 1) out.push_back({v.row - 1, v.col});
    if (v.row < spec.m()) out.push_back({v.row + 1, v.col});
    return out;
}

/// A set of vertices of one cylinder. Value type; membership is a bitmap.
class VertexSet {
public:
    explicit VertexSet(CylinderSpec spec) : spec_(spec), bits_(spec.vertex_count(), 0) {}

    VertexSet(CylinderSpec spec, const std::vector<Vertex>& members) : VertexSet(spec) {
        for (Vertex v : members) insert(v);
    }

    static VertexSet all(CylinderSpec spec) {
        VertexSet s(spec);
        std::fill(s.bits_.begin(), s.bits_.end(), 1);
        s.size_ = s.bits_.size();
        return s;
    }

    /// Every vertex in rows [first_row, last_row].
    static VertexSet rows(CylinderSpec spec, int first_row, int last_row) {
        VertexSet s(spec);
        for (int i = first_row; i <= last_row; ++i)
            for (int j = 1; j <= spec.n(); ++j) s.insert({i, j});
        return s;
    }

    const CylinderSpec& spec() const noexcept { return spec_; }
    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }

    bool contains(Vertex v) const { return bits_[spec_.index(v)] != 0; }
    bool contains_index(std::size_t idx) const noexcept { return bits_[idx] != 0; }

    void insert(Vertex v) {
        auto& b = bits_[spec_.index(v)];
        if (!b) {
            b = 1;
            ++size_;
        }
    }

    void erase(Vertex v) {
        auto& b = bits_[spec_.index(v)];
        if (b) {
            b = 0;
            --size_;
        }
    }

    /// Members in row-major order.
    std::vector<Vertex> members() const {
        std::vector<Vertex> out;
        out.reserve(size_);
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i]) out.push_back(spec_.vertex(i));
        return out;
    }

    bool all_rows_within(int first_row, int last_row) const {
        for (std::size_t i = 0; i < bits_.size(); ++i) {
            if (!bits_[i]) continue;
            const int r = spec_.vertex(i).row;
            if (r < first_row || r > last_row) return false;
        }
        return true;
    }

    /// Image under the row reflection i -> m + 1 - i.
    VertexSet reflected() const {
        VertexSet out(spec_);
        for (Vertex v : members()) out.insert(spec_.reflect(v));
        return out;
    }

    VertexSet intersect_rows(int first_row, int last_row) const {
        VertexSet out(spec_);
        for (Vertex v : members())
            if (v.row >= first_row && v.row <= last_row) out.insert(v);
        return out;
    }

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.spec_ == b.spec_ && a.bits_ == b.bits_;
    }

private:
    CylinderSpec spec_;
    std::vector<unsigned char> bits_;
    std::size_t size_ = 0;
};

inline int count_neighbors_in(const VertexSet& s, Vertex v) {
    int c = 0;
    for (Vertex u : neighbors(s.spec(), v)) c += s.contains(u) ? 1 : 0;
    return c;
}

/// Every vertex outside S has at least two neighbors in S.
inline bool is_2dominating(const VertexSet& S) {
    const auto& spec = S.spec();
    for (std::size_t i = 0; i < spec.vertex_count(); ++i) {
        if (S.contains_index(i)) continue;
        if (count_neighbors_in(S, spec.vertex(i)) < 2) return false;
    }
    return true;
}

/// Vertices outside S with fewer than two neighbors in S, row-major.
inline std::vector<Vertex> deficient_vertices(const VertexSet& S) {
    std::vector<Vertex> out;
    const auto& spec = S.spec();
    for (std::size_t i = 0; i < spec.vertex_count(); ++i) {
        if (S.contains_index(i)) continue;
        const Vertex v = spec.vertex(i);
        if (count_neighbors_in(S, v) < 2) out.push_back(v);
    }
    return out;
}

// Region k = 1 is the top border (rows 1..5), k = 2 the center, k = 3 the bottom border.
struct RowRange {
    int first;
    int last;
};

inline RowRange region_rows(const CylinderSpec& spec, int k) {
    switch (k) {
        case 1: return {1, kBorderRows};
        case 2: return {kBorderRows + 1, spec.m() - kBorderRows};
        case 3: return {spec.m() - kBorderRows + 1, spec.m()};
        default: throw std::invalid_argument("cylinder: region index must be 1, 2 or 3");
    }
}

struct PartitionReport {
    struct Region {
        std::size_t s_size = 0;  ///< |S ∩ V_k|
        std::size_t a_size = 0;  ///< outside S, >= 2 neighbors in S_k
        std::size_t b_size = 0;  ///< outside S, exactly 1 neighbor in S_k
    };
    std::size_t vertex_count = 0;
    std::size_t s_size = 0;
    std::array<Region, 3> regions{};  ///< index k - 1
};

inline void require_border_geometry(const CylinderSpec& spec) {
    if (spec.m() < kMinBorderRows)
        throw std::invalid_argument("cylinder: borders overlap for m = " + std::to_string(spec.m()) +
                                    " (need m >= " + std::to_string(kMinBorderRows) + ")");
}

inline PartitionReport region_partition(const VertexSet& S) {
    const auto& spec = S.spec();
    require_border_geometry(spec);
    PartitionReport rep;
    rep.vertex_count = spec.vertex_count();
    rep.s_size = S.size();
    for (int k = 1; k <= 3; ++k) {
        const RowRange rr = region_rows(spec, k);
        const VertexSet sk = S.intersect_rows(rr.first, rr.last);
        auto& reg = rep.regions[k - 1];
        reg.s_size = sk.size();
        for (std::size_t i = 0; i < spec.vertex_count(); ++i) {
            if (S.contains_index(i)) continue;
            const Vertex v = spec.vertex(i);
            const int c = count_neighbors_in(sk, v);
            if (c >= 2) {
                if (v.row < rr.first || v.row > rr.last)
                    throw std::logic_error("cylinder: A-set vertex escaped its region");
                ++reg.a_size;
            } else if (c == 1) {
                ++reg.b_size;
            }
        }
    }
    return rep;
}

namespace detail {

// Conditions for a set contained in the top border. Members of R carry no demand.
inline bool is_top_border_2dominating(const VertexSet& R) {
    const auto& spec = R.spec();
    if (R.empty() || !R.all_rows_within(1, kBorderRows)) return false;
    for (int i = 1; i <= kBorderRows; ++i) {
        const int need = i < kBorderRows ? 2 : 1;
        for (int j = 1; j <= spec.n(); ++j) {
            const Vertex v{i, j};
            if (!R.contains(v) && count_neighbors_in(R, v) < need) return false;
        }
    }
    return true;
}

}  // namespace detail

/// R lies in one border, every outer-row vertex of that border has two neighbors in R
/// and every vertex of its innermost row has one.
inline bool is_border_2dominating(const VertexSet& R) {
    require_border_geometry(R.spec());
    if (R.empty()) return false;
    if (R.all_rows_within(1, kBorderRows)) return detail::is_top_border_2dominating(R);
    if (R.all_rows_within(R.spec().m() - kBorderRows + 1, R.spec().m()))
        return detail::is_top_border_2dominating(R.reflected());
    return false;
}

struct WastedReport {
    std::size_t r_size = 0;
    std::size_t a_size = 0;
    std::size_t b_size = 0;
    long long omega = 0;  ///< 4|R| - (2|A^R| + |B^R|)
};

/// Wasted 2-domination of a border set. A^R and B^R range over the whole cylinder.
inline WastedReport wasted_2domination(const VertexSet& R) {
    if (!is_border_2dominating(R))
        throw std::invalid_argument("cylinder: wasted 2-domination needs a border-2-dominating set");
    if (!R.all_rows_within(1, kBorderRows)) return wasted_2domination(R.reflected());
    const auto& spec = R.spec();
    WastedReport rep;
    rep.r_size = R.size();
    for (std::size_t i = 0; i < spec.vertex_count(); ++i) {
        if (R.contains_index(i)) continue;
        const int c = count_neighbors_in(R, spec.vertex(i));
        if (c >= 2) ++rep.a_size;
        else if (c == 1) ++rep.b_size;
    }
    rep.omega = 4LL * static_cast<long long>(rep.r_size) - 2LL * static_cast<long long>(rep.a_size) -
                static_cast<long long>(rep.b_size);
    return rep;
}

/// Rows of '#' (member) and '.' (non-member), row 1 first.
inline std::string render_grid(const VertexSet& S) {
    std::string out;
    const auto& spec = S.spec();
    out.reserve(spec.vertex_count() + spec.m());
    for (int i = 1; i <= spec.m(); ++i) {
        for (int j = 1; j <= spec.n(); ++j) out.push_back(S.contains({i, j}) ? '#' : '.');
        out.push_back('\n');
    }
    return out;
}

}  // namespace cyl2dom
