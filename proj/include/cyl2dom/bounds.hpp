#pragma once

// Bounds on the 2-domination number of P_m □ C_n.
//
// Lower: for m >= 13, n >= 16, gamma2 >= (mn + omega2(n)) / 3.
// Upper: for m >= 13, n >= 18, n = 0 mod 3, a diagonal pattern with n/3 vertices
// per row plus a repair of the two boundary rows gives (m + 2) n / 3 vertices.
// Together: gamma2 = (m + 2) n / 3 whenever n = 0 mod 3 (valid from m >= 8).

#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

#include "cylinder.hpp"
#include "omega.hpp"

namespace cyl2dom {

struct Rational {
    long long num = 0;
    long long den = 1;

    static Rational make(long long num, long long den) {
        if (den == 0) throw std::domain_error("rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const long long g = std::gcd(num < 0 ? -num : num, den);
        return {num / g, den / g};
    }

    long long ceil() const { return num >= 0 ? (num + den - 1) / den : -((-num) / den); }

    std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }

    friend bool operator==(const Rational&, const Rational&) = default;
};

enum class BoundStatus {
    Exact,           ///< n = 0 mod 3 and m >= 8
    LowerBoundOnly,  ///< m >= 13, n >= 16, n != 0 mod 3
    OutOfRange,      ///< values for these sizes are not derived here
};

inline const char* to_string(BoundStatus s) {
    switch (s) {
        case BoundStatus::Exact: return "exact";
        case BoundStatus::LowerBoundOnly: return "lower_bound_only";
        case BoundStatus::OutOfRange: return "out_of_range";
    }
    return "unknown";
}

struct BoundResult {
    int m = 0;
    int n = 0;
    BoundStatus status = BoundStatus::OutOfRange;
    std::optional<Rational> lower_rational;
    std::optional<long long> lower;
    std::optional<long long> upper;
    std::optional<long long> exact;
    std::optional<VertexSet> witness;
};

inline bool lower_bound_applies(int m, int n) noexcept { return m >= kMinBorderRows && n >= kMinOmegaColumns; }

/// (mn + omega2(n)) / 3 and its ceiling. The {16, 19} exceptions enter only through omega2.
inline BoundResult lower_bound(int m, int n, const OmegaTable& table = default_omega_table()) {
    if (!lower_bound_applies(m, n))
        throw std::invalid_argument("bounds: lower bound needs m >= 13 and n >= 16 (got m = " + std::to_string(m) +
                                    ", n = " + std::to_string(n) + ")");
    BoundResult r;
    r.m = m;
    r.n = n;
    r.status = BoundStatus::LowerBoundOnly;
    r.lower_rational = Rational::make(static_cast<long long>(m) * n + table(n), 3);
    r.lower = r.lower_rational->ceil();
    return r;
}

inline bool construction_applies(int m, int n) noexcept { return m >= kMinBorderRows && n >= 18 && n % 3 == 0; }

/// Row i holds the columns j with j = i (mod 3), 1-based; n/3 vertices per row.
inline VertexSet diagonal_pattern(const CylinderSpec& spec) {
    if (spec.n() % 3 != 0) throw std::invalid_argument("bounds: diagonal pattern needs n = 0 mod 3");
    VertexSet s(spec);
    for (int i = 1; i <= spec.m(); ++i)
        for (int j = 1; j <= spec.n(); ++j)
            if ((j - i) % 3 == 0) s.insert({i, j});
    return s;
}

/// Diagonal pattern plus every vertex it leaves with fewer than two neighbors.
inline VertexSet construct_2dominating(int m, int n) {
    if (!construction_applies(m, n))
        throw std::invalid_argument("bounds: construction needs m >= 13, n >= 18 and n = 0 mod 3 (got m = " +
                                    std::to_string(m) + ", n = " + std::to_string(n) + ")");
    const CylinderSpec spec(m, n);
    VertexSet s = diagonal_pattern(spec);
    const auto deficient = deficient_vertices(s);
    int top = 0;
    int bottom = 0;
    for (Vertex v : deficient) {
        if (v.row == 1) ++top;
        else if (v.row == m) ++bottom;
        else throw std::logic_error("bounds: pattern leaves an interior vertex under-dominated");
        s.insert(v);
    }
    if (top != n / 3 || bottom != n / 3) throw std::logic_error("bounds: boundary repair size differs from n/3");
    if (!is_2dominating(s)) throw std::logic_error("bounds: repaired pattern is not 2-dominating");
    if (s.size() != static_cast<std::size_t>((m + 2) * n / 3))
        throw std::logic_error("bounds: construction size differs from (m+2)n/3");
    return s;
}

/// Range dispatcher: exact value, lower bound only, or out of range.
inline BoundResult gamma2(int m, int n, const OmegaTable& table = default_omega_table()) {
    BoundResult r;
    r.m = m;
    r.n = n;
    if (lower_bound_applies(m, n)) r = lower_bound(m, n, table);
    if (m >= 8 && n >= 3 && n % 3 == 0) {
        const long long value = static_cast<long long>(m + 2) * n / 3;
        r.status = BoundStatus::Exact;
        r.exact = value;
        if (!r.lower) {
            r.lower_rational = Rational::make(value, 1);
            r.lower = value;
        }
        if (construction_applies(m, n)) {
            r.witness = construct_2dominating(m, n);
            r.upper = static_cast<long long>(r.witness->size());
        } else {
            r.upper = value;
        }
        if (*r.lower > value || *r.upper < value) throw std::logic_error("bounds: lower/exact/upper out of order");
    }
    return r;
}

}  // namespace cyl2dom
