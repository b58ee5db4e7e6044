#pragma once

/**
 * @file tropical.hpp
 * @brief (min,+) semiring over the integers extended with +infinity.
 *
 * In this semiring "addition" is min and "multiplication" is +, so the n-th
 * power of an arc-label matrix holds the minimum weight of the length-n
 * paths between every pair of vertices.
 *
 * Finite values are 32-bit signed integers; every finite sum is checked and
 * throws std::overflow_error instead of wrapping.
 */

#include <algorithm>
#include <cstdint>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cyl2dom {

class TropicalValue {
public:
    using rep = std::int32_t;

    /// The semiring zero (+infinity).
    constexpr TropicalValue() noexcept = default;
    constexpr TropicalValue(rep finite) noexcept : v_(finite), finite_(true) {}

    static constexpr TropicalValue infinity() noexcept { return {}; }

    constexpr bool is_finite() const noexcept { return finite_; }
    constexpr bool is_infinite() const noexcept { return !finite_; }

    /// Finite payload. Throws on infinity.
    constexpr rep value() const {
        if (!finite_) throw std::domain_error("tropical: value() of infinity");
        return v_;
    }

    friend constexpr bool operator==(TropicalValue a, TropicalValue b) noexcept {
        return a.finite_ == b.finite_ && (!a.finite_ || a.v_ == b.v_);
    }

    /// Total order with infinity as top.
    friend constexpr bool operator<(TropicalValue a, TropicalValue b) noexcept {
        if (!a.finite_) return false;
        if (!b.finite_) return true;
        return a.v_ < b.v_;
    }
    friend constexpr bool operator<=(TropicalValue a, TropicalValue b) noexcept { return !(b < a); }

    /// Semiring addition.
    friend constexpr TropicalValue tmin(TropicalValue a, TropicalValue b) noexcept {
        return b < a ? b : a;
    }

    /// Semiring multiplication; infinity absorbs.
    friend TropicalValue tadd(TropicalValue a, TropicalValue b) {
        if (!a.finite_ || !b.finite_) return infinity();
        return TropicalValue{checked_add(a.v_, b.v_)};
    }

    static rep checked_add(rep a, rep b) {
        rep out;
        if (__builtin_add_overflow(a, b, &out))
            throw std::overflow_error("tropical: integer overflow in finite addition");
        return out;
    }

    std::string to_string() const { return finite_ ? std::to_string(v_) : std::string("inf"); }

    static TropicalValue parse(std::string_view text) {
        while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
        while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r'))
            text.remove_suffix(1);
        if (text == "inf") return infinity();
        if (text.empty()) throw std::invalid_argument("tropical: empty entry");
        std::size_t used = 0;
        long long parsed = 0;
        try {
            parsed = std::stoll(std::string(text), &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("tropical: malformed entry '" + std::string(text) + "'");
        }
        if (used != text.size())
            throw std::invalid_argument("tropical: malformed entry '" + std::string(text) + "'");
        if (parsed < std::numeric_limits<rep>::min() || parsed > std::numeric_limits<rep>::max())
            throw std::overflow_error("tropical: entry out of 32-bit range");
        return TropicalValue{static_cast<rep>(parsed)};
    }

    friend std::ostream& operator<<(std::ostream& os, TropicalValue v) { return os << v.to_string(); }

private:
    rep v_ = 0;
    bool finite_ = false;
};

inline constexpr TropicalValue kInf = TropicalValue::infinity();

/// Dense square matrix over the (min,+) semiring. Immutable after construction.
class TropicalMatrix {
public:
    TropicalMatrix(std::size_t order, std::vector<TropicalValue> entries)
        : order_(order), a_(std::move(entries)) {
        if (order_ == 0) throw std::invalid_argument("tropical: matrix order must be positive");
        if (a_.size() != order_ * order_)
            throw std::invalid_argument("tropical: entry count does not match order");
    }

    static TropicalMatrix filled(std::size_t order, TropicalValue v) {
        return TropicalMatrix(order, std::vector<TropicalValue>(order * order, v));
    }

    /// 0 on the diagonal, infinity elsewhere.
    static TropicalMatrix identity(std::size_t order) {
        std::vector<TropicalValue> e(order * order, kInf);
        for (std::size_t i = 0; i < order; ++i) e[i * order + i] = TropicalValue{0};
        return TropicalMatrix(order, std::move(e));
    }

    static TropicalMatrix from_rows(const std::vector<std::vector<TropicalValue>>& rows) {
        const std::size_t s = rows.size();
        std::vector<TropicalValue> e;
        e.reserve(s * s);
        for (const auto& r : rows) {
            if (r.size() != s) throw std::invalid_argument("tropical: rows are not square");
            e.insert(e.end(), r.begin(), r.end());
        }
        return TropicalMatrix(s, std::move(e));
    }

    std::size_t order() const noexcept { return order_; }

    TropicalValue operator()(std::size_t i, std::size_t j) const {
        if (i >= order_ || j >= order_) throw std::out_of_range("tropical: index out of range");
        return a_[i * order_ + j];
    }

    const std::vector<TropicalValue>& entries() const noexcept { return a_; }

    friend bool operator==(const TropicalMatrix&, const TropicalMatrix&) = default;

private:
    std::size_t order_;
    std::vector<TropicalValue> a_;
};

/// (A ⊠ B)_ij = min_k (A_ik + B_kj).
inline TropicalMatrix tmul(const TropicalMatrix& A, const TropicalMatrix& B) {
    if (A.order() != B.order()) throw std::invalid_argument("tropical: dimension mismatch in product");
    const std::size_t s = A.order();
    const auto& a = A.entries();
    const auto& b = B.entries();
    std::vector<TropicalValue> c(s * s, kInf);
    for (std::size_t i = 0; i < s; ++i) {
        TropicalValue* row = c.data() + i * s;
        for (std::size_t k = 0; k < s; ++k) {
            const TropicalValue aik = a[i * s + k];
            if (aik.is_infinite()) continue;
            const TropicalValue* brow = b.data() + k * s;
            for (std::size_t j = 0; j < s; ++j) {
                if (brow[j].is_infinite()) continue;
                const TropicalValue sum = tadd(aik, brow[j]);
                if (sum < row[j]) row[j] = sum;
            }
        }
    }
    return TropicalMatrix(s, std::move(c));
}

/// (alpha ⊠ A)_ij = alpha + A_ij; infinite entries stay infinite.
inline TropicalMatrix scalar_tmul(TropicalValue::rep alpha, const TropicalMatrix& A) {
    std::vector<TropicalValue> e = A.entries();
    for (auto& x : e) x = tadd(TropicalValue{alpha}, x);
    return TropicalMatrix(A.order(), std::move(e));
}

/// A^1, A^2, ..., A^n computed by successive left products with A.
inline std::vector<TropicalMatrix> tpowers(const TropicalMatrix& A, std::size_t n) {
    if (n == 0) throw std::invalid_argument("tropical: power exponent must be >= 1");
    std::vector<TropicalMatrix> out;
    out.reserve(n);
    out.push_back(A);
    for (std::size_t k = 2; k <= n; ++k) out.push_back(tmul(out.back(), A));
    return out;
}

inline TropicalMatrix tpow(const TropicalMatrix& A, std::size_t n) {
    if (n == 0) throw std::invalid_argument("tropical: power exponent must be >= 1");
    TropicalMatrix p = A;
    for (std::size_t k = 2; k <= n; ++k) p = tmul(p, A);
    return p;
}

inline TropicalValue min_diagonal(const TropicalMatrix& A) {
    TropicalValue best = kInf;
    for (std::size_t i = 0; i < A.order(); ++i) best = tmin(best, A(i, i));
    return best;
}

/// If B = b ⊠ A for a single integer b (identical infinity pattern), returns b.
/// Two all-infinite matrices are related by b = 0.
inline std::optional<TropicalValue::rep> uniform_shift(const TropicalMatrix& A, const TropicalMatrix& B) {
    if (A.order() != B.order()) return std::nullopt;
    std::optional<long long> shift;
    const auto& a = A.entries();
    const auto& b = B.entries();
    for (std::size_t idx = 0; idx < a.size(); ++idx) {
        if (a[idx].is_finite() != b[idx].is_finite()) return std::nullopt;
        if (a[idx].is_infinite()) continue;
        const long long d = static_cast<long long>(b[idx].value()) - a[idx].value();
        if (!shift) shift = d;
        else if (*shift != d) return std::nullopt;
    }
    if (!shift) return 0;
    if (*shift < std::numeric_limits<TropicalValue::rep>::min() ||
        *shift > std::numeric_limits<TropicalValue::rep>::max())
        return std::nullopt;
    return static_cast<TropicalValue::rep>(*shift);
}

/// Witness that A^(n0+a) = b ⊠ A^n0, which then holds for every n >= n0.
struct PeriodicityCertificate {
    std::size_t n0 = 0;
    std::size_t a = 0;
    TropicalValue::rep b = 0;
    TropicalMatrix power_at_n0;
    TropicalMatrix power_at_n0_plus_a;

    bool verify() const {
        return power_at_n0.order() == power_at_n0_plus_a.order() &&
               scalar_tmul(b, power_at_n0) == power_at_n0_plus_a;
    }
};

class PeriodicityNotFound : public std::runtime_error {
public:
    explicit PeriodicityNotFound(std::size_t bound)
        : std::runtime_error("tropical: no shift periodicity with n0 + a <= " + std::to_string(bound) +
                             "; raise the exponent bound"),
          bound_(bound) {}
    std::size_t bound() const noexcept { return bound_; }

private:
    std::size_t bound_;
};

/// Searches a = 1, 2, ... and for each a the offsets n0 = 1 .. max_exponent - a.
/// `powers[k-1]` must hold A^k for k = 1 .. max_exponent.
inline PeriodicityCertificate find_shift_periodicity(const std::vector<TropicalMatrix>& powers) {
    const std::size_t max_exponent = powers.size();
    if (max_exponent < 2) throw std::invalid_argument("tropical: periodicity search needs max_exponent >= 2");
    for (std::size_t a = 1; a < max_exponent; ++a) {
        for (std::size_t n0 = 1; n0 + a <= max_exponent; ++n0) {
            const auto& lo = powers[n0 - 1];
            const auto& hi = powers[n0 + a - 1];
            if (auto b = uniform_shift(lo, hi))
                return PeriodicityCertificate{n0, a, *b, lo, hi};
        }
    }
    throw PeriodicityNotFound(max_exponent);
}

inline PeriodicityCertificate find_shift_periodicity(const TropicalMatrix& A, std::size_t max_exponent) {
    if (max_exponent < 2) throw std::invalid_argument("tropical: periodicity search needs max_exponent >= 2");
    return find_shift_periodicity(tpowers(A, max_exponent));
}

// CSV file format: "order=<s>" on the first line, then s rows of s comma-separated
// entries, each a decimal integer or "inf".

inline void write_matrix_csv(std::ostream& os, const TropicalMatrix& A) {
    os << "order=" << A.order() << '\n';
    for (std::size_t i = 0; i < A.order(); ++i) {
        for (std::size_t j = 0; j < A.order(); ++j) {
            if (j) os << ',';
            os << A(i, j).to_string();
        }
        os << '\n';
    }
}

inline TropicalMatrix read_matrix_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw std::invalid_argument("matrix csv: empty input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind("order=", 0) != 0) throw std::invalid_argument("matrix csv: missing 'order=' header");
    std::size_t order = 0;
    try {
        std::size_t used = 0;
        const long long v = std::stoll(line.substr(6), &used);
        if (used != line.size() - 6 || v <= 0) throw std::invalid_argument("bad order");
        order = static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw std::invalid_argument("matrix csv: malformed order header '" + line + "'");
    }
    std::vector<TropicalValue> entries;
    entries.reserve(order * order);
    for (std::size_t i = 0; i < order; ++i) {
        if (!std::getline(is, line)) throw std::invalid_argument("matrix csv: too few rows");
        std::size_t count = 0;
        std::stringstream row(line);
        std::string cell;
        while (std::getline(row, cell, ',')) {
            entries.push_back(TropicalValue::parse(cell));
            ++count;
        }
        if (count != order)
            throw std::invalid_argument("matrix csv: row " + std::to_string(i + 1) + " has " +
                                        std::to_string(count) + " entries, expected " + std::to_string(order));
    }
    while (std::getline(is, line)) {
        if (!line.empty() && line != "\r") throw std::invalid_argument("matrix csv: trailing data after last row");
    }
    return TropicalMatrix(order, std::move(entries));
}

}  // namespace cyl2dom
