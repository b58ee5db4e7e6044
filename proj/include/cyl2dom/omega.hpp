#pragma once

// omega2(n): minimum wasted 2-domination over the border sets of a cylinder
// with n columns, read off the diagonal of the n-th (min,+) power of A(D),
// and extended past the computed range through the shift-periodicity
// A^(n0+a) = b ⊠ A^n0, which gives omega2(n + a) = omega2(n) + b for n >= n0.

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "transfer.hpp"
#include "tropical.hpp"
#include "words.hpp"

namespace cyl2dom {

inline constexpr int kMinOmegaColumns = 16;
inline constexpr std::size_t kDefaultMaxExplicit = 60;

/// Raw output of the word -> digraph -> matrix -> powers pipeline.
struct PipelineResult {
    std::size_t word_count = 0;
    std::size_t arc_count = 0;
    std::vector<TropicalValue> diagonal_minima;  ///< index k - 1 holds min diag of A^k
    std::optional<PeriodicityCertificate> certificate;
};

/// Runs every pipeline stage with the given rules and never throws on unexpected sizes,
/// so corrupted rule tables can be observed rather than rejected.
inline PipelineResult run_pipeline(std::size_t max_exponent, const SuitabilityRules& suitability,
                                   const FollowRules& follow) {
    PipelineResult out;
    WordTable table = WordTable::build(suitability);
    out.word_count = table.size();
    if (table.size() == 0) return out;
    const TransferDigraph D = build_transfer_digraph(std::move(table), follow);
    out.arc_count = D.arc_count();
    const auto powers = tpowers(build_transfer_matrix(D), max_exponent);
    for (const auto& p : powers) out.diagonal_minima.push_back(min_diagonal(p));
    try {
        out.certificate = find_shift_periodicity(powers);
    } catch (const PeriodicityNotFound&) {
    }
    return out;
}

struct OmegaException {
    int n = 0;
    long long excess = 0;  ///< explicit value minus the linear law
    friend bool operator==(const OmegaException&, const OmegaException&) = default;
};

class OmegaTable {
public:
    OmegaTable(std::vector<long long> explicit_values, PeriodicityCertificate cert)
        : values_(std::move(explicit_values)), cert_(std::move(cert)) {
        derive_closed_form();
    }

    int first_n() const noexcept { return kMinOmegaColumns; }
    int last_explicit_n() const noexcept { return kMinOmegaColumns + static_cast<int>(values_.size()) - 1; }
    const std::vector<long long>& explicit_values() const noexcept { return values_; }
    const PeriodicityCertificate& certificate() const noexcept { return cert_; }

    /// omega2(n) = slope * n + intercept for n >= threshold(), when such a law exists.
    const std::optional<long long>& slope() const noexcept { return slope_; }
    const std::optional<long long>& intercept() const noexcept { return intercept_; }
    int threshold() const noexcept { return threshold_; }
    /// Explicit values off the linear law, in increasing n.
    const std::vector<OmegaException>& exceptions() const noexcept { return exceptions_; }

    std::string closed_form() const {
        std::ostringstream os;
        if (!slope_) {
            os << "omega2(n + " << cert_.a << ") = omega2(n) + " << cert_.b << " for n >= " << cert_.n0;
            return os.str();
        }
        os << "omega2(n) = " << *slope_ << "n";
        if (*intercept_ > 0) os << " + " << *intercept_;
        if (*intercept_ < 0) os << " - " << -*intercept_;
        os << " for n >= " << first_n();
        if (!exceptions_.empty()) {
            os << ", except";
            for (std::size_t i = 0; i < exceptions_.size(); ++i) {
                const auto& e = exceptions_[i];
                os << (i ? "," : "") << " n=" << e.n << " (" << (e.excess > 0 ? "+" : "") << e.excess << ")";
            }
        }
        return os.str();
    }

    long long operator()(long long n) const {
        if (n < kMinOmegaColumns)
            throw std::domain_error("omega2: n = " + std::to_string(n) + " is below " +
                                    std::to_string(kMinOmegaColumns));
        const long long last = last_explicit_n();
        if (n <= last) return values_[static_cast<std::size_t>(n - kMinOmegaColumns)];
        const long long a = static_cast<long long>(cert_.a);
        const long long t = (n - last + a - 1) / a;
        const long long base = n - a * t;
        return values_[static_cast<std::size_t>(base - kMinOmegaColumns)] + static_cast<long long>(cert_.b) * t;
    }

private:
    void derive_closed_form() {
        const long long n0 = static_cast<long long>(cert_.n0);
        const long long a = static_cast<long long>(cert_.a);
        const long long b = cert_.b;
        if (n0 + a - 1 > last_explicit_n() || n0 < kMinOmegaColumns || b % a != 0) {
            threshold_ = static_cast<int>(n0);
            return;
        }
        const long long slope = b / a;
        const long long icpt = (*this)(n0) - slope * n0;
        for (long long r = n0; r < n0 + a; ++r)
            if ((*this)(r) - slope * r != icpt) {
                threshold_ = static_cast<int>(n0);
                return;
            }
        slope_ = slope;
        intercept_ = icpt;
        threshold_ = first_n();
        for (int n = first_n(); n <= last_explicit_n(); ++n) {
            const long long diff = (*this)(n) - (slope * n + icpt);
            if (diff != 0) {
                exceptions_.push_back({n, diff});
                threshold_ = n + 1;
            }
        }
    }

    std::vector<long long> values_;  ///< omega2(16), omega2(17), ...
    PeriodicityCertificate cert_;
    std::optional<long long> slope_;
    std::optional<long long> intercept_;
    int threshold_ = kMinOmegaColumns;
    std::vector<OmegaException> exceptions_;
};

/// Full pipeline: word table (size-checked), digraph, A(D), powers A^1..A^max_explicit,
/// periodicity search and diagonal minima from n = 16 on.
inline OmegaTable build_omega_table(std::size_t max_explicit = kDefaultMaxExplicit,
                                    const SuitabilityRules& suitability = default_suitability_rules(),
                                    const FollowRules& follow = default_follow_rules()) {
    if (max_explicit < kMinOmegaColumns + 30)
        throw std::invalid_argument("omega2: max_explicit must be >= 46");
    const TransferDigraph D = build_transfer_digraph(generate_word_table(suitability), follow);
    const auto powers = tpowers(build_transfer_matrix(D), max_explicit);
    PeriodicityCertificate cert = find_shift_periodicity(powers);
    std::vector<long long> values;
    for (std::size_t k = kMinOmegaColumns; k <= max_explicit; ++k) {
        const TropicalValue v = min_diagonal(powers[k - 1]);
        if (v.is_infinite()) throw std::logic_error("omega2: no closed walk of length " + std::to_string(k));
        values.push_back(v.value());
    }
    return OmegaTable(std::move(values), std::move(cert));
}

/// Table for the default rules, built once.
inline const OmegaTable& default_omega_table() {
    static const OmegaTable table = build_omega_table();
    return table;
}

inline long long omega2(long long n) { return default_omega_table()(n); }

}  // namespace cyl2dom
