#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pgnlab/rational.hpp"

namespace pgnlab {

// A window m0..m1 of a positive sequence (a_m), either given explicitly or
// generated as a_m = theta * 2^(m^3).
class GrowthSequence {
public:
    static GrowthSequence theta_form(const Rational& theta, long m0, long m1);
    static GrowthSequence explicit_window(long m0, std::vector<Rational> values);

    bool is_theta_form() const { return theta_.has_value(); }
    // Throws std::logic_error for explicit windows.
    const Rational& theta() const;

    long window_min() const { return m0_; }
    long window_max() const { return m1_; }

    // Throws std::domain_error outside [window_min, window_max].
    Rational value(long m) const;

private:
    GrowthSequence() = default;

    std::optional<Rational> theta_;
    std::vector<Rational> values_;  // empty for theta form
    long m0_ = 0;
    long m1_ = 0;
};

// Exact values a_{lo..hi}; throws std::domain_error when [lo, hi] leaves the
// sequence window.
std::vector<Rational> sequence_values(const GrowthSequence& seq, long lo,
                                      long hi);

struct DeltaReport {
    // The chain 1 < a_{m+1}/a_m < a_{m+2}/a_{m+1} holds strictly across the
    // whole window.
    bool pass = false;
    // Index m of the first failing comparison, when pass is false.
    std::optional<long> first_violation;
    // Theta form only: the tail conditions hold in closed form (ratios
    // 2^(3m^2+3m+1) exceed 1 everywhere, increase strictly and without bound
    // for m >= 0, and a_m -> 0 as m -> -infinity). Always false for explicit
    // windows, which are certified on the window alone.
    bool limits_certified = false;
    std::string detail;
};

// Requires a window of at least 3 terms (throws std::invalid_argument
// otherwise); failures inside the window are reported, not thrown.
DeltaReport check_delta_window(const GrowthSequence& seq);

}  // namespace pgnlab
