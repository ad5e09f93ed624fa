#include "pgnlab/growth_sequence.hpp"

#include <sstream>
#include <stdexcept>

namespace pgnlab {

GrowthSequence GrowthSequence::theta_form(const Rational& theta, long m0,
                                          long m1) {
    if (theta <= 0) {
        throw std::invalid_argument("theta must be positive");
    }
    if (m0 > m1) {
        throw std::invalid_argument("empty sequence window");
    }
    GrowthSequence seq;
    seq.theta_ = theta;
    seq.m0_ = m0;
    seq.m1_ = m1;
    return seq;
}

GrowthSequence GrowthSequence::explicit_window(long m0,
                                               std::vector<Rational> values) {
    if (values.empty()) {
        throw std::invalid_argument("empty sequence window");
    }
    for (const Rational& v : values) {
        if (v <= 0) {
            throw std::invalid_argument("sequence values must be positive");
        }
    }
    GrowthSequence seq;
    seq.values_ = std::move(values);
    seq.m0_ = m0;
    seq.m1_ = m0 + static_cast<long>(seq.values_.size()) - 1;
    return seq;
}

const Rational& GrowthSequence::theta() const {
    if (!theta_) {
        throw std::logic_error("explicit sequence window has no theta");
    }
    return *theta_;
}

Rational GrowthSequence::value(long m) const {
    if (m < m0_ || m > m1_) {
        std::ostringstream msg;
        msg << "sequence index " << m << " outside window [" << m0_ << ", "
            << m1_ << "]";
        throw std::domain_error(msg.str());
    }
    if (theta_) {
        return *theta_ * pow2(m * m * m);
    }
    return values_[static_cast<std::size_t>(m - m0_)];
}

std::vector<Rational> sequence_values(const GrowthSequence& seq, long lo,
                                      long hi) {
    if (lo > hi) {
        throw std::domain_error("empty sequence value range");
    }
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (long m = lo; m <= hi; ++m) {
        out.push_back(seq.value(m));
    }
    return out;
}

DeltaReport check_delta_window(const GrowthSequence& seq) {
    const long m0 = seq.window_min();
    const long m1 = seq.window_max();
    if (m1 - m0 + 1 < 3) {
        throw std::invalid_argument("delta check needs at least 3 terms");
    }

    DeltaReport report;
    report.pass = true;
    std::ostringstream detail;

    for (long m = m0; m + 1 <= m1; ++m) {
        const Rational ratio = seq.value(m + 1) / seq.value(m);
        if (ratio <= 1) {
            report.pass = false;
            report.first_violation = m;
            detail << "ratio a_" << (m + 1) << "/a_" << m << " = "
                   << rational_to_string(ratio) << " is not greater than 1";
            break;
        }
        if (m + 2 <= m1) {
            const Rational next = seq.value(m + 2) / seq.value(m + 1);
            if (ratio >= next) {
                report.pass = false;
                report.first_violation = m;
                detail << "ratios at m = " << m << " fail strict increase: "
                       << rational_to_string(ratio) << " >= "
                       << rational_to_string(next);
                break;
            }
        }
    }
    if (report.pass) {
        detail << "strict ratio chain holds on window [" << m0 << ", " << m1
               << "]";
    }

    if (seq.is_theta_form()) {
        // Closed form: a_{m+1}/a_m = 2^(3m^2+3m+1). Cross-check the identity
        // on the window, then the tail facts are immediate: the exponent is
        // at least 1 for every integer m (so ratios exceed 1 everywhere), its
        // increment 6m+6 is positive for m >= 0 (strict, unbounded growth
        // forward), and m^3 -> -infinity gives a_m -> 0 backward.
        bool identity_ok = true;
        for (long m = m0; m + 1 <= m1; ++m) {
            const Rational expected = pow2(3 * m * m + 3 * m + 1);
            if (seq.value(m + 1) / seq.value(m) != expected) {
                identity_ok = false;
                break;
            }
        }
        report.limits_certified = identity_ok;
        if (identity_ok) {
            detail << "; theta-form tails certified (ratio 2^(3m^2+3m+1), "
                      "increasing without bound for m >= 0, a_m -> 0 "
                      "backward)";
        }
    }

    report.detail = detail.str();
    return report;
}

}  // namespace pgnlab
