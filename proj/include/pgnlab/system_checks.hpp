#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pgnlab/block.hpp"
#include "pgnlab/rational.hpp"
#include "pgnlab/system.hpp"

namespace pgnlab {

struct AxiomWitness {
    std::string axiom;  // "G1", "G2" or "G3"
    Rational q;
    std::string description;
};

// One maximal group of coinciding sloped components on an open interval,
// indices 1-based.
struct IntervalGroup {
    Rational lo, hi;
    int first;
    int last;
};

struct AxiomReport {
    bool g1_ok = true;
    bool g2_ok = true;
    bool g3_ok = true;
    std::vector<AxiomWitness> witnesses;
    // Recorded for every interval where the slope-group axiom holds.
    std::vector<IntervalGroup> groups;

    bool all_ok() const { return g1_ok && g2_ok && g3_ok; }
};

// Checks, all by exact rational arithmetic:
//   G1 at every merged knot and interval midpoint: 0 <= P_1 <= ... <= P_{n+1}
//      and sum P_j(q) = q;
//   G2 on every open interval: the components with nonzero slope form one
//      contiguous coinciding group with slope 1/(group size), the rest are
//      constant;
//   G3 at every interior merged knot: with the left group [r_lo, r_hi] and
//      the right group [s_lo, s_hi], if r_lo <= s_hi then components
//      r_lo..s_hi all take the same value there.
AxiomReport validate_gsystem(const GeneralizedSystem& system);

struct BlockExtrema {
    Rational max_a_ratio;  // max A(q)/q = a/r
    Rational argmax_q;     // = r
    Rational min_c_ratio;  // min C(q)/q = b/s
    Rational argmin_q;     // = s
};

// Closed-form extremal ratios of A/q and C/q over [r, u]. Requires the
// strict ratio hypothesis b/a < c/b (throws std::invalid_argument).
BlockExtrema block_extrema(const Block& block);

struct AsymptoticRow {
    long m;
    Rational max_a_ratio;  // a_m / r_m, block maximum of A(q)/q
    Rational min_c_ratio;  // a_{m+1} / s_m, block minimum of C(q)/q
};

struct AsymptoticReport {
    std::vector<AsymptoticRow> rows;
    Rational limsup_a_target;  // 0
    Rational liminf_c_target;  // beta*gamma/(beta+gamma)
    // Set when n and k are known: 1/(n-k+2), and whether the liminf target
    // equals it as an exact rational identity.
    std::optional<Rational> limit_target;
    bool matches_limit_target = false;
    // Gaps of the last row to the two targets.
    Rational tail_gap_a;
    Rational tail_gap_c;
};

// Per-block exact extremal ratios from the registry. Empty registry raises
// std::domain_error.
AsymptoticReport asymptotic_report(const GluedTriple& triple);
AsymptoticReport asymptotic_report(const GeneralizedSystem& system);

struct SeparationRow {
    long m;
    Rational r_theta;        // r_m of the theta sequence
    Rational t_theta;        // t_m of the theta sequence
    Rational r_theta_prime;  // r_m of the theta' sequence
    bool scaling_ok;         // r_theta_prime = (theta'/theta) * r_theta
    bool lower_ok;           // r_theta < r_theta_prime
    bool upper_ok;           // r_theta_prime < t_theta
    Rational amplitude;      // a'_m - a_m
    bool amplitude_ok;       // amplitude = (theta' - theta) * 2^(m^3)
};

struct SeparationReport {
    std::vector<SeparationRow> rows;
    // Smallest m in the range from which the full sandwich holds onward.
    std::optional<long> sandwich_from;
    bool all_amplitudes_ok = true;
};

// Compares the block breakpoints of the theta and theta' sequences under the
// default slopes for (n, k). Requires 0 < theta < theta' (throws
// std::invalid_argument).
SeparationReport separation_check(const Rational& theta,
                                  const Rational& theta_prime, int n, int k,
                                  long m_lo, long m_hi);

struct PhiEstimates {
    // Index j-1 holds the estimate for component j; sizes are n+1.
    std::vector<Rational> under;  // min of L_j(q)/q over the window
    std::vector<Rational> over;   // max of L_j(q)/q over the window
    Rational window_lo;           // q-range covered by the window
    Rational window_hi;
};

// Exact per-component min/max of P_j(q)/q over all merged knots q of the
// system with q >= the block-tail start r_{tail_from}. Throws
// std::domain_error when the tail is empty or leaves the registry.
PhiEstimates system_phi_estimates(const GeneralizedSystem& system,
                                  long tail_from);

struct PhiComparison {
    std::string name;
    Rational lhs;  // the check is lhs <= rhs
    Rational rhs;
    bool pass;
};

struct PhiReport {
    std::vector<PhiComparison> comparisons;
    // True when over_{k-1} <= eps0 enabled the exponent-chain checks.
    bool chain_checked = false;
    bool pass = true;
};

// Checks under_{j+1} <= over_j + slack for every j, and, when
// over_{k-1} <= eps0, additionally (n-k+2)*over_k <= 1 + slack and
// under_{k+1} <= 1/(n-k+2) + slack.
PhiReport phi_inequality_check(const PhiEstimates& estimates, int n, int k,
                               const Rational& slack, const Rational& eps0);

}  // namespace pgnlab
