#pragma once

#include <optional>
#include <vector>

#include "pgnlab/block.hpp"
#include "pgnlab/growth_sequence.hpp"
#include "pgnlab/piecewise_linear.hpp"
#include "pgnlab/rational.hpp"

namespace pgnlab {

// Parameters of an (n+1)-component system. Slopes default to 1/(k-1), 1,
// 1/(n+1-k) and may be overridden; overrides that differ from those defaults
// still produce a glued triple but no component expansion.
struct SystemParams {
    int n;
    int k;
    GrowthSequence sequence;
    std::optional<Rational> alpha_override;
    std::optional<Rational> beta_override;
    std::optional<Rational> gamma_override;

    SystemParams(int n_, int k_, GrowthSequence sequence_)
        : n(n_), k(k_), sequence(std::move(sequence_)) {}

    Rational alpha() const;
    Rational beta() const;
    Rational gamma() const;

    // Throws std::invalid_argument on bad n/k or nonpositive overrides.
    void validate() const;

    // Blocks are built for m in [block_min, block_max]; block m consumes
    // sequence values a_m, a_{m+1}, a_{m+2}.
    long block_min() const { return sequence.window_min(); }
    long block_max() const { return sequence.window_max() - 2; }
};

struct RegistryEntry {
    long m;
    Rational r, s, t;
};

// Blockwise-glued (A, B, C) on [r_{m0}, r_{m1+1}].
struct GluedTriple {
    Rational alpha, beta, gamma;
    PiecewiseLinear A, B, C;
    std::vector<RegistryEntry> registry;
};

struct GeneralizedSystem {
    int n;
    int k;
    // components[j-1] is P_j; P_1..P_{k-1} = A, P_k = B, P_{k+1}..P_{n+1} = C.
    std::vector<PiecewiseLinear> components;
    std::vector<RegistryEntry> registry;

    int n_plus_1() const { return n + 1; }
    // 1-based accessor; throws std::out_of_range.
    const PiecewiseLinear& component(int j) const;
    Rational domain_min() const { return components.front().domain_min(); }
    Rational domain_max() const { return components.front().domain_max(); }
};

struct BuildResult {
    GluedTriple triple;
    // Present exactly when the slopes are the defaults for (n, k).
    std::optional<GeneralizedSystem> system;
};

// Builds blocks over the window implied by the sequence (at least one block,
// i.e. a window of >= 3 terms, else std::domain_error), verifies the shared
// endpoints, glues, and expands when the slopes allow it. A seam mismatch
// raises std::logic_error; it cannot happen if the breakpoint equations hold.
BuildResult build_system(const SystemParams& params);

}  // namespace pgnlab
