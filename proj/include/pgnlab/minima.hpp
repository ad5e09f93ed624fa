#pragma once

#include <vector>

#include "pgnlab/enumeration.hpp"
#include "pgnlab/gauge.hpp"

namespace pgnlab {

struct MinimaOptions {
    long candidate_ceiling = default_candidate_ceiling;

    // Applies the PGNLAB_CANDIDATE_CEILING environment variable when set;
    // throws std::invalid_argument on a malformed or nonpositive value.
    static MinimaOptions from_environment();
};

struct MinimaResult {
    // Exact nondecreasing minima; witnesses[j] attains lambdas[j], and every
    // witness prefix is linearly independent.
    std::vector<GaugeValue> lambdas;
    std::vector<IntVector> witnesses;
    // Diagnostics: candidates examined in the final enumeration pass.
    std::size_t candidates_seen = 0;
};

// Exact successive minima of the body with respect to its integer
// (coefficient) lattice: seeds an upper bound from a reduced basis plus the
// standard basis, enumerates the quadratic sandwich form out to
// sandwich_factor * bound^2, and greedily selects independent witnesses in
// exact gauge order (ties broken by lexicographic order of the sign-canonical
// vectors). Throws ResourceLimitError when enumeration exceeds the ceiling.
MinimaResult successive_minima(const GaugeBody& body,
                               const MinimaOptions& options = {});

}  // namespace pgnlab
