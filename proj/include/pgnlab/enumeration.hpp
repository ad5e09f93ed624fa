#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "pgnlab/gauge.hpp"
#include "pgnlab/rational.hpp"

namespace pgnlab {

// Thrown when enumeration work passes the configured ceiling.
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Symmetric quadratic form with exact rational entries. Positive
// definiteness is established during decomposition, not at construction.
struct QuadForm {
    std::vector<std::vector<Rational>> gram;

    explicit QuadForm(std::vector<std::vector<Rational>> gram_);

    int dimension() const { return static_cast<int>(gram.size()); }
    Rational operator()(const IntVector& x) const;
};

struct ReducedForm {
    QuadForm form;  // U * G * U^T
    // Rows are the new basis vectors in the original coordinates.
    std::vector<IntVector> transform;
};

// Exact Lovasz reduction of the Gram matrix (no floating point). Throws
// std::invalid_argument when the form is not positive definite or delta is
// outside (1/4, 1).
ReducedForm lll_reduce(const QuadForm& form,
                       const Rational& delta = make_rational(3, 4));

inline constexpr long default_candidate_ceiling = 10'000'000;

// Complete list of nonzero integer vectors with form(x) <= radius_sq, one
// representative per +-x pair, found by reduction followed by exact
// branch-and-bound with integer interval bounds. Throws ResourceLimitError
// past node_ceiling visited search nodes.
std::vector<IntVector> enumerate_candidates(
    const QuadForm& form, const Rational& radius_sq,
    long node_ceiling = default_candidate_ceiling);

}  // namespace pgnlab
