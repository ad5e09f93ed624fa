#pragma once

#include <cstddef>
#include <vector>

#include "pgnlab/rational.hpp"

namespace pgnlab {

enum class Side { left, right };

// Continuous piecewise-linear function with exact rational knots and
// ordinates, defined on [knots.front(), knots.back()]. Ordinates are the
// stored data; slopes are always derived from them. Collinear interior
// knots are allowed (see normalized()).
class PiecewiseLinear {
  public:
    // knots must be strictly increasing and match values in length (>= 2).
    PiecewiseLinear(std::vector<Rational> knots, std::vector<Rational> values);

    const std::vector<Rational>& knots() const { return knots_; }
    const std::vector<Rational>& values() const { return values_; }
    const Rational& domain_min() const { return knots_.front(); }
    const Rational& domain_max() const { return knots_.back(); }
    std::size_t segment_count() const { return knots_.size() - 1; }

    bool contains(const Rational& q) const;

    // Exact value at q; throws std::domain_error outside the domain.
    Rational eval(const Rational& q) const;

    // Exact one-sided slope at q. side=left requires q > domain_min,
    // side=right requires q < domain_max.
    Rational slope(const Rational& q, Side side) const;

    // Slope on [knots[i], knots[i+1]].
    Rational segment_slope(std::size_t i) const;

    // Index i with knots[i] <= q <= knots[i+1] (the left such segment).
    std::size_t segment_index(const Rational& q) const;

    // Restriction to [lo, hi] (must intersect the domain in an interval
    // with interior); endpoints become knots.
    PiecewiseLinear restricted(const Rational& lo, const Rational& hi) const;

    // Copy with collinear interior knots merged.
    PiecewiseLinear normalized() const;

    // Pointwise equality: same domain and equal values on the union of
    // both knot sets.
    bool same_function(const PiecewiseLinear& other) const;

    static PiecewiseLinear constant(Rational lo, Rational hi, Rational value);

  private:
    std::vector<Rational> knots_;
    std::vector<Rational> values_;
};

// Exact linear combination sum_i coeffs[i]*fs[i] on the intersection of
// the domains; knot set is the union of knot sets restricted to it.
// Throws std::domain_error when the intersection has empty interior and
// std::invalid_argument on length mismatch.
PiecewiseLinear linear_combination(const std::vector<Rational>& coeffs,
                                   const std::vector<PiecewiseLinear>& fs);

}  // namespace pgnlab
