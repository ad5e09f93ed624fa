#pragma once

#include <string>
#include <vector>

#include "pgnlab/rational.hpp"

namespace pgnlab {

using IntVector = std::vector<Integer>;

// The point xi = (xi_0, ..., xi_n) defining a body family; n is implied by
// the coordinate count.
struct TargetPoint {
    std::vector<Rational> coords;

    // Requires n >= 2 (so at least 3 coordinates) and a nonzero coordinate.
    explicit TargetPoint(std::vector<Rational> coords_);

    int n() const { return static_cast<int>(coords.size()) - 1; }
    int dimension() const { return static_cast<int>(coords.size()); }
    bool normalized() const { return coords.front() == 1; }
};

// Exact nonnegative value of a gauge: either a rational (a linear branch
// attains the max) or the square root of a rational (the Euclidean branch
// attains it). Square roots that are exact rationals collapse to the linear
// representation, so equal values always have equal representations, and the
// total order just compares squares.
class GaugeValue {
public:
    static GaugeValue zero() { return linear(0); }
    static GaugeValue linear(const Rational& value);
    static GaugeValue sqrt_of(const Rational& radicand);

    bool is_linear() const { return linear_; }
    bool is_zero() const { return squared_ == 0; }
    // Exact rational value; throws std::logic_error on a square-root value.
    const Rational& value() const;
    const Rational& squared() const { return squared_; }

    // The value multiplied by a positive rational factor.
    GaugeValue scaled(const Rational& factor) const;

    double to_double() const;
    std::string to_string() const;

    friend bool operator==(const GaugeValue& a, const GaugeValue& b) {
        return a.squared_ == b.squared_;
    }
    friend bool operator!=(const GaugeValue& a, const GaugeValue& b) {
        return !(a == b);
    }
    friend bool operator<(const GaugeValue& a, const GaugeValue& b) {
        return a.squared_ < b.squared_;
    }
    friend bool operator<=(const GaugeValue& a, const GaugeValue& b) {
        return a.squared_ <= b.squared_;
    }
    friend bool operator>(const GaugeValue& a, const GaugeValue& b) {
        return b < a;
    }
    friend bool operator>=(const GaugeValue& a, const GaugeValue& b) {
        return b <= a;
    }

private:
    GaugeValue() = default;

    bool linear_ = true;
    Rational value_;    // meaningful for the linear representation only
    Rational squared_;  // always the exact square
};

enum class BodyKind { C, K, Kstar, CubeLattice };

std::string body_kind_name(BodyKind kind);

// A parametric convex body (with its lattice convention):
//   C:           { ||x|| <= 1, |x.xi| <= 1/Q },   lattice Z^{n+1};
//   K:           { |x_0| <= N, |x_0 xi_j - x_j| <= 1/root },  root = N^{1/n};
//   Kstar:       { |x.xi| <= 1/N, ||x|| <= root };
//   CubeLattice: unit hypercube, lattice generated by
//                v_0 = (1/N, root xi_1, ..., root xi_n), v_j = -root e_j;
//                vectors are coefficient tuples in that basis.
// An extra dilation factor scales the whole body.
class GaugeBody {
public:
    static GaugeBody make_c(TargetPoint point, const Rational& Q);
    static GaugeBody make_k(TargetPoint point, const Rational& N,
                            const Rational& root);
    static GaugeBody make_kstar(TargetPoint point, const Rational& N,
                                const Rational& root);
    static GaugeBody make_cube_lattice(TargetPoint point, const Rational& N,
                                       const Rational& root);

    BodyKind kind() const { return kind_; }
    const TargetPoint& point() const { return point_; }
    const Rational& parameter() const { return parameter_; }
    const Rational& root() const { return root_; }
    const Rational& dilation() const { return dilation_; }
    int dimension() const { return point_.dimension(); }

    // The body scaled by a positive factor; minima scale by its inverse.
    GaugeBody dilated(const Rational& factor) const;

    // Exact gauge of an integer vector (the smallest t >= 0 with x in t*body).
    GaugeValue gauge(const IntVector& x) const;

    // Positive-definite quadratic form h with
    //   gauge(x)^2 <= h(x) <= sandwich_factor() * gauge(x)^2,
    // as a symmetric Gram matrix: the sum of squares of the branch forms.
    std::vector<std::vector<Rational>> sandwich_gram() const;
    int sandwich_factor() const;

    // Columns are the lattice generators v_0..v_n (CubeLattice only; throws
    // std::logic_error for other kinds).
    std::vector<std::vector<Rational>> generator_matrix() const;

private:
    GaugeBody(BodyKind kind, TargetPoint point, Rational parameter,
              Rational root)
        : kind_(kind),
          point_(std::move(point)),
          parameter_(std::move(parameter)),
          root_(std::move(root)) {}

    // The linear forms whose squares sum to the sandwich form.
    std::vector<std::vector<Rational>> branch_forms() const;

    BodyKind kind_;
    TargetPoint point_;
    Rational parameter_;  // Q for C, N otherwise
    Rational root_;       // N^(1/n); fixed to 1 for C
    Rational dilation_ = 1;
};

}  // namespace pgnlab
