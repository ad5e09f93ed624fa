#pragma once

#include "pgnlab/piecewise_linear.hpp"
#include "pgnlab/rational.hpp"

namespace pgnlab {

// Inputs of one block: levels 0 < a < b < c and positive slopes.
struct BlockSpec {
    Rational a, b, c;
    Rational alpha, beta, gamma;

    // Throws std::invalid_argument when 0 < a < b < c or slope positivity
    // fails.
    void validate() const;
};

struct Breakpoints {
    Rational r, s, t, u;
};

// r = a/alpha + a/beta + b/gamma, s = a/alpha + b/beta + b/gamma,
// t = a/alpha + b/beta + c/gamma, u = b/alpha + b/beta + c/gamma.
Breakpoints block_breakpoints(const BlockSpec& spec);

// The unique triple (A, B, C) on [r, u]:
//   A constant a on [r, t], slope alpha on [t, u], A(u) = b;
//   B slope beta on [r, s], constant b on [s, u], B(r) = a;
//   C constant b on [r, s], slope gamma on [s, t], constant c on [t, u].
struct Block {
    BlockSpec spec;
    Breakpoints bp;
    PiecewiseLinear A, B, C;
};

Block build_block(const BlockSpec& spec);

}  // namespace pgnlab
