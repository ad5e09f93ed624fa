#include "pgnlab/block.hpp"

#include <stdexcept>

namespace pgnlab {

void BlockSpec::validate() const {
    if (!(a > 0 && a < b && b < c)) {
        throw std::invalid_argument("block levels must satisfy 0 < a < b < c");
    }
    if (!(alpha > 0 && beta > 0 && gamma > 0)) {
        throw std::invalid_argument("block slopes must be positive");
    }
}

Breakpoints block_breakpoints(const BlockSpec& spec) {
    spec.validate();
    Breakpoints bp;
    bp.r = spec.a / spec.alpha + spec.a / spec.beta + spec.b / spec.gamma;
    bp.s = spec.a / spec.alpha + spec.b / spec.beta + spec.b / spec.gamma;
    bp.t = spec.a / spec.alpha + spec.b / spec.beta + spec.c / spec.gamma;
    bp.u = spec.b / spec.alpha + spec.b / spec.beta + spec.c / spec.gamma;
    return bp;
}

Block build_block(const BlockSpec& spec) {
    const Breakpoints bp = block_breakpoints(spec);

    // A rises from a to b on [t, u]; the slope there is alpha because
    // u - t = (b - a)/alpha. Likewise B carries slope beta on [r, s] and C
    // slope gamma on [s, t].
    PiecewiseLinear A({bp.r, bp.t, bp.u}, {spec.a, spec.a, spec.b});
    PiecewiseLinear B({bp.r, bp.s, bp.u}, {spec.a, spec.b, spec.b});
    PiecewiseLinear C({bp.r, bp.s, bp.t, bp.u},
                      {spec.b, spec.b, spec.c, spec.c});
    return Block{spec, bp, std::move(A), std::move(B), std::move(C)};
}

}  // namespace pgnlab
