#include "pgnlab/system.hpp"

#include <sstream>
#include <stdexcept>

namespace pgnlab {

Rational SystemParams::alpha() const {
    if (alpha_override) return *alpha_override;
    return make_rational(1, k - 1);
}

Rational SystemParams::beta() const {
    if (beta_override) return *beta_override;
    return 1;
}

Rational SystemParams::gamma() const {
    if (gamma_override) return *gamma_override;
    return make_rational(1, n + 1 - k);
}

void SystemParams::validate() const {
    if (n < 2) {
        throw std::invalid_argument("system dimension n must be at least 2");
    }
    if (k < 2 || k > n) {
        throw std::invalid_argument("system index k must satisfy 2 <= k <= n");
    }
    if ((alpha_override && *alpha_override <= 0) ||
        (beta_override && *beta_override <= 0) ||
        (gamma_override && *gamma_override <= 0)) {
        throw std::invalid_argument("slope overrides must be positive");
    }
}

const PiecewiseLinear& GeneralizedSystem::component(int j) const {
    if (j < 1 || j > n + 1) {
        throw std::out_of_range("component index outside 1..n+1");
    }
    return components[static_cast<std::size_t>(j - 1)];
}

namespace {

// Appends a piece whose domain starts where the accumulated function ends.
// The seam knot is kept once; values there must agree exactly.
void append_piece(std::vector<Rational>& knots, std::vector<Rational>& values,
                  const PiecewiseLinear& piece) {
    const std::vector<Rational>& pk = piece.knots();
    const std::vector<Rational>& pv = piece.values();
    if (knots.empty()) {
        knots = pk;
        values = pv;
        return;
    }
    if (knots.back() != pk.front() || values.back() != pv.front()) {
        throw std::logic_error("blocks do not meet at the shared endpoint");
    }
    knots.insert(knots.end(), pk.begin() + 1, pk.end());
    values.insert(values.end(), pv.begin() + 1, pv.end());
}

}  // namespace

BuildResult build_system(const SystemParams& params) {
    params.validate();

    const long m0 = params.block_min();
    const long m1 = params.block_max();
    if (m0 > m1) {
        throw std::domain_error(
            "sequence window too small: need at least 3 terms for one block");
    }

    const Rational alpha = params.alpha();
    const Rational beta = params.beta();
    const Rational gamma = params.gamma();

    std::vector<RegistryEntry> registry;
    std::vector<Rational> knots_a, values_a;
    std::vector<Rational> knots_b, values_b;
    std::vector<Rational> knots_c, values_c;

    std::optional<Breakpoints> previous;
    for (long m = m0; m <= m1; ++m) {
        BlockSpec spec;
        spec.a = params.sequence.value(m);
        spec.b = params.sequence.value(m + 1);
        spec.c = params.sequence.value(m + 2);
        spec.alpha = alpha;
        spec.beta = beta;
        spec.gamma = gamma;
        Block block = build_block(spec);

        // The shared endpoint: u_m and r_{m+1} are the same expression in
        // a_{m+1}, a_{m+2}, so consecutive blocks abut exactly, and the
        // triple values there are (a_{m+1}, a_{m+1}, a_{m+2}) on both sides.
        if (previous && previous->u != block.bp.r) {
            throw std::logic_error("block breakpoints do not chain");
        }
        previous = block.bp;

        append_piece(knots_a, values_a, block.A);
        append_piece(knots_b, values_b, block.B);
        append_piece(knots_c, values_c, block.C);

        registry.push_back({m, block.bp.r, block.bp.s, block.bp.t});
    }

    GluedTriple triple{alpha,
                       beta,
                       gamma,
                       PiecewiseLinear(knots_a, values_a),
                       PiecewiseLinear(knots_b, values_b),
                       PiecewiseLinear(knots_c, values_c),
                       std::move(registry)};

    BuildResult result{std::move(triple), std::nullopt};

    const bool default_slopes = alpha == make_rational(1, params.k - 1) &&
                                beta == 1 &&
                                gamma == make_rational(1, params.n + 1 - params.k);
    if (default_slopes) {
        GeneralizedSystem system;
        system.n = params.n;
        system.k = params.k;
        system.registry = result.triple.registry;
        system.components.reserve(static_cast<std::size_t>(params.n + 1));
        for (int j = 1; j <= params.k - 1; ++j) {
            system.components.push_back(result.triple.A);
        }
        system.components.push_back(result.triple.B);
        for (int j = params.k + 1; j <= params.n + 1; ++j) {
            system.components.push_back(result.triple.C);
        }
        result.system = std::move(system);
    }

    return result;
}

}  // namespace pgnlab
