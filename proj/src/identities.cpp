#include "pgnlab/identities.hpp"

namespace pgnlab {

MuEquivalenceReport mu_equivalence_check(const TargetPoint& xi,
                                         const Rational& N,
                                         const Rational& root,
                                         const MinimaOptions& options) {
    const GaugeBody cube = GaugeBody::make_cube_lattice(xi, N, root);
    const GaugeBody k_body = GaugeBody::make_k(xi, N, root);

    MuEquivalenceReport report;
    report.mu = successive_minima(cube, options).lambdas;
    report.lambda = successive_minima(k_body, options).lambdas;
    report.pass = report.mu == report.lambda;
    return report;
}

std::pair<Rational, Rational> mahler_bounds(int n) {
    if (n < 1) {
        throw std::invalid_argument("duality bounds need n >= 1");
    }
    Integer factorial = 1;
    for (int i = 2; i <= n + 1; ++i) {
        factorial *= i;
    }
    const Rational big = Rational(factorial) * (n + 1);
    return {1 / big, big};
}

DualityReport duality_defect(const TargetPoint& xi, const Rational& N,
                             const Rational& root,
                             const MinimaOptions& options) {
    const int n = xi.n();
    const GaugeBody k_body = GaugeBody::make_k(xi, N, root);
    const GaugeBody kstar_body = GaugeBody::make_kstar(xi, N, root);

    DualityReport report;
    report.lambda_k = successive_minima(k_body, options).lambdas;
    report.lambda_kstar = successive_minima(kstar_body, options).lambdas;
    const std::pair<Rational, Rational> bounds = mahler_bounds(n);
    report.lower_bound = bounds.first;
    report.upper_bound = bounds.second;

    const Rational lo_sq = report.lower_bound * report.lower_bound;
    const Rational hi_sq = report.upper_bound * report.upper_bound;
    report.pass = true;
    for (int j = 1; j <= n + 1; ++j) {
        // p_j = lambda_j(K) * lambda_{n+2-j}(K*); compare through squares.
        const Rational p_sq =
            report.lambda_k[static_cast<std::size_t>(j - 1)].squared() *
            report.lambda_kstar[static_cast<std::size_t>(n + 1 - j)].squared();
        report.products_squared.push_back(p_sq);
        if (p_sq < lo_sq || p_sq > hi_sq) {
            report.pass = false;
        }
    }
    return report;
}

ScalingReport scaling_identity_check(const TargetPoint& xi, const Rational& M,
                                     const MinimaOptions& options) {
    if (M < 1) {
        throw std::invalid_argument("scaling factor M must be at least 1");
    }
    const int n = xi.n();
    Rational N = 1;
    for (int i = 0; i < n; ++i) {
        N *= M;
    }
    const Rational Q = N * M;

    ScalingReport report;
    report.M = M;
    report.Q = Q;
    report.N = N;
    report.lambda_c =
        successive_minima(GaugeBody::make_c(xi, Q), options).lambdas;
    // Kstar at N = M^n has root exactly M.
    const std::vector<GaugeValue> kstar =
        successive_minima(GaugeBody::make_kstar(xi, N, M), options).lambdas;
    for (const GaugeValue& value : kstar) {
        report.lambda_kstar_back.push_back(value.scaled(M));
    }
    report.pass = report.lambda_c == report.lambda_kstar_back;
    return report;
}

}  // namespace pgnlab
