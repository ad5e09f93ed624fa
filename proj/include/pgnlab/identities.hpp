#pragma once

#include <utility>
#include <vector>

#include "pgnlab/gauge.hpp"
#include "pgnlab/minima.hpp"
#include "pgnlab/rational.hpp"

namespace pgnlab {

struct MuEquivalenceReport {
    std::vector<GaugeValue> mu;      // hypercube against the lattice of xi, N
    std::vector<GaugeValue> lambda;  // K body against the integer lattice
    bool pass = false;               // exact equality for every j
};

// Computes both sides of mu_j(xi, N) = lambda_j(K_xi(N); Z^(n+1)).
// Requires xi_0 = 1 and root^n = N.
MuEquivalenceReport mu_equivalence_check(const TargetPoint& xi,
                                         const Rational& N,
                                         const Rational& root,
                                         const MinimaOptions& options = {});

// Default duality constants [1/((n+1)!(n+1)), (n+1)!(n+1)]; they absorb the
// distortion between the star body and the true polar.
std::pair<Rational, Rational> mahler_bounds(int n);

struct DualityReport {
    std::vector<GaugeValue> lambda_k;
    std::vector<GaugeValue> lambda_kstar;
    // products_squared[j-1] is (lambda_j(K) * lambda_{n+2-j}(K*))^2, exact.
    std::vector<Rational> products_squared;
    Rational lower_bound;
    Rational upper_bound;
    bool pass = false;  // every product inside [lower_bound, upper_bound]
};

DualityReport duality_defect(const TargetPoint& xi, const Rational& N,
                             const Rational& root,
                             const MinimaOptions& options = {});

struct ScalingReport {
    Rational M;
    Rational Q;  // M^(n+1)
    Rational N;  // M^n
    std::vector<GaugeValue> lambda_c;           // lambda_j(C(xi, Q))
    std::vector<GaugeValue> lambda_kstar_back;  // M * lambda_j(Kstar(xi, N))
    bool pass = false;                          // exact equality per j
};

// Checks lambda_j(C_xi(M^(n+1))) = M * lambda_j(Kstar_xi(M^n)) exactly, the
// minima form of C_xi(e^q) = e^(-q/(n+1)) Kstar_xi(e^(nq/(n+1))). Requires
// xi_0 = 1 and M >= 1.
ScalingReport scaling_identity_check(const TargetPoint& xi, const Rational& M,
                                     const MinimaOptions& options = {});

}  // namespace pgnlab
