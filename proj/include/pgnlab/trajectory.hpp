#pragma once

#include <string>
#include <vector>

#include "pgnlab/gauge.hpp"
#include "pgnlab/minima.hpp"
#include "pgnlab/system_checks.hpp"

namespace pgnlab {

struct TrajectoryRow {
    Rational Q;
    double q;               // ln Q
    std::vector<double> L;  // L_j = ln lambda_j, nondecreasing in j
    double defect;          // q - sum_j L_j
};

struct Trajectory {
    TargetPoint point;
    BodyKind kind = BodyKind::C;
    std::vector<TrajectoryRow> rows;
    // Set when a resource abort stopped the grid early; the rows computed so
    // far are kept.
    bool partial = false;
    std::string abort_reason;
};

// Exact minima of C_xi(Q) for each grid value (strictly increasing, all
// >= 1), logged for reporting. Ordering of each row's minima is decided
// exactly before conversion.
Trajectory trace_trajectory(const TargetPoint& xi,
                            const std::vector<Rational>& q_grid,
                            const MinimaOptions& options = {});

// min/max of L_j(q)/q over the last tail_fraction of rows, ignoring rows
// with q = 0; needs at least 2 usable rows (std::domain_error otherwise).
// The float ratios are converted to rationals exactly.
PhiEstimates phi_window_estimates(const Trajectory& trajectory,
                                  const Rational& tail_fraction);

struct DefectReport {
    double min_defect;
    double max_defect;
    double range;
    double slope;  // least-squares slope of defect against q
};

// Range and trend of the defect q - sum_j L_j; needs >= 3 rows.
DefectReport minkowski_defect_report(const Trajectory& trajectory);

}  // namespace pgnlab
