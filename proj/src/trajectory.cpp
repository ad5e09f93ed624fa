#include "pgnlab/trajectory.hpp"

#include <cmath>
#include <stdexcept>

namespace pgnlab {

Trajectory trace_trajectory(const TargetPoint& xi,
                            const std::vector<Rational>& q_grid,
                            const MinimaOptions& options) {
    if (q_grid.empty()) {
        throw std::invalid_argument("empty trajectory grid");
    }
    for (std::size_t i = 0; i < q_grid.size(); ++i) {
        if (q_grid[i] < 1) {
            throw std::invalid_argument("grid values must be at least 1");
        }
        if (i > 0 && q_grid[i] <= q_grid[i - 1]) {
            throw std::invalid_argument("grid must be strictly increasing");
        }
    }

    Trajectory trajectory{xi, BodyKind::C, {}, false, ""};
    for (const Rational& Q : q_grid) {
        const GaugeBody body = GaugeBody::make_c(xi, Q);
        MinimaResult minima;
        try {
            minima = successive_minima(body, options);
        } catch (const ResourceLimitError& error) {
            trajectory.partial = true;
            trajectory.abort_reason = error.what();
            break;
        }

        TrajectoryRow row;
        row.Q = Q;
        row.q = std::log(rational_to_double(Q));
        double sum = 0.0;
        for (const GaugeValue& lambda : minima.lambdas) {
            // log lambda = log(sqrt(lambda^2)); the exact square covers both
            // representations.
            const double L =
                0.5 * std::log(rational_to_double(lambda.squared()));
            row.L.push_back(L);
            sum += L;
        }
        row.defect = row.q - sum;
        trajectory.rows.push_back(std::move(row));
    }
    return trajectory;
}

PhiEstimates phi_window_estimates(const Trajectory& trajectory,
                                  const Rational& tail_fraction) {
    if (tail_fraction <= 0 || tail_fraction > 1) {
        throw std::invalid_argument("tail fraction must lie in (0, 1]");
    }
    const std::size_t total = trajectory.rows.size();
    const Integer want =
        ceil_to_integer(tail_fraction * Rational(static_cast<long>(total)));
    std::size_t count = want.fits_ulong_p() ? want.get_ui() : total;
    if (count < 1) count = 1;
    if (count > total) count = total;

    std::vector<const TrajectoryRow*> tail;
    for (std::size_t i = total - count; i < total; ++i) {
        const TrajectoryRow& row = trajectory.rows[i];
        if (row.Q > 1) {
            tail.push_back(&row);
        }
    }
    if (tail.size() < 2) {
        throw std::domain_error(
            "tail window needs at least 2 rows with q > 0");
    }

    PhiEstimates est;
    for (std::size_t i = 0; i < tail.size(); ++i) {
        const TrajectoryRow& row = *tail[i];
        for (std::size_t j = 0; j < row.L.size(); ++j) {
            // Doubles are dyadic rationals, so this conversion is exact.
            const Rational ratio(row.L[j] / row.q);
            if (i == 0) {
                est.under.push_back(ratio);
                est.over.push_back(ratio);
            } else {
                if (ratio < est.under[j]) est.under[j] = ratio;
                if (ratio > est.over[j]) est.over[j] = ratio;
            }
        }
    }
    est.window_lo = Rational(tail.front()->q);
    est.window_hi = Rational(tail.back()->q);
    return est;
}

DefectReport minkowski_defect_report(const Trajectory& trajectory) {
    const std::size_t total = trajectory.rows.size();
    if (total < 3) {
        throw std::domain_error("defect report needs at least 3 rows");
    }
    DefectReport report;
    report.min_defect = trajectory.rows.front().defect;
    report.max_defect = trajectory.rows.front().defect;
    double sum_q = 0, sum_d = 0, sum_qq = 0, sum_qd = 0;
    for (const TrajectoryRow& row : trajectory.rows) {
        report.min_defect = std::min(report.min_defect, row.defect);
        report.max_defect = std::max(report.max_defect, row.defect);
        sum_q += row.q;
        sum_d += row.defect;
        sum_qq += row.q * row.q;
        sum_qd += row.q * row.defect;
    }
    report.range = report.max_defect - report.min_defect;
    const double count = static_cast<double>(total);
    report.slope = (count * sum_qd - sum_q * sum_d) /
                   (count * sum_qq - sum_q * sum_q);
    return report;
}

}  // namespace pgnlab
