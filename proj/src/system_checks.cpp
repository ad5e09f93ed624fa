#include "pgnlab/system_checks.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pgnlab {

namespace {

std::vector<Rational> merged_knots(const GeneralizedSystem& system) {
    std::vector<Rational> qs;
    for (const PiecewiseLinear& comp : system.components) {
        const std::vector<Rational>& knots = comp.knots();
        qs.insert(qs.end(), knots.begin(), knots.end());
    }
    std::sort(qs.begin(), qs.end());
    qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
    return qs;
}

// Result of scanning one open interval for the slope-group axiom.
struct GroupScan {
    bool ok = false;
    int first = 0;  // 1-based component indices of the sloped group
    int last = 0;
    std::string reason;
};

GroupScan scan_interval(const GeneralizedSystem& system, const Rational& lo,
                        const Rational& hi) {
    const std::size_t count = system.components.size();
    const Rational width = hi - lo;

    std::vector<Rational> at_lo(count), at_hi(count);
    std::vector<std::size_t> sloped;
    std::vector<Rational> slopes(count);
    for (std::size_t j = 0; j < count; ++j) {
        at_lo[j] = system.components[j].eval(lo);
        at_hi[j] = system.components[j].eval(hi);
        slopes[j] = (at_hi[j] - at_lo[j]) / width;
        if (slopes[j] != 0) {
            sloped.push_back(j);
        }
    }

    GroupScan scan;
    if (sloped.empty()) {
        scan.reason = "no component has nonzero slope";
        return scan;
    }
    if (sloped.back() - sloped.front() + 1 != sloped.size()) {
        scan.reason = "sloped components are not contiguous";
        return scan;
    }
    const Rational expected = make_rational(1, static_cast<long>(sloped.size()));
    for (std::size_t j : sloped) {
        if (slopes[j] != expected) {
            std::ostringstream msg;
            msg << "component " << (j + 1) << " has slope "
                << rational_to_string(slopes[j]) << " instead of "
                << rational_to_string(expected);
            scan.reason = msg.str();
            return scan;
        }
    }
    for (std::size_t j : sloped) {
        if (at_lo[j] != at_lo[sloped.front()] ||
            at_hi[j] != at_hi[sloped.front()]) {
            scan.reason = "sloped components do not coincide";
            return scan;
        }
    }

    scan.ok = true;
    scan.first = static_cast<int>(sloped.front()) + 1;
    scan.last = static_cast<int>(sloped.back()) + 1;
    return scan;
}

}  // namespace

AxiomReport validate_gsystem(const GeneralizedSystem& system) {
    if (system.components.empty()) {
        throw std::invalid_argument("system has no components");
    }
    const std::vector<Rational> qs = merged_knots(system);
    if (qs.size() < 2) {
        throw std::invalid_argument("system needs at least one knot interval");
    }

    AxiomReport report;

    // G1 at knots and interval midpoints.
    auto check_g1 = [&](const Rational& q) {
        Rational sum = 0;
        Rational prev = 0;
        bool ordered = true;
        for (const PiecewiseLinear& comp : system.components) {
            const Rational v = comp.eval(q);
            if (v < prev) ordered = false;
            sum += v;
            prev = v;
        }
        if (!ordered) {
            report.g1_ok = false;
            report.witnesses.push_back(
                {"G1", q,
                 "components not nonnegative and nondecreasing at q = " +
                     rational_to_string(q)});
        }
        if (sum != q) {
            report.g1_ok = false;
            report.witnesses.push_back(
                {"G1", q,
                 "component sum " + rational_to_string(sum) +
                     " differs from q = " + rational_to_string(q)});
        }
    };
    for (std::size_t i = 0; i < qs.size(); ++i) {
        check_g1(qs[i]);
        if (i + 1 < qs.size()) {
            check_g1((qs[i] + qs[i + 1]) / 2);
        }
    }

    // G2 on every open interval.
    std::vector<GroupScan> scans;
    scans.reserve(qs.size() - 1);
    for (std::size_t i = 0; i + 1 < qs.size(); ++i) {
        GroupScan scan = scan_interval(system, qs[i], qs[i + 1]);
        if (scan.ok) {
            report.groups.push_back({qs[i], qs[i + 1], scan.first, scan.last});
        } else {
            report.g2_ok = false;
            report.witnesses.push_back(
                {"G2", qs[i],
                 "interval [" + rational_to_string(qs[i]) + ", " +
                     rational_to_string(qs[i + 1]) + "]: " + scan.reason});
        }
        scans.push_back(std::move(scan));
    }

    // G3 at interior knots, where both adjacent scans succeeded.
    for (std::size_t i = 1; i + 1 < qs.size(); ++i) {
        const GroupScan& left = scans[i - 1];
        const GroupScan& right = scans[i];
        if (!left.ok || !right.ok || left.first > right.last) {
            continue;
        }
        const Rational& q = qs[i];
        const Rational reference = system.component(left.first).eval(q);
        for (int j = left.first + 1; j <= right.last; ++j) {
            if (system.component(j).eval(q) != reference) {
                report.g3_ok = false;
                std::ostringstream msg;
                msg << "components " << left.first << ".." << right.last
                    << " do not coincide at the junction q = "
                    << rational_to_string(q);
                report.witnesses.push_back({"G3", q, msg.str()});
                break;
            }
        }
    }

    return report;
}

BlockExtrema block_extrema(const Block& block) {
    const BlockSpec& spec = block.spec;
    if (!(spec.b / spec.a < spec.c / spec.b)) {
        throw std::invalid_argument(
            "extremal ratio closed forms require b/a < c/b strictly");
    }
    BlockExtrema ex;
    ex.max_a_ratio = spec.a / block.bp.r;
    ex.argmax_q = block.bp.r;
    ex.min_c_ratio = spec.b / block.bp.s;
    ex.argmin_q = block.bp.s;
    return ex;
}

namespace {

AsymptoticReport ratios_from_registry(const PiecewiseLinear& A,
                                      const PiecewiseLinear& B,
                                      const std::vector<RegistryEntry>& registry,
                                      const Rational& beta,
                                      const Rational& gamma,
                                      std::optional<Rational> limit_target) {
    if (registry.empty()) {
        throw std::domain_error("empty block registry");
    }
    AsymptoticReport report;
    report.limsup_a_target = 0;
    report.liminf_c_target = beta * gamma / (beta + gamma);
    for (const RegistryEntry& entry : registry) {
        // A(r_m) = a_m and B(s_m) = a_{m+1} by the block endpoint values.
        const Rational a_m = A.eval(entry.r);
        const Rational a_next = B.eval(entry.s);
        report.rows.push_back({entry.m, a_m / entry.r, a_next / entry.s});
    }
    report.limit_target = limit_target;
    report.matches_limit_target =
        limit_target && report.liminf_c_target == *limit_target;
    const AsymptoticRow& last = report.rows.back();
    report.tail_gap_a = abs(last.max_a_ratio - report.limsup_a_target);
    report.tail_gap_c = abs(last.min_c_ratio - report.liminf_c_target);
    return report;
}

}  // namespace

AsymptoticReport asymptotic_report(const GluedTriple& triple) {
    return ratios_from_registry(triple.A, triple.B, triple.registry,
                                triple.beta, triple.gamma, std::nullopt);
}

AsymptoticReport asymptotic_report(const GeneralizedSystem& system) {
    // Systems carry the default slopes beta = 1, gamma = 1/(n+1-k).
    const Rational beta = 1;
    const Rational gamma = make_rational(1, system.n + 1 - system.k);
    return ratios_from_registry(
        system.component(1), system.component(system.k), system.registry, beta,
        gamma, make_rational(1, system.n - system.k + 2));
}

SeparationReport separation_check(const Rational& theta,
                                  const Rational& theta_prime, int n, int k,
                                  long m_lo, long m_hi) {
    if (!(theta > 0 && theta < theta_prime)) {
        throw std::invalid_argument("separation needs 0 < theta < theta'");
    }
    if (n < 2 || k < 2 || k > n) {
        throw std::invalid_argument("separation needs 2 <= k <= n");
    }
    if (m_lo > m_hi) {
        throw std::invalid_argument("empty separation range");
    }

    const Rational alpha = make_rational(1, k - 1);
    const Rational beta = 1;
    const Rational gamma = make_rational(1, n + 1 - k);
    auto term = [](const Rational& th, long m) -> Rational {
        return th * pow2(m * m * m);
    };

    SeparationReport report;
    for (long m = m_lo; m <= m_hi; ++m) {
        BlockSpec base{term(theta, m),     term(theta, m + 1),
                       term(theta, m + 2), alpha,
                       beta,               gamma};
        BlockSpec primed{term(theta_prime, m),     term(theta_prime, m + 1),
                         term(theta_prime, m + 2), alpha,
                         beta,                     gamma};
        const Breakpoints bp = block_breakpoints(base);
        const Breakpoints bp_primed = block_breakpoints(primed);

        SeparationRow row;
        row.m = m;
        row.r_theta = bp.r;
        row.t_theta = bp.t;
        row.r_theta_prime = bp_primed.r;
        row.scaling_ok = bp_primed.r == (theta_prime / theta) * bp.r;
        row.lower_ok = bp.r < bp_primed.r;
        row.upper_ok = bp_primed.r < bp.t;
        row.amplitude = term(theta_prime, m) - term(theta, m);
        row.amplitude_ok =
            row.amplitude == (theta_prime - theta) * pow2(m * m * m);
        report.all_amplitudes_ok = report.all_amplitudes_ok && row.amplitude_ok;
        report.rows.push_back(std::move(row));
    }

    for (std::size_t i = report.rows.size(); i-- > 0;) {
        const SeparationRow& row = report.rows[i];
        if (!(row.scaling_ok && row.lower_ok && row.upper_ok)) {
            break;
        }
        report.sandwich_from = row.m;
    }
    return report;
}

PhiEstimates system_phi_estimates(const GeneralizedSystem& system,
                                  long tail_from) {
    const RegistryEntry* start = nullptr;
    for (const RegistryEntry& entry : system.registry) {
        if (entry.m == tail_from) {
            start = &entry;
            break;
        }
    }
    if (start == nullptr) {
        throw std::domain_error("tail start is outside the block registry");
    }

    // P_j(q)/q is monotone between knots (slope + intercept/q), so knot
    // samples give the exact window extrema.
    const std::vector<Rational> qs = merged_knots(system);
    const std::size_t count = system.components.size();
    PhiEstimates est;
    bool first = true;
    for (const Rational& q : qs) {
        if (q < start->r) {
            continue;
        }
        for (std::size_t j = 0; j < count; ++j) {
            const Rational ratio = system.components[j].eval(q) / q;
            if (first) {
                est.under.push_back(ratio);
                est.over.push_back(ratio);
            } else {
                if (ratio < est.under[j]) est.under[j] = ratio;
                if (ratio > est.over[j]) est.over[j] = ratio;
            }
        }
        first = false;
    }
    est.window_lo = start->r;
    est.window_hi = qs.back();
    return est;
}

PhiReport phi_inequality_check(const PhiEstimates& estimates, int n, int k,
                               const Rational& slack, const Rational& eps0) {
    if (n < 2 || k < 2 || k > n) {
        throw std::invalid_argument("exponent check needs 2 <= k <= n");
    }
    const std::size_t count = static_cast<std::size_t>(n + 1);
    if (estimates.under.size() != count || estimates.over.size() != count) {
        throw std::invalid_argument("estimates must cover j = 1..n+1");
    }
    if (slack < 0 || eps0 < 0) {
        throw std::invalid_argument("slack and eps0 must be nonnegative");
    }

    PhiReport report;
    auto add = [&report](const std::string& name, const Rational& lhs,
                         const Rational& rhs) {
        const bool ok = lhs <= rhs;
        report.comparisons.push_back({name, lhs, rhs, ok});
        report.pass = report.pass && ok;
    };

    for (int j = 1; j <= n; ++j) {
        std::ostringstream name;
        name << "under_" << (j + 1) << " <= over_" << j << " + slack";
        add(name.str(), estimates.under[static_cast<std::size_t>(j)],
            estimates.over[static_cast<std::size_t>(j - 1)] + slack);
    }

    if (estimates.over[static_cast<std::size_t>(k - 2)] <= eps0) {
        report.chain_checked = true;
        {
            std::ostringstream name;
            name << "(n-k+2)*over_" << k << " <= 1 + slack";
            add(name.str(),
                Rational(n - k + 2) * estimates.over[static_cast<std::size_t>(k - 1)],
                Rational(1) + slack);
        }
        {
            std::ostringstream name;
            name << "under_" << (k + 1) << " <= 1/(n-k+2) + slack";
            add(name.str(), estimates.under[static_cast<std::size_t>(k)],
                make_rational(1, n - k + 2) + slack);
        }
    }

    return report;
}

}  // namespace pgnlab
