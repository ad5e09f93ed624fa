// Acceptance suite. Each invocation runs one numbered criterion (or "all"),
// prints a single PASS/FAIL line with the runtime, and exits nonzero on
// failure. The criteria combine exact property sweeps with independent
// oracles; tolerances and budgets are pinned here on purpose.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pgnlab/block.hpp"
#include "pgnlab/gauge.hpp"
#include "pgnlab/growth_sequence.hpp"
#include "pgnlab/identities.hpp"
#include "pgnlab/minima.hpp"
#include "pgnlab/rational.hpp"
#include "pgnlab/system.hpp"
#include "pgnlab/system_checks.hpp"
#include "pgnlab/trajectory.hpp"

namespace {

using namespace pgnlab;

struct Outcome {
    bool pass = true;
    long checked = 0;
    std::vector<std::string> failures;
    std::string note;

    void expect(bool ok, const std::string& what) {
        ++checked;
        if (!ok) {
            pass = false;
            if (failures.size() < 5) failures.push_back(what);
        }
    }
};

GeneralizedSystem standard_system(int n, int k, const Rational& theta,
                                  long m0, long m1) {
    SystemParams params(n, k, GrowthSequence::theta_form(theta, m0, m1 + 2));
    BuildResult result = build_system(params);
    if (!result.system) {
        throw std::logic_error("default slopes must yield a full system");
    }
    return std::move(*result.system);
}

std::string rat(const Rational& value) { return rational_to_string(value); }

// -----------------------------------------------------------------------
// 1. every built system passes the axiom suite with zero witnesses

Outcome criterion_axioms() {
    Outcome out;
    const Rational thetas[] = {Rational(1, 2), Rational(1), Rational(3)};
    long systems = 0;
    for (int n = 2; n <= 6; ++n) {
        for (int k = 2; k <= n; ++k) {
            for (const Rational& theta : thetas) {
                GeneralizedSystem system = standard_system(n, k, theta, -2, 4);
                ++systems;
                const std::string tag = "n=" + std::to_string(n) +
                                        " k=" + std::to_string(k) +
                                        " theta=" + rat(theta);
                out.expect(static_cast<int>(system.components.size()) == n + 1,
                           tag + ": wrong component count");
                out.expect(system.registry.size() == 7,
                           tag + ": wrong registry size");
                AxiomReport report = validate_gsystem(system);
                out.expect(report.all_ok() && report.witnesses.empty(),
                           tag + ": axiom witness found");
            }
        }
    }
    out.note = std::to_string(systems) + " systems, blocks -2..4";
    return out;
}

// -----------------------------------------------------------------------
// 2. block ratios approach 0 and 1/(n-k+2); the slope identity is exact

Outcome criterion_ratio_limits() {
    Outcome out;
    const Rational tolerance(1, 1000000000);
    for (int n = 2; n <= 6; ++n) {
        for (int k = 2; k <= n; ++k) {
            SystemParams params(n, k, GrowthSequence::theta_form(Rational(1),
                                                                 3, 8));
            const Rational target(1, n - k + 2);
            out.expect(params.beta() * params.gamma() /
                               (params.beta() + params.gamma()) ==
                           target,
                       "slope identity fails for n=" + std::to_string(n) +
                           " k=" + std::to_string(k));

            GeneralizedSystem system = standard_system(n, k, Rational(1), 3, 6);
            AsymptoticReport report = asymptotic_report(system);
            out.expect(report.matches_limit_target,
                       "target mismatch for n=" + std::to_string(n));
            for (const auto& row : report.rows) {
                const std::string tag = "n=" + std::to_string(n) +
                                        " k=" + std::to_string(k) +
                                        " m=" + std::to_string(row.m);
                Rational gap = row.min_c_ratio - target;
                if (gap < 0) gap = -gap;
                out.expect(gap < tolerance, tag + ": C ratio gap " + rat(gap));
                out.expect(row.max_a_ratio < tolerance,
                           tag + ": A ratio " + rat(row.max_a_ratio));
            }
        }
    }
    out.note = "15 (n,k) pairs, blocks 3..6, tolerance 1e-9";
    return out;
}

// -----------------------------------------------------------------------
// 3. closed-form block extrema against a 10^4-point grid scan

Outcome criterion_block_extrema() {
    Outcome out;
    std::mt19937 rng(730522u);
    std::uniform_int_distribution<long> small(1, 4);
    auto pick = [&]() {
        return make_rational(Integer(small(rng)), Integer(small(rng)));
    };

    for (int trial = 0; trial < 50; ++trial) {
        // b/a < c/b holds by construction: the second ratio is strictly
        // larger than the first
        const Rational a = pick();
        const Rational ratio1 = Rational(1) + pick();
        const Rational ratio2 = ratio1 + pick();
        BlockSpec spec{a, a * ratio1, a * ratio1 * ratio2,
                       pick(), pick(), pick()};
        Block block = build_block(spec);
        BlockExtrema extrema = block_extrema(block);
        const std::string tag = "trial " + std::to_string(trial);

        auto oracle_a = testing::ratio_extrema_on_grid(block.A, 10000);
        out.expect(extrema.argmax_q == oracle_a.argmax,
                   tag + ": A argmax " + rat(oracle_a.argmax));
        out.expect(extrema.max_a_ratio >= oracle_a.max_value,
                   tag + ": grid exceeds A maximum");
        out.expect(block.A.eval(block.bp.r) / block.bp.r ==
                       extrema.max_a_ratio,
                   tag + ": A value at r");

        auto oracle_c = testing::ratio_extrema_on_grid(block.C, 10000);
        out.expect(extrema.argmin_q == oracle_c.argmin,
                   tag + ": C argmin " + rat(oracle_c.argmin));
        out.expect(extrema.min_c_ratio <= oracle_c.min_value,
                   tag + ": grid undercuts C minimum");
        out.expect(block.C.eval(block.bp.s) / block.bp.s ==
                       extrema.min_c_ratio,
                   tag + ": C value at s");
    }
    out.note = "50 random specs, 10^4 samples each";
    return out;
}

// -----------------------------------------------------------------------
// 4. successive minima equal the exhaustive box oracle on a dense sweep

Outcome criterion_minima_oracle() {
    Outcome out;

    TargetPoint thirds({Rational(1), Rational(1, 2), Rational(1, 3)});
    MinimaResult fixture =
        successive_minima(GaugeBody::make_c(thirds, Rational(6)));
    out.expect(fixture.lambdas[0].squared() == Rational(2) &&
                   fixture.lambdas[1].squared() == Rational(3) &&
                   fixture.lambdas[2].squared() == Rational(4),
               "fixture (1,1/2,1/3), Q=6 disagrees");

    const long q_values[] = {1, 2, 4, 8, 16, 32, 64};
    long points = 0;
    for (long d = 1; d <= 12; ++d) {
        for (long p1 = 0; p1 < 2 * d; ++p1) {
            for (long p2 = 0; p2 < 2 * d; ++p2) {
                TargetPoint xi({Rational(1),
                                make_rational(Integer(p1), Integer(d)),
                                make_rational(Integer(p2), Integer(d))});
                for (long q : q_values) {
                    ++points;
                    auto expected =
                        testing::c2_oracle_minima_squared(p1, p2, d, q);
                    MinimaResult got = successive_minima(
                        GaugeBody::make_c(xi, Rational(q)));
                    bool equal = true;
                    for (int j = 0; j < 3; ++j) {
                        equal = equal &&
                                got.lambdas[j].squared() == expected[j];
                    }
                    out.expect(equal, "p=(" + std::to_string(p1) + "," +
                                          std::to_string(p2) + ")/" +
                                          std::to_string(d) +
                                          " Q=" + std::to_string(q));
                }
            }
        }
    }
    out.note = std::to_string(points) + " sweep points, exact equality";
    return out;
}

// -----------------------------------------------------------------------
// 5. box equivalence, duality products and the scaling identity

Outcome criterion_identities() {
    Outcome out;

    struct MuFixture {
        TargetPoint xi;
        Rational N;
        Rational root;
    };
    std::vector<MuFixture> fixtures;
    auto add_dim2 = [&](std::vector<Rational> coords) {
        const long boxes[][2] = {{1, 1}, {4, 2}, {9, 3}};
        for (auto [N, root] : boxes) {
            fixtures.push_back({TargetPoint(coords), Rational(N),
                                Rational(root)});
        }
    };
    auto add_dim3 = [&](std::vector<Rational> coords) {
        const long boxes[][2] = {{1, 1}, {8, 2}, {27, 3}};
        for (auto [N, root] : boxes) {
            fixtures.push_back({TargetPoint(coords), Rational(N),
                                Rational(root)});
        }
    };
    add_dim2({Rational(1), Rational(0), Rational(0)});
    add_dim2({Rational(1), Rational(1, 2), Rational(1, 3)});
    add_dim2({Rational(1), Rational(2, 3), Rational(-1, 5)});
    fixtures.push_back({TargetPoint({Rational(1), Rational(1, 4),
                                     Rational(3, 4)}),
                        Rational(4), Rational(2)});
    add_dim3({Rational(1), Rational(0), Rational(0), Rational(0)});
    add_dim3({Rational(1), Rational(1, 2), Rational(1, 3), Rational(1, 5)});
    add_dim3({Rational(1), Rational(-1, 2), Rational(1, 3), Rational(-1, 4)});
    fixtures.push_back({TargetPoint({Rational(1), Rational(1, 2),
                                     Rational(1, 2), Rational(1, 2)}),
                        Rational(8), Rational(2)});
    out.expect(fixtures.size() == 20, "fixture count drifted");

    for (std::size_t i = 0; i < fixtures.size(); ++i) {
        const auto& f = fixtures[i];
        auto mu = mu_equivalence_check(f.xi, f.N, f.root);
        out.expect(mu.pass, "box equivalence fails at fixture " +
                                std::to_string(i));
    }

    // exact duality products for the coordinate point
    TargetPoint axis({Rational(1), Rational(0), Rational(0)});
    auto exact = duality_defect(axis, Rational(4), Rational(2));
    out.expect(exact.pass, "axis duality outside bounds");
    bool all_one = exact.products_squared.size() == 3;
    for (const auto& p2 : exact.products_squared) {
        all_one = all_one && p2 == Rational(1);
    }
    out.expect(all_one, "axis duality products are not (1,1,1)");

    TargetPoint thirds({Rational(1), Rational(1, 2), Rational(1, 3)});
    const long boxes[][2] = {{1, 1}, {4, 2}, {9, 3}};
    for (auto [N, root] : boxes) {
        auto rep = duality_defect(thirds, Rational(N), Rational(root));
        out.expect(rep.pass,
                   "duality bounds fail at N=" + std::to_string(N));
    }

    for (long m = 1; m <= 3; ++m) {
        for (const TargetPoint& xi : {axis, thirds}) {
            auto rep = scaling_identity_check(xi, Rational(m));
            out.expect(rep.pass, "scaling fails at M=" + std::to_string(m));
        }
    }

    out.note = "20 box fixtures, 4 duality runs, M in {1,2,3}";
    return out;
}

// -----------------------------------------------------------------------
// 6. the defect stays in a narrow band over a 2^i grid

Outcome criterion_defect_band() {
    Outcome out;
    TargetPoint xi({Rational(1), Rational(63, 50), Rational(793, 500)});
    std::vector<Rational> grid;
    for (long i = 0; i <= 12; ++i) grid.push_back(pow2(i));
    Trajectory trajectory = trace_trajectory(xi, grid);
    out.expect(!trajectory.partial, "trace aborted");
    out.expect(trajectory.rows.size() == 13, "row count drifted");

    DefectReport defect = minkowski_defect_report(trajectory);
    char buffer[160];
    std::snprintf(buffer, sizeof buffer, "range %.4f, slope %.5f",
                  defect.range, defect.slope);
    out.note = buffer;
    out.expect(defect.range < 3.0, std::string("defect range too wide: ") +
                                       buffer);
    out.expect(std::fabs(defect.slope) < 0.02,
               std::string("defect trend too steep: ") + buffer);
    return out;
}

// -----------------------------------------------------------------------
// 7. neighbor exponent inequalities on trajectories and exact ratios

Outcome criterion_neighbor_exponents() {
    Outcome out;
    const Rational slack(1, 20);

    const std::vector<std::vector<Rational>> points = {
        {Rational(1), Rational(63, 50), Rational(793, 500)},
        {Rational(1), Rational(1393, 985), Rational(1351, 780)},
    };
    std::vector<Rational> grid;
    for (long i = 0; i <= 12; ++i) grid.push_back(pow2(i));
    for (std::size_t p = 0; p < points.size(); ++p) {
        Trajectory trajectory =
            trace_trajectory(TargetPoint(points[p]), grid);
        out.expect(!trajectory.partial,
                   "trace " + std::to_string(p) + " aborted");
        PhiEstimates est = phi_window_estimates(trajectory, Rational(1, 3));
        for (std::size_t j = 1; j < est.under.size(); ++j) {
            out.expect(est.under[j] <= est.over[j - 1] + slack,
                       "trajectory " + std::to_string(p) + ": under_" +
                           std::to_string(j + 1) + "=" +
                           rat(est.under[j]) + " over_" + std::to_string(j) +
                           "=" + rat(est.over[j - 1]));
        }
    }

    // on exact system ratios the same inequalities hold with zero slack
    for (int n = 2; n <= 6; ++n) {
        for (int k = 2; k <= n; ++k) {
            GeneralizedSystem system = standard_system(n, k, Rational(1), 0, 4);
            PhiEstimates est = system_phi_estimates(system, 2);
            PhiReport report = phi_inequality_check(est, n, k, Rational(0),
                                                    Rational(1, 100));
            const std::string tag = "n=" + std::to_string(n) +
                                    " k=" + std::to_string(k);
            out.expect(report.chain_checked, tag + ": chain gate closed");
            out.expect(report.pass, tag + ": zero-slack comparison fails");
        }
    }
    out.note = "2 trajectories at slack 1/20, 15 systems at slack 0";
    return out;
}

// -----------------------------------------------------------------------
// 8. (n-k+2) * over_k <= 1 exactly on every block tail

Outcome criterion_tail_bound() {
    Outcome out;
    for (int n = 2; n <= 6; ++n) {
        for (int k = 2; k <= n; ++k) {
            GeneralizedSystem system = standard_system(n, k, Rational(1), 0, 6);
            for (long tail_from = 3; tail_from <= 6; ++tail_from) {
                PhiEstimates est = system_phi_estimates(system, tail_from);
                const Rational product =
                    Rational(n - k + 2) * est.over[k - 1];
                const std::string tag = "n=" + std::to_string(n) +
                                        " k=" + std::to_string(k) +
                                        " tail=" + std::to_string(tail_from);
                out.expect(product <= 1, tag + ": product " + rat(product));

                PhiReport report = phi_inequality_check(
                    est, n, k, Rational(0), Rational(1, 100));
                bool found = false;
                for (const auto& cmp : report.comparisons) {
                    if (cmp.name.rfind("(n-k+2)*over_", 0) == 0) {
                        found = true;
                        out.expect(cmp.pass, tag + ": report disagrees");
                    }
                }
                out.expect(report.chain_checked && found,
                           tag + ": chain not checked");
            }
        }
    }
    out.note = "15 (n,k) pairs, tails 3..6, exact rational bound";
    return out;
}

// -----------------------------------------------------------------------
// 9. breakpoint sandwich and exact amplitudes between two sequences

Outcome criterion_separation() {
    Outcome out;
    SeparationReport report =
        separation_check(Rational(1), Rational(2), 3, 2, 0, 4);
    out.expect(report.rows.size() == 5, "row count drifted");
    for (const auto& row : report.rows) {
        const std::string tag = "m=" + std::to_string(row.m);
        out.expect(row.scaling_ok, tag + ": scaling relation fails");
        out.expect(row.lower_ok && row.upper_ok, tag + ": sandwich fails");
        out.expect(row.amplitude_ok, tag + ": amplitude flag");
        out.expect(row.amplitude == pow2(row.m * row.m * row.m),
                   tag + ": amplitude " + rat(row.amplitude));
    }
    out.expect(report.sandwich_from && *report.sandwich_from == 0,
               "sandwich does not start at m=0");
    out.expect(report.all_amplitudes_ok, "amplitude summary flag");
    out.note = "theta 1 vs 2, n=3, k=2, m in 0..4";
    return out;
}

// -----------------------------------------------------------------------
// 10. the figure command is byte-deterministic with the expected geometry

std::string run_figure(const std::string& binary, const std::string& out_path) {
    const std::string command = "'" + binary +
                                "' figure --spec 1,2,8,1,1,1/2 --out " +
                                out_path + " >/dev/null 2>&1";
    int status = std::system(command.c_str());
    if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) return "";
    std::ifstream in(out_path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Outcome criterion_figure() {
    Outcome out;
    const char* binary = std::getenv("PGNLAB_BIN");
    out.expect(binary != nullptr, "PGNLAB_BIN is not set");
    if (!binary) return out;

    const std::string first = run_figure(binary, "pgnlab_acceptance_fig1.tsv");
    const std::string second = run_figure(binary, "pgnlab_acceptance_fig2.tsv");
    std::remove("pgnlab_acceptance_fig1.tsv");
    std::remove("pgnlab_acceptance_fig2.tsv");
    out.expect(!first.empty(), "figure command failed");
    out.expect(first == second, "output differs between runs");

    std::vector<std::string> lines;
    std::istringstream in(first);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    out.expect(lines.size() == 7, "line count drifted");
    if (lines.size() == 7) {
        out.expect(lines[0] == "polyline\tA\t6\t1\t19\t1\t20\t2",
                   "A polyline drifted: " + lines[0]);
        out.expect(lines[3] == "vertical\tr\t6" &&
                       lines[4] == "vertical\ts\t7" &&
                       lines[5] == "vertical\tt\t19" &&
                       lines[6] == "vertical\tu\t20",
                   "vertical markers drifted");
    }
    out.note = "two runs, byte-identical, verticals 6/7/19/20";
    return out;
}

// -----------------------------------------------------------------------

struct Criterion {
    int id;
    const char* name;
    double budget_seconds;  // 0 means no budget pinned
    std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> table = {
        {1, "axiom suite over all built systems", 10.0, criterion_axioms},
        {2, "block ratio limits and slope identity", 1.0,
         criterion_ratio_limits},
        {3, "closed-form block extrema vs grid scan", 5.0,
         criterion_block_extrema},
        {4, "minima vs exhaustive box search", 120.0, criterion_minima_oracle},
        {5, "box, duality and scaling identities", 60.0, criterion_identities},
        {6, "defect bounded along a power grid", 120.0, criterion_defect_band},
        {7, "neighbor exponent inequalities", 0.0,
         criterion_neighbor_exponents},
        {8, "tail bound for the k-th component", 0.0, criterion_tail_bound},
        {9, "breakpoint sandwich between sequences", 0.0, criterion_separation},
        {10, "deterministic figure output", 0.0, criterion_figure},
    };
    return table;
}

int run_criterion(const Criterion& criterion) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
        outcome = criterion.run();
    } catch (const std::exception& e) {
        outcome.pass = false;
        outcome.failures.push_back(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (criterion.budget_seconds > 0 && seconds >= criterion.budget_seconds) {
        outcome.pass = false;
        outcome.failures.push_back("over the " +
                                   std::to_string(criterion.budget_seconds) +
                                   " s budget");
    }

    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", seconds);
    std::cout << "criterion " << criterion.id << " "
              << (outcome.pass ? "PASS" : "FAIL") << " (" << timing << ") "
              << criterion.name;
    if (!outcome.note.empty()) std::cout << ": " << outcome.note;
    std::cout << "\n";
    for (const auto& failure : outcome.failures) {
        std::cout << "  - " << failure << "\n";
    }
    return outcome.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: " << argv[0] << " <criterion 1..10 | all>\n";
        return 2;
    }
    const std::string which = argv[1];
    if (which == "all") {
        int failures = 0;
        for (const auto& criterion : criteria()) {
            failures += run_criterion(criterion);
        }
        return failures == 0 ? 0 : 1;
    }
    for (const auto& criterion : criteria()) {
        if (std::to_string(criterion.id) == which) {
            return run_criterion(criterion);
        }
    }
    std::cerr << "unknown criterion '" << which << "'\n";
    return 2;
}
