// Python bindings for the core operations. Rationals cross the boundary as
// strings ("p/q") so no precision is lost; structured results come back as
// JSON text or plain dicts of strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "pgnlab/block.hpp"
#include "pgnlab/gauge.hpp"
#include "pgnlab/growth_sequence.hpp"
#include "pgnlab/identities.hpp"
#include "pgnlab/minima.hpp"
#include "pgnlab/rational.hpp"
#include "pgnlab/serialization.hpp"
#include "pgnlab/system.hpp"
#include "pgnlab/system_checks.hpp"
#include "pgnlab/trajectory.hpp"

namespace py = pybind11;

namespace {

using namespace pgnlab;

Rational to_rational(const std::string& text) {
    auto value = parse_rational(text);
    if (!value) {
        throw std::invalid_argument("malformed rational '" + text + "'");
    }
    return *value;
}

std::vector<Rational> to_rationals(const std::vector<std::string>& texts) {
    std::vector<Rational> values;
    values.reserve(texts.size());
    for (const auto& text : texts) values.push_back(to_rational(text));
    return values;
}

GaugeBody make_body(const std::string& kind,
                    const std::vector<std::string>& coords,
                    const std::string& parameter, const std::string& root) {
    TargetPoint point(to_rationals(coords));
    const Rational value = to_rational(parameter);
    if (kind == "c") return GaugeBody::make_c(point, value);
    const Rational root_value = to_rational(root);
    if (kind == "k") return GaugeBody::make_k(point, value, root_value);
    if (kind == "kstar") return GaugeBody::make_kstar(point, value, root_value);
    if (kind == "cube_lattice") {
        return GaugeBody::make_cube_lattice(point, value, root_value);
    }
    throw std::invalid_argument("body kind must be c, k, kstar or "
                                "cube_lattice");
}

std::string build_system_json(int n, int k, const std::string& theta, long m0,
                              long m1) {
    SystemParams params(n, k,
                        GrowthSequence::theta_form(to_rational(theta), m0,
                                                   m1 + 2));
    params.validate();
    BuildResult result = build_system(params);
    return system_to_json(*result.system).dump(2);
}

std::string validate_system_json(const std::string& text) {
    GeneralizedSystem system =
        system_from_json(nlohmann::json::parse(text));
    return axiom_report_json(validate_gsystem(system)).dump(2);
}

py::dict minima_dict(const std::string& kind,
                     const std::vector<std::string>& coords,
                     const std::string& parameter, const std::string& root) {
    MinimaResult result = successive_minima(
        make_body(kind, coords, parameter, root),
        MinimaOptions::from_environment());
    py::list lambdas;
    for (const auto& value : result.lambdas) {
        lambdas.append(rational_to_string(value.squared()));
    }
    py::list witnesses;
    for (const auto& witness : result.witnesses) {
        py::list entries;
        for (const auto& coordinate : witness) {
            entries.append(py::int_(py::str(coordinate.get_str())));
        }
        witnesses.append(std::move(entries));
    }
    py::dict out;
    out["lambdas_squared"] = std::move(lambdas);
    out["witnesses"] = std::move(witnesses);
    out["candidates_seen"] = result.candidates_seen;
    return out;
}

std::string trace_csv(const std::vector<std::string>& coords,
                      const std::vector<std::string>& grid) {
    Trajectory trajectory =
        trace_trajectory(TargetPoint(to_rationals(coords)),
                         to_rationals(grid),
                         MinimaOptions::from_environment());
    if (trajectory.partial) {
        throw std::runtime_error("trace aborted: " + trajectory.abort_reason);
    }
    return trajectory_csv(trajectory);
}

std::string block_figure_tsv(const std::vector<std::string>& spec) {
    if (spec.size() != 6) {
        throw std::invalid_argument(
            "block spec needs 6 rationals: a,b,c,alpha,beta,gamma");
    }
    auto values = to_rationals(spec);
    return figure_tsv(build_block(BlockSpec{values[0], values[1], values[2],
                                            values[3], values[4],
                                            values[5]}));
}

bool scaling_check(const std::vector<std::string>& coords,
                   const std::string& M) {
    return scaling_identity_check(TargetPoint(to_rationals(coords)),
                                  to_rational(M),
                                  MinimaOptions::from_environment())
        .pass;
}

}  // namespace

PYBIND11_MODULE(_pgnlab, m) {
    m.doc() = "exact piecewise-linear systems and parametric lattice minima";

    m.def("build_system_json", &build_system_json, py::arg("n"), py::arg("k"),
          py::arg("theta"), py::arg("m0"), py::arg("m1"),
          "Build the (n+1)-component system for blocks m0..m1 of the "
          "sequence theta * 2^(m^3); returns the system as JSON text.");
    m.def("validate_system_json", &validate_system_json, py::arg("system"),
          "Re-run the axiom suite on a system given as JSON text; returns "
          "the report as JSON text.");
    m.def("successive_minima", &minima_dict, py::arg("kind"),
          py::arg("coords"), py::arg("parameter"), py::arg("root") = "1",
          "Exact successive minima of a parametric body against the integer "
          "lattice. Rationals are strings; squared minima come back as "
          "strings.");
    m.def("trace_csv", &trace_csv, py::arg("coords"), py::arg("grid"),
          "Minima trajectory of the ball-and-slab body over a Q grid as "
          "CSV text.");
    m.def("block_figure_tsv", &block_figure_tsv, py::arg("spec"),
          "Plot data for one block given as 6 rational strings.");
    m.def("scaling_check", &scaling_check, py::arg("coords"), py::arg("M"),
          "Whether the exact scaling identity holds for the point at "
          "factor M.");
}
