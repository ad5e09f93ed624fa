#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pgnlab/block.hpp"
#include "pgnlab/system.hpp"
#include "pgnlab/system_checks.hpp"
#include "pgnlab/trajectory.hpp"

namespace pgnlab {

// Raised for structurally broken input files (missing keys, bad rationals,
// non-increasing knots); callers map it to the input-error exit code.
struct FileFormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Fixed-width float formatting used across all emitted artifacts: 12
// significant digits.
std::string format_double(double value);

// System file schema:
//   {"n": int, "k": int,
//    "slopes": {"alpha": "p/q", "beta": "p/q", "gamma": "p/q"},
//    "components": [{"knots": ["p/q", ...], "values": ["p/q", ...]}, ...],
//    "registry": [{"m": int, "r": "p/q", "s": "p/q", "t": "p/q"}, ...]}
nlohmann::json system_to_json(const GeneralizedSystem& system);
GeneralizedSystem system_from_json(const nlohmann::json& data);

void write_system_file(const std::string& path,
                       const GeneralizedSystem& system);
GeneralizedSystem read_system_file(const std::string& path);

// CSV with header component,knot,value; components named P_1..P_{n+1}.
std::string knots_csv(const GeneralizedSystem& system);

// CSV with header Q,q,L_1,...,L_{n+1},defect; Q exact, the rest floats.
std::string trajectory_csv(const Trajectory& trajectory);

nlohmann::json axiom_report_json(const AxiomReport& report);

// One line of a report file: the check is observed <op> bound.
struct CheckLine {
    std::string name;
    bool pass;
    std::string observed;
    std::string bound;
};

nlohmann::json report_json(const std::vector<CheckLine>& checks);

// Headerless TSV plot data: "polyline<TAB>name<TAB>x0<TAB>y0<TAB>x1..." rows
// followed by "vertical<TAB>label<TAB>x" rows, all exact rational strings.
std::string figure_tsv(const Block& block);
std::string figure_tsv(const GeneralizedSystem& system);

// Self-contained SVG rendering of the same data.
std::string figure_svg(const Block& block);
std::string figure_svg(const GeneralizedSystem& system);

}  // namespace pgnlab
