#include "pgnlab/serialization.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace pgnlab {

namespace {

Rational parse_rational_field(const nlohmann::json& value,
                              const std::string& where) {
    if (!value.is_string()) {
        throw FileFormatError(where + ": expected a rational string");
    }
    auto parsed = parse_rational(value.get<std::string>());
    if (!parsed) {
        throw FileFormatError(where + ": malformed rational '" +
                              value.get<std::string>() + "'");
    }
    return *parsed;
}

const nlohmann::json& require_key(const nlohmann::json& data,
                                  const char* key) {
    auto it = data.find(key);
    if (it == data.end()) {
        throw FileFormatError(std::string("system file: missing key '") + key +
                              "'");
    }
    return *it;
}

long require_integer(const nlohmann::json& value, const std::string& where) {
    if (!value.is_number_integer()) {
        throw FileFormatError(where + ": expected an integer");
    }
    return value.get<long>();
}

nlohmann::json rational_array(const std::vector<Rational>& values) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& v : values) out.push_back(rational_to_string(v));
    return out;
}

std::vector<Rational> parse_rational_array(const nlohmann::json& value,
                                           const std::string& where) {
    if (!value.is_array()) {
        throw FileFormatError(where + ": expected an array");
    }
    std::vector<Rational> out;
    out.reserve(value.size());
    for (std::size_t i = 0; i < value.size(); ++i) {
        out.push_back(parse_rational_field(
            value[i], where + "[" + std::to_string(i) + "]"));
    }
    return out;
}

}  // namespace

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

nlohmann::json system_to_json(const GeneralizedSystem& system) {
    nlohmann::json out;
    out["n"] = system.n;
    out["k"] = system.k;
    out["slopes"] = {
        {"alpha", rational_to_string(Rational(1, system.k - 1))},
        {"beta", rational_to_string(Rational(1))},
        {"gamma", rational_to_string(Rational(1, system.n + 1 - system.k))},
    };
    nlohmann::json components = nlohmann::json::array();
    for (const auto& component : system.components) {
        components.push_back({{"knots", rational_array(component.knots())},
                              {"values", rational_array(component.values())}});
    }
    out["components"] = std::move(components);
    nlohmann::json registry = nlohmann::json::array();
    for (const auto& entry : system.registry) {
        registry.push_back({{"m", entry.m},
                            {"r", rational_to_string(entry.r)},
                            {"s", rational_to_string(entry.s)},
                            {"t", rational_to_string(entry.t)}});
    }
    out["registry"] = std::move(registry);
    return out;
}

GeneralizedSystem system_from_json(const nlohmann::json& data) {
    if (!data.is_object()) {
        throw FileFormatError("system file: top level must be an object");
    }
    long n = require_integer(require_key(data, "n"), "system file: n");
    long k = require_integer(require_key(data, "k"), "system file: k");
    if (n < 2 || k < 2 || k > n) {
        throw FileFormatError(
            "system file: need n >= 2 and 2 <= k <= n, got n=" +
            std::to_string(n) + " k=" + std::to_string(k));
    }

    const auto& slopes = require_key(data, "slopes");
    Rational alpha = parse_rational_field(require_key(slopes, "alpha"),
                                          "system file: slopes.alpha");
    Rational beta = parse_rational_field(require_key(slopes, "beta"),
                                         "system file: slopes.beta");
    Rational gamma = parse_rational_field(require_key(slopes, "gamma"),
                                          "system file: slopes.gamma");
    if (alpha != Rational(1, k - 1) || beta != Rational(1) ||
        gamma != Rational(1, n + 1 - k)) {
        throw FileFormatError(
            "system file: slopes are inconsistent with n and k");
    }

    const auto& components_json = require_key(data, "components");
    if (!components_json.is_array() ||
        components_json.size() != static_cast<std::size_t>(n + 1)) {
        throw FileFormatError("system file: expected " + std::to_string(n + 1) +
                              " components");
    }
    std::vector<PiecewiseLinear> components;
    components.reserve(components_json.size());
    for (std::size_t j = 0; j < components_json.size(); ++j) {
        const std::string where =
            "system file: components[" + std::to_string(j) + "]";
        const auto& entry = components_json[j];
        if (!entry.is_object()) {
            throw FileFormatError(where + ": expected an object");
        }
        auto knots = parse_rational_array(require_key(entry, "knots"),
                                          where + ".knots");
        auto values = parse_rational_array(require_key(entry, "values"),
                                           where + ".values");
        try {
            components.emplace_back(std::move(knots), std::move(values));
        } catch (const std::exception& e) {
            throw FileFormatError(where + ": " + e.what());
        }
    }
    for (std::size_t j = 1; j < components.size(); ++j) {
        if (components[j].domain_min() != components[0].domain_min() ||
            components[j].domain_max() != components[0].domain_max()) {
            throw FileFormatError(
                "system file: components disagree on the domain");
        }
    }

    const auto& registry_json = require_key(data, "registry");
    if (!registry_json.is_array()) {
        throw FileFormatError("system file: registry must be an array");
    }
    std::vector<RegistryEntry> registry;
    registry.reserve(registry_json.size());
    for (std::size_t i = 0; i < registry_json.size(); ++i) {
        const std::string where =
            "system file: registry[" + std::to_string(i) + "]";
        const auto& entry = registry_json[i];
        if (!entry.is_object()) {
            throw FileFormatError(where + ": expected an object");
        }
        registry.push_back(
            {require_integer(require_key(entry, "m"), where + ".m"),
             parse_rational_field(require_key(entry, "r"), where + ".r"),
             parse_rational_field(require_key(entry, "s"), where + ".s"),
             parse_rational_field(require_key(entry, "t"), where + ".t")});
    }

    return GeneralizedSystem{static_cast<int>(n), static_cast<int>(k),
                             std::move(components), std::move(registry)};
}

void write_system_file(const std::string& path,
                       const GeneralizedSystem& system) {
    std::ofstream out(path);
    if (!out) {
        throw FileFormatError("cannot open '" + path + "' for writing");
    }
    out << system_to_json(system).dump(2) << "\n";
    if (!out) {
        throw FileFormatError("failed while writing '" + path + "'");
    }
}

GeneralizedSystem read_system_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw FileFormatError("cannot open '" + path + "'");
    }
    nlohmann::json data;
    try {
        data = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw FileFormatError("cannot parse '" + path + "': " + e.what());
    }
    return system_from_json(data);
}

std::string knots_csv(const GeneralizedSystem& system) {
    std::ostringstream out;
    out << "component,knot,value\n";
    for (int j = 1; j <= system.n_plus_1(); ++j) {
        const auto& component = system.component(j);
        for (std::size_t i = 0; i < component.knots().size(); ++i) {
            out << "P_" << j << "," << rational_to_string(component.knots()[i])
                << "," << rational_to_string(component.values()[i]) << "\n";
        }
    }
    return out.str();
}

std::string trajectory_csv(const Trajectory& trajectory) {
    std::ostringstream out;
    const int dim = static_cast<int>(trajectory.point.dimension());
    out << "Q,q";
    for (int j = 1; j <= dim; ++j) out << ",L_" << j;
    out << ",defect\n";
    for (const auto& row : trajectory.rows) {
        out << rational_to_string(row.Q) << "," << format_double(row.q);
        for (double value : row.L) out << "," << format_double(value);
        out << "," << format_double(row.defect) << "\n";
    }
    return out.str();
}

nlohmann::json axiom_report_json(const AxiomReport& report) {
    nlohmann::json out;
    out["g1"] = report.g1_ok;
    out["g2"] = report.g2_ok;
    out["g3"] = report.g3_ok;
    out["pass"] = report.all_ok();
    nlohmann::json witnesses = nlohmann::json::array();
    for (const auto& w : report.witnesses) {
        witnesses.push_back({{"axiom", w.axiom},
                             {"q", rational_to_string(w.q)},
                             {"description", w.description}});
    }
    out["witnesses"] = std::move(witnesses);
    nlohmann::json groups = nlohmann::json::array();
    for (const auto& g : report.groups) {
        groups.push_back({{"lo", rational_to_string(g.lo)},
                          {"hi", rational_to_string(g.hi)},
                          {"first", g.first},
                          {"last", g.last}});
    }
    out["groups"] = std::move(groups);
    return out;
}

nlohmann::json report_json(const std::vector<CheckLine>& checks) {
    nlohmann::json rows = nlohmann::json::array();
    bool pass = true;
    for (const auto& check : checks) {
        pass = pass && check.pass;
        rows.push_back({{"name", check.name},
                        {"pass", check.pass},
                        {"observed", check.observed},
                        {"bound", check.bound}});
    }
    return {{"checks", std::move(rows)}, {"pass", pass}};
}

namespace {

struct NamedCurve {
    std::string name;
    const PiecewiseLinear* f;
};

struct NamedVertical {
    std::string label;
    Rational x;
};

std::string render_tsv(const std::vector<NamedCurve>& curves,
                       const std::vector<NamedVertical>& verticals) {
    std::ostringstream out;
    for (const auto& curve : curves) {
        out << "polyline\t" << curve.name;
        for (std::size_t i = 0; i < curve.f->knots().size(); ++i) {
            out << "\t" << rational_to_string(curve.f->knots()[i]) << "\t"
                << rational_to_string(curve.f->values()[i]);
        }
        out << "\n";
    }
    for (const auto& vertical : verticals) {
        out << "vertical\t" << vertical.label << "\t"
            << rational_to_string(vertical.x) << "\n";
    }
    return out.str();
}

constexpr const char* kPalette[] = {"#1b9e77", "#d95f02", "#7570b3",
                                    "#e7298a", "#66a61e", "#e6ab02",
                                    "#a6761d"};
constexpr int kPaletteSize = 7;

std::string render_svg(const std::vector<NamedCurve>& curves,
                       const std::vector<NamedVertical>& verticals) {
    const double width = 820, height = 520;
    const double x0 = 60, x1 = 760, y0 = 460, y1 = 20;

    double qmin = rational_to_double(curves.front().f->domain_min());
    double qmax = rational_to_double(curves.front().f->domain_max());
    double vmax = 0;
    for (const auto& curve : curves) {
        for (const auto& v : curve.f->values()) {
            vmax = std::max(vmax, rational_to_double(v));
        }
    }
    if (qmax <= qmin) qmax = qmin + 1;
    if (vmax <= 0) vmax = 1;

    auto sx = [&](double q) { return x0 + (q - qmin) / (qmax - qmin) * (x1 - x0); };
    auto sy = [&](double v) { return y0 + v / vmax * (y1 - y0); };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
        << format_double(width) << "\" height=\"" << format_double(height)
        << "\" viewBox=\"0 0 " << format_double(width) << " "
        << format_double(height) << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<line x1=\"" << format_double(x0) << "\" y1=\""
        << format_double(y0) << "\" x2=\"" << format_double(x1)
        << "\" y2=\"" << format_double(y0)
        << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    out << "<line x1=\"" << format_double(x0) << "\" y1=\""
        << format_double(y0) << "\" x2=\"" << format_double(x0)
        << "\" y2=\"" << format_double(y1)
        << "\" stroke=\"black\" stroke-width=\"1\"/>\n";

    for (const auto& vertical : verticals) {
        double x = sx(rational_to_double(vertical.x));
        out << "<line x1=\"" << format_double(x) << "\" y1=\""
            << format_double(y0) << "\" x2=\"" << format_double(x)
            << "\" y2=\"" << format_double(y1)
            << "\" stroke=\"#888888\" stroke-width=\"1\" "
               "stroke-dasharray=\"6 4\"/>\n";
        out << "<text x=\"" << format_double(x + 3) << "\" y=\""
            << format_double(y1 + 12)
            << "\" font-family=\"monospace\" font-size=\"12\" "
               "fill=\"#555555\">"
            << vertical.label << "</text>\n";
    }

    for (std::size_t c = 0; c < curves.size(); ++c) {
        const char* color = kPalette[c % kPaletteSize];
        out << "<polyline fill=\"none\" stroke=\"" << color
            << "\" stroke-width=\"2\" points=\"";
        const auto& f = *curves[c].f;
        for (std::size_t i = 0; i < f.knots().size(); ++i) {
            if (i) out << " ";
            out << format_double(sx(rational_to_double(f.knots()[i]))) << ","
                << format_double(sy(rational_to_double(f.values()[i])));
        }
        out << "\"/>\n";
        out << "<text x=\"" << format_double(x1 - 60) << "\" y=\""
            << format_double(y1 + 16 + 16 * static_cast<double>(c))
            << "\" font-family=\"monospace\" font-size=\"13\" fill=\"" << color
            << "\">" << curves[c].name << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::vector<NamedCurve> block_curves(const Block& block) {
    return {{"A", &block.A}, {"B", &block.B}, {"C", &block.C}};
}

std::vector<NamedVertical> block_verticals(const Block& block) {
    return {{"r", block.bp.r},
            {"s", block.bp.s},
            {"t", block.bp.t},
            {"u", block.bp.u}};
}

std::vector<NamedCurve> system_curves(const GeneralizedSystem& system) {
    std::vector<NamedCurve> curves;
    for (int j = 1; j <= system.n_plus_1(); ++j) {
        curves.push_back({"P_" + std::to_string(j), &system.component(j)});
    }
    return curves;
}

std::vector<NamedVertical> system_verticals(const GeneralizedSystem& system) {
    std::vector<NamedVertical> verticals;
    for (const auto& entry : system.registry) {
        const std::string m = std::to_string(entry.m);
        verticals.push_back({"r[" + m + "]", entry.r});
        verticals.push_back({"s[" + m + "]", entry.s});
        verticals.push_back({"t[" + m + "]", entry.t});
    }
    if (!system.registry.empty()) {
        verticals.push_back(
            {"u[" + std::to_string(system.registry.back().m) + "]",
             system.domain_max()});
    }
    return verticals;
}

}  // namespace

std::string figure_tsv(const Block& block) {
    return render_tsv(block_curves(block), block_verticals(block));
}

std::string figure_tsv(const GeneralizedSystem& system) {
    return render_tsv(system_curves(system), system_verticals(system));
}

std::string figure_svg(const Block& block) {
    return render_svg(block_curves(block), block_verticals(block));
}

std::string figure_svg(const GeneralizedSystem& system) {
    return render_svg(system_curves(system), system_verticals(system));
}

}  // namespace pgnlab
