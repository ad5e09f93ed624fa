#include "pgnlab/gauge.hpp"

#include <cmath>
#include <stdexcept>

namespace pgnlab {

TargetPoint::TargetPoint(std::vector<Rational> coords_)
    : coords(std::move(coords_)) {
    if (coords.size() < 3) {
        throw std::invalid_argument("target point needs dimension n >= 2");
    }
    bool any_nonzero = false;
    for (const Rational& c : coords) {
        if (c != 0) {
            any_nonzero = true;
            break;
        }
    }
    if (!any_nonzero) {
        throw std::invalid_argument("target point must be nonzero");
    }
}

GaugeValue GaugeValue::linear(const Rational& value) {
    if (value < 0) {
        throw std::invalid_argument("gauge values are nonnegative");
    }
    GaugeValue g;
    g.linear_ = true;
    g.value_ = value;
    g.squared_ = value * value;
    return g;
}

GaugeValue GaugeValue::sqrt_of(const Rational& radicand) {
    if (radicand < 0) {
        throw std::invalid_argument("gauge radicand must be nonnegative");
    }
    if (std::optional<Rational> root = exact_nth_root(radicand, 2)) {
        return linear(*root);
    }
    GaugeValue g;
    g.linear_ = false;
    g.squared_ = radicand;
    return g;
}

const Rational& GaugeValue::value() const {
    if (!linear_) {
        throw std::logic_error("gauge value is an irrational square root");
    }
    return value_;
}

GaugeValue GaugeValue::scaled(const Rational& factor) const {
    if (factor <= 0) {
        throw std::invalid_argument("gauge scale factor must be positive");
    }
    if (linear_) {
        return linear(value_ * factor);
    }
    return sqrt_of(squared_ * factor * factor);
}

double GaugeValue::to_double() const {
    if (linear_) {
        return rational_to_double(value_);
    }
    return std::sqrt(rational_to_double(squared_));
}

std::string GaugeValue::to_string() const {
    if (linear_) {
        return rational_to_string(value_);
    }
    return "sqrt(" + rational_to_string(squared_) + ")";
}

std::string body_kind_name(BodyKind kind) {
    switch (kind) {
        case BodyKind::C: return "C";
        case BodyKind::K: return "K";
        case BodyKind::Kstar: return "Kstar";
        case BodyKind::CubeLattice: return "CubeLattice";
    }
    throw std::logic_error("unknown body kind");
}

namespace {

Rational rational_power(const Rational& base, int exponent) {
    Rational out = 1;
    for (int i = 0; i < exponent; ++i) {
        out *= base;
    }
    return out;
}

void require_section2_point(const TargetPoint& point, const Rational& N,
                            const Rational& root) {
    if (!point.normalized()) {
        throw std::invalid_argument("this body family requires xi_0 = 1");
    }
    if (N < 1) {
        throw std::invalid_argument("parameter N must be at least 1");
    }
    if (root <= 0 || rational_power(root, point.n()) != N) {
        throw std::invalid_argument(
            "root must satisfy root^n = N exactly (N must be a perfect n-th "
            "power of a rational)");
    }
}

}  // namespace

GaugeBody GaugeBody::make_c(TargetPoint point, const Rational& Q) {
    if (Q <= 0) {
        throw std::invalid_argument("parameter Q must be positive");
    }
    return GaugeBody(BodyKind::C, std::move(point), Q, 1);
}

GaugeBody GaugeBody::make_k(TargetPoint point, const Rational& N,
                            const Rational& root) {
    require_section2_point(point, N, root);
    return GaugeBody(BodyKind::K, std::move(point), N, root);
}

GaugeBody GaugeBody::make_kstar(TargetPoint point, const Rational& N,
                                const Rational& root) {
    require_section2_point(point, N, root);
    return GaugeBody(BodyKind::Kstar, std::move(point), N, root);
}

GaugeBody GaugeBody::make_cube_lattice(TargetPoint point, const Rational& N,
                                       const Rational& root) {
    require_section2_point(point, N, root);
    return GaugeBody(BodyKind::CubeLattice, std::move(point), N, root);
}

GaugeBody GaugeBody::dilated(const Rational& factor) const {
    if (factor <= 0) {
        throw std::invalid_argument("dilation factor must be positive");
    }
    GaugeBody body = *this;
    body.dilation_ *= factor;
    return body;
}

GaugeValue GaugeBody::gauge(const IntVector& x) const {
    if (static_cast<int>(x.size()) != dimension()) {
        throw std::invalid_argument("vector dimension mismatch");
    }
    const int n = point_.n();

    GaugeValue out = GaugeValue::zero();
    switch (kind_) {
        case BodyKind::C: {
            Rational sumsq = 0;
            Rational dot = 0;
            for (int i = 0; i <= n; ++i) {
                sumsq += Rational(x[i]) * Rational(x[i]);
                dot += Rational(x[i]) * point_.coords[i];
            }
            const GaugeValue ball = GaugeValue::sqrt_of(sumsq);
            const GaugeValue slab = GaugeValue::linear(parameter_ * abs(dot));
            out = ball < slab ? slab : ball;
            break;
        }
        case BodyKind::K: {
            Rational best = abs(Rational(x[0])) / parameter_;
            for (int j = 1; j <= n; ++j) {
                const Rational branch =
                    root_ * abs(Rational(x[0]) * point_.coords[j] - Rational(x[j]));
                if (branch > best) best = branch;
            }
            out = GaugeValue::linear(best);
            break;
        }
        case BodyKind::Kstar: {
            Rational sumsq = 0;
            Rational dot = 0;
            for (int i = 0; i <= n; ++i) {
                sumsq += Rational(x[i]) * Rational(x[i]);
                dot += Rational(x[i]) * point_.coords[i];
            }
            const GaugeValue ball =
                GaugeValue::sqrt_of(sumsq / (root_ * root_));
            const GaugeValue slab = GaugeValue::linear(parameter_ * abs(dot));
            out = ball < slab ? slab : ball;
            break;
        }
        case BodyKind::CubeLattice: {
            const std::vector<std::vector<Rational>> V = generator_matrix();
            Rational best = 0;
            for (int i = 0; i <= n; ++i) {
                Rational coord = 0;
                for (int j = 0; j <= n; ++j) {
                    coord += V[static_cast<std::size_t>(i)]
                              [static_cast<std::size_t>(j)] *
                             Rational(x[j]);
                }
                coord = abs(coord);
                if (coord > best) best = coord;
            }
            out = GaugeValue::linear(best);
            break;
        }
    }
    // A dilated body is larger, so the gauge shrinks by the same factor.
    if (dilation_ != 1) {
        out = out.scaled(1 / dilation_);
    }
    return out;
}

std::vector<std::vector<Rational>> GaugeBody::branch_forms() const {
    const int n = point_.n();
    const std::size_t dim = static_cast<std::size_t>(n + 1);
    std::vector<std::vector<Rational>> forms;

    auto unit_row = [dim](std::size_t i, const Rational& weight) {
        std::vector<Rational> row(dim, Rational(0));
        row[i] = weight;
        return row;
    };

    switch (kind_) {
        case BodyKind::C: {
            // ||x||^2 contributes one unit form per coordinate; the slab
            // contributes Q * xi.
            for (std::size_t i = 0; i < dim; ++i) {
                forms.push_back(unit_row(i, 1));
            }
            std::vector<Rational> slab(dim);
            for (std::size_t i = 0; i < dim; ++i) {
                slab[i] = parameter_ * point_.coords[i];
            }
            forms.push_back(std::move(slab));
            break;
        }
        case BodyKind::K: {
            forms.push_back(unit_row(0, 1 / parameter_));
            for (int j = 1; j <= n; ++j) {
                std::vector<Rational> row(dim, Rational(0));
                row[0] = root_ * point_.coords[static_cast<std::size_t>(j)];
                row[static_cast<std::size_t>(j)] = -root_;
                forms.push_back(std::move(row));
            }
            break;
        }
        case BodyKind::Kstar: {
            std::vector<Rational> slab(dim);
            for (std::size_t i = 0; i < dim; ++i) {
                slab[i] = parameter_ * point_.coords[i];
            }
            forms.push_back(std::move(slab));
            for (std::size_t i = 0; i < dim; ++i) {
                forms.push_back(unit_row(i, 1 / root_));
            }
            break;
        }
        case BodyKind::CubeLattice: {
            forms = generator_matrix();  // rows of V
            break;
        }
    }
    if (dilation_ != 1) {
        for (std::vector<Rational>& row : forms) {
            for (Rational& entry : row) {
                entry /= dilation_;
            }
        }
    }
    return forms;
}

std::vector<std::vector<Rational>> GaugeBody::sandwich_gram() const {
    const std::size_t dim = static_cast<std::size_t>(dimension());
    const std::vector<std::vector<Rational>> forms = branch_forms();
    std::vector<std::vector<Rational>> gram(dim,
                                            std::vector<Rational>(dim, 0));
    for (const std::vector<Rational>& w : forms) {
        for (std::size_t i = 0; i < dim; ++i) {
            if (w[i] == 0) continue;
            for (std::size_t j = i; j < dim; ++j) {
                gram[i][j] += w[i] * w[j];
            }
        }
    }
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            gram[i][j] = gram[j][i];
        }
    }
    return gram;
}

int GaugeBody::sandwich_factor() const {
    switch (kind_) {
        case BodyKind::C:
        case BodyKind::Kstar:
            // Two branches: the Euclidean one and the slab.
            return 2;
        case BodyKind::K:
        case BodyKind::CubeLattice:
            // n+1 linear branches under the sup norm.
            return dimension();
    }
    throw std::logic_error("unknown body kind");
}

std::vector<std::vector<Rational>> GaugeBody::generator_matrix() const {
    if (kind_ != BodyKind::CubeLattice) {
        throw std::logic_error("generator matrix exists for the cube-lattice "
                               "body only");
    }
    const int n = point_.n();
    const std::size_t dim = static_cast<std::size_t>(n + 1);
    std::vector<std::vector<Rational>> V(dim, std::vector<Rational>(dim, 0));
    // Column 0 is v_0 = (1/N, root*xi_1, ..., root*xi_n); column j >= 1 is
    // v_j = -root * e_j.
    V[0][0] = 1 / parameter_;
    for (std::size_t i = 1; i < dim; ++i) {
        V[i][0] = root_ * point_.coords[i];
        V[i][i] = -root_;
    }
    return V;
}

}  // namespace pgnlab
