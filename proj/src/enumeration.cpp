#include "pgnlab/enumeration.hpp"

#include <sstream>

namespace pgnlab {

QuadForm::QuadForm(std::vector<std::vector<Rational>> gram_)
    : gram(std::move(gram_)) {
    const std::size_t dim = gram.size();
    if (dim == 0) {
        throw std::invalid_argument("empty quadratic form");
    }
    for (const std::vector<Rational>& row : gram) {
        if (row.size() != dim) {
            throw std::invalid_argument("quadratic form matrix must be square");
        }
    }
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = i + 1; j < dim; ++j) {
            if (gram[i][j] != gram[j][i]) {
                throw std::invalid_argument(
                    "quadratic form matrix must be symmetric");
            }
        }
    }
}

Rational QuadForm::operator()(const IntVector& x) const {
    const std::size_t dim = gram.size();
    if (x.size() != dim) {
        throw std::invalid_argument("vector dimension mismatch");
    }
    Rational out = 0;
    for (std::size_t i = 0; i < dim; ++i) {
        if (x[i] == 0) continue;
        out += gram[i][i] * Rational(x[i]) * Rational(x[i]);
        for (std::size_t j = i + 1; j < dim; ++j) {
            out += 2 * gram[i][j] * Rational(x[i]) * Rational(x[j]);
        }
    }
    return out;
}

namespace {

// Gram-Schmidt data of a Gram matrix: squared lengths B and coefficients mu.
struct Gso {
    std::vector<Rational> B;
    std::vector<std::vector<Rational>> mu;  // mu[i][j] for j < i
};

Gso compute_gso(const std::vector<std::vector<Rational>>& G) {
    const std::size_t dim = G.size();
    Gso gso;
    gso.B.assign(dim, Rational(0));
    gso.mu.assign(dim, std::vector<Rational>(dim, Rational(0)));
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            Rational v = G[i][j];
            for (std::size_t l = 0; l < j; ++l) {
                v -= gso.mu[i][l] * gso.mu[j][l] * gso.B[l];
            }
            gso.mu[i][j] = v / gso.B[j];
        }
        Rational b = G[i][i];
        for (std::size_t j = 0; j < i; ++j) {
            b -= gso.mu[i][j] * gso.mu[i][j] * gso.B[j];
        }
        if (b <= 0) {
            throw std::invalid_argument("form is not positive definite");
        }
        gso.B[i] = b;
    }
    return gso;
}

Integer round_to_integer(const Rational& v) {
    return floor_to_integer(v + make_rational(1, 2));
}

// Basis change b_i <- b_i - r * b_j applied to the Gram matrix and the
// transform rows.
void row_operation(std::vector<std::vector<Rational>>& G,
                   std::vector<IntVector>& U, std::size_t i, std::size_t j,
                   const Integer& r) {
    const std::size_t dim = G.size();
    const Rational rq = Rational(r);
    const Rational gii = G[i][i] - 2 * rq * G[i][j] + rq * rq * G[j][j];
    for (std::size_t k = 0; k < dim; ++k) {
        if (k == i) continue;
        G[i][k] -= rq * G[j][k];
        G[k][i] = G[i][k];
    }
    G[i][i] = gii;
    for (std::size_t k = 0; k < dim; ++k) {
        U[i][k] -= r * U[j][k];
    }
}

void swap_rows(std::vector<std::vector<Rational>>& G,
               std::vector<IntVector>& U, std::size_t i) {
    const std::size_t dim = G.size();
    std::swap(U[i], U[i - 1]);
    for (std::size_t k = 0; k < dim; ++k) {
        std::swap(G[i][k], G[i - 1][k]);
    }
    for (std::size_t k = 0; k < dim; ++k) {
        std::swap(G[k][i], G[k][i - 1]);
    }
}

// floor(-c + sqrt(R)) for R >= 0, computed without floating point.
Integer floor_shifted_sqrt(const Rational& c, const Rational& R) {
    const Integer rn = R.get_num();
    const Integer rd = R.get_den();
    const Integer s = isqrt_floor(rn * rd);
    // s/rd <= sqrt(R) < (s+1)/rd, so the floor is k or k+1.
    const Integer k =
        floor_to_integer(-c + Rational(s) / Rational(rd));
    const Rational probe = Rational(k) + 1 + c;
    if (probe <= 0 || probe * probe <= R) {
        return k + 1;
    }
    return k;
}

struct Enumerator {
    std::size_t dim;
    const std::vector<Rational>* D;
    const std::vector<std::vector<Rational>>* L;
    const std::vector<IntVector>* U;
    long ceiling;
    long visited = 0;

    std::vector<Integer> y;
    std::vector<IntVector> found;

    void run(const Rational& radius_sq) {
        y.assign(dim, Integer(0));
        descend(static_cast<long>(dim) - 1, radius_sq, true);
    }

    void descend(long level, const Rational& budget, bool higher_all_zero) {
        if (level < 0) {
            if (higher_all_zero) {
                return;  // the zero vector
            }
            IntVector x(dim, Integer(0));
            for (std::size_t i = 0; i < dim; ++i) {
                if (y[i] == 0) continue;
                for (std::size_t k = 0; k < dim; ++k) {
                    x[k] += y[i] * (*U)[i][k];
                }
            }
            found.push_back(std::move(x));
            return;
        }

        const std::size_t i = static_cast<std::size_t>(level);
        Rational c = 0;
        for (std::size_t j = i + 1; j < dim; ++j) {
            if (y[j] != 0) {
                c += (*L)[i][j] * Rational(y[j]);
            }
        }
        const Rational ratio = budget / (*D)[i];
        const Integer hi = floor_shifted_sqrt(c, ratio);
        // ceil(-c - sqrt(ratio)) = -floor(c + sqrt(ratio)); one half-space
        // representative per +-pair: start at 0 while everything above is 0.
        const Integer lo =
            higher_all_zero ? Integer(0) : -floor_shifted_sqrt(-c, ratio);

        for (Integer v = lo; v <= hi; ++v) {
            if (++visited > ceiling) {
                std::ostringstream msg;
                msg << "enumeration exceeded the candidate ceiling ("
                    << ceiling << " nodes)";
                throw ResourceLimitError(msg.str());
            }
            y[i] = v;
            const Rational offset = Rational(v) + c;
            descend(level - 1, budget - (*D)[i] * offset * offset,
                    higher_all_zero && v == 0);
        }
        y[i] = 0;
    }
};

}  // namespace

ReducedForm lll_reduce(const QuadForm& form, const Rational& delta) {
    if (delta <= make_rational(1, 4) || delta >= 1) {
        throw std::invalid_argument("reduction parameter must lie in (1/4, 1)");
    }
    const std::size_t dim = static_cast<std::size_t>(form.dimension());
    std::vector<std::vector<Rational>> G = form.gram;
    std::vector<IntVector> U(dim, IntVector(dim, Integer(0)));
    for (std::size_t i = 0; i < dim; ++i) {
        U[i][i] = 1;
    }
    compute_gso(G);  // positive-definiteness check up front

    std::size_t k = 1;
    while (k < dim) {
        Gso gso = compute_gso(G);
        for (std::size_t j = k; j-- > 0;) {
            const Integer r = round_to_integer(gso.mu[k][j]);
            if (r != 0) {
                row_operation(G, U, k, j, r);
                gso = compute_gso(G);
            }
        }
        if (gso.B[k] >=
            (delta - gso.mu[k][k - 1] * gso.mu[k][k - 1]) * gso.B[k - 1]) {
            ++k;
        } else {
            swap_rows(G, U, k);
            k = k > 1 ? k - 1 : 1;
        }
    }
    return ReducedForm{QuadForm(std::move(G)), std::move(U)};
}

std::vector<IntVector> enumerate_candidates(const QuadForm& form,
                                            const Rational& radius_sq,
                                            long node_ceiling) {
    if (radius_sq < 0) {
        throw std::invalid_argument("enumeration radius must be nonnegative");
    }
    if (node_ceiling <= 0) {
        throw std::invalid_argument("candidate ceiling must be positive");
    }
    const ReducedForm reduced = lll_reduce(form);
    const std::size_t dim = static_cast<std::size_t>(form.dimension());

    // Exact LDL: h(y) = sum_i D_i (y_i + sum_{j>i} L_ij y_j)^2.
    std::vector<std::vector<Rational>> W = reduced.form.gram;
    std::vector<Rational> D(dim);
    std::vector<std::vector<Rational>> L(dim,
                                         std::vector<Rational>(dim, Rational(0)));
    for (std::size_t i = 0; i < dim; ++i) {
        D[i] = W[i][i];
        if (D[i] <= 0) {
            throw std::invalid_argument("form is not positive definite");
        }
        for (std::size_t j = i + 1; j < dim; ++j) {
            L[i][j] = W[i][j] / D[i];
        }
        for (std::size_t j = i + 1; j < dim; ++j) {
            for (std::size_t l = j; l < dim; ++l) {
                W[j][l] -= L[i][j] * L[i][l] * D[i];
                W[l][j] = W[j][l];
            }
        }
    }

    Enumerator en;
    en.dim = dim;
    en.D = &D;
    en.L = &L;
    en.U = &reduced.transform;
    en.ceiling = node_ceiling;
    en.run(radius_sq);
    return std::move(en.found);
}

}  // namespace pgnlab
