#include "pgnlab/minima.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace pgnlab {

MinimaOptions MinimaOptions::from_environment() {
    MinimaOptions options;
    if (const char* raw = std::getenv("PGNLAB_CANDIDATE_CEILING")) {
        char* end = nullptr;
        const long value = std::strtol(raw, &end, 10);
        if (end == raw || *end != '\0' || value <= 0) {
            throw std::invalid_argument(
                "PGNLAB_CANDIDATE_CEILING must be a positive integer");
        }
        options.candidate_ceiling = value;
    }
    return options;
}

namespace {

void canonicalize_sign(IntVector& x) {
    for (const Integer& entry : x) {
        if (entry > 0) return;
        if (entry < 0) {
            for (Integer& e : x) {
                e = -e;
            }
            return;
        }
    }
}

bool lex_less(const IntVector& a, const IntVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        const int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

struct Candidate {
    IntVector x;
    GaugeValue g;
};

// Incremental exact rank over the integers: rows in echelon form ordered by
// pivot column.
struct RankTracker {
    std::vector<IntVector> rows;
    std::vector<std::size_t> pivots;

    bool try_insert(IntVector v) {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const std::size_t p = pivots[r];
            if (v[p] == 0) continue;
            const Integer scale = rows[r][p];
            const Integer factor = v[p];
            Integer g = 0;
            for (std::size_t k = 0; k < v.size(); ++k) {
                v[k] = v[k] * scale - rows[r][k] * factor;
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[k].get_mpz_t());
            }
            if (g > 1) {
                for (Integer& e : v) {
                    e /= g;
                }
            }
        }
        std::size_t pivot = v.size();
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (v[k] != 0) {
                pivot = k;
                break;
            }
        }
        if (pivot == v.size()) {
            return false;
        }
        if (v[pivot] < 0) {
            for (Integer& e : v) {
                e = -e;
            }
        }
        std::size_t at = 0;
        while (at < pivots.size() && pivots[at] < pivot) {
            ++at;
        }
        rows.insert(rows.begin() + static_cast<long>(at), std::move(v));
        pivots.insert(pivots.begin() + static_cast<long>(at), pivot);
        return true;
    }
};

std::vector<Candidate> sorted_candidates(const GaugeBody& body,
                                         std::vector<IntVector> xs) {
    std::vector<Candidate> cands;
    cands.reserve(xs.size());
    for (IntVector& x : xs) {
        canonicalize_sign(x);
        GaugeValue g = body.gauge(x);
        cands.push_back(Candidate{std::move(x), std::move(g)});
    }
    std::sort(cands.begin(), cands.end(),
              [](const Candidate& a, const Candidate& b) {
                  if (a.g != b.g) return a.g < b.g;
                  return lex_less(a.x, b.x);
              });
    return cands;
}

// Greedy selection in gauge order; the j-th selected vector attains the j-th
// minimum when the candidate list contains every nonzero point of gauge up
// to the j-th minimum (one per +-pair suffices).
std::vector<Candidate> greedy_independent(const std::vector<Candidate>& cands,
                                          std::size_t target) {
    RankTracker rank;
    std::vector<Candidate> picks;
    for (const Candidate& cand : cands) {
        if (picks.size() == target) break;
        if (rank.try_insert(cand.x)) {
            picks.push_back(cand);
        }
    }
    return picks;
}

}  // namespace

MinimaResult successive_minima(const GaugeBody& body,
                               const MinimaOptions& options) {
    const std::size_t dim = static_cast<std::size_t>(body.dimension());
    const QuadForm form(body.sandwich_gram());

    // Seed: reduced basis rows plus the standard basis always span, so the
    // greedy over them yields a finite upper bound for the last minimum.
    const ReducedForm reduced = lll_reduce(form);
    std::vector<IntVector> seed = reduced.transform;
    for (std::size_t i = 0; i < dim; ++i) {
        IntVector e(dim, Integer(0));
        e[i] = 1;
        seed.push_back(std::move(e));
    }
    const std::vector<Candidate> seed_picks =
        greedy_independent(sorted_candidates(body, std::move(seed)), dim);
    if (seed_picks.size() != dim) {
        throw std::logic_error("seed basis failed to reach full rank");
    }

    // Every x with gauge(x) <= bound satisfies form(x) <= factor * bound^2,
    // so the enumeration below is complete for the minima. The doubling loop
    // is defensive; the seed vectors themselves lie inside the radius.
    Rational radius = Rational(body.sandwich_factor()) *
                      seed_picks.back().g.squared();
    for (;;) {
        std::vector<IntVector> raw =
            enumerate_candidates(form, radius, options.candidate_ceiling);
        const std::vector<Candidate> cands =
            sorted_candidates(body, std::move(raw));
        std::vector<Candidate> picks = greedy_independent(cands, dim);
        if (picks.size() == dim) {
            MinimaResult result;
            result.candidates_seen = cands.size();
            for (Candidate& pick : picks) {
                result.lambdas.push_back(std::move(pick.g));
                result.witnesses.push_back(std::move(pick.x));
            }
            return result;
        }
        radius *= 2;
    }
}

}  // namespace pgnlab
