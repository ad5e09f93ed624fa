#include <doctest.h>

#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pgnlab/minima.hpp"

using namespace pgnlab;

namespace {

// Exact rank of the witness list, used to certify independence.
int rational_rank(const std::vector<IntVector>& vectors) {
    std::vector<std::vector<Rational>> rows;
    for (const IntVector& v : vectors) {
        std::vector<Rational> row;
        for (const Integer& e : v) row.emplace_back(e);
        rows.push_back(std::move(row));
    }
    int rank = 0;
    std::size_t col = 0;
    const std::size_t dim = rows.empty() ? 0 : rows.front().size();
    for (std::size_t r = 0; r < rows.size() && col < dim; ++col) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[r]);
        for (std::size_t other = r + 1; other < rows.size(); ++other) {
            if (rows[other][col] == 0) continue;
            const Rational factor = rows[other][col] / rows[r][col];
            for (std::size_t k = col; k < dim; ++k) {
                rows[other][k] -= factor * rows[r][k];
            }
        }
        ++r;
        ++rank;
    }
    return rank;
}

void check_result_shape(const GaugeBody& body, const MinimaResult& result) {
    const std::size_t dim = static_cast<std::size_t>(body.dimension());
    REQUIRE(result.lambdas.size() == dim);
    REQUIRE(result.witnesses.size() == dim);
    for (std::size_t j = 0; j < dim; ++j) {
        CHECK(body.gauge(result.witnesses[j]) == result.lambdas[j]);
        if (j > 0) CHECK(result.lambdas[j - 1] <= result.lambdas[j]);
    }
    for (std::size_t j = 1; j <= dim; ++j) {
        std::vector<IntVector> prefix(result.witnesses.begin(),
                                      result.witnesses.begin() +
                                          static_cast<long>(j));
        CHECK(rational_rank(prefix) == static_cast<int>(j));
    }
    CHECK(result.candidates_seen > 0);
}

struct EnvGuard {
    std::string name;
    std::optional<std::string> saved;

    explicit EnvGuard(std::string name_) : name(std::move(name_)) {
        if (const char* old = std::getenv(name.c_str())) saved = old;
    }
    ~EnvGuard() {
        if (saved) {
            setenv(name.c_str(), saved->c_str(), 1);
        } else {
            unsetenv(name.c_str());
        }
    }
};

}  // namespace

TEST_SUITE("minima") {

TEST_CASE("mixed-denominator slab body with unique witnesses") {
    TargetPoint xi({Rational(1), Rational(1, 2), Rational(1, 3)});
    GaugeBody body = GaugeBody::make_c(xi, Rational(6));
    MinimaResult result = successive_minima(body);
    check_result_shape(body, result);
    CHECK(result.lambdas[0].squared() == 2);
    CHECK(result.lambdas[1].squared() == 3);
    CHECK(result.lambdas[2].squared() == 4);
    CHECK(result.witnesses[0] == IntVector{Integer(0), Integer(1), Integer(-1)});
    CHECK(result.witnesses[1] == IntVector{Integer(1), Integer(-1), Integer(-1)});
    CHECK(result.witnesses[2] == IntVector{Integer(0), Integer(0), Integer(1)});
}

TEST_CASE("axis target point and the lexicographic tie break") {
    TargetPoint xi({Rational(1), Rational(0), Rational(0)});
    GaugeBody body = GaugeBody::make_c(xi, Rational(6));
    MinimaResult result = successive_minima(body);
    check_result_shape(body, result);
    CHECK(result.lambdas[0] == GaugeValue::linear(Rational(1)));
    CHECK(result.lambdas[1] == GaugeValue::linear(Rational(1)));
    CHECK(result.lambdas[2] == GaugeValue::linear(Rational(6)));
    CHECK(result.witnesses[0] == IntVector{Integer(0), Integer(0), Integer(1)});
    CHECK(result.witnesses[1] == IntVector{Integer(0), Integer(1), Integer(0)});
    // every x_0 = 1 vector with |x|^2 <= 35 ties at gauge 6; the smallest in
    // lexicographic order wins
    CHECK(result.witnesses[2] == IntVector{Integer(1), Integer(-5), Integer(-3)});
}

TEST_CASE("height-normalized family at an axis point") {
    TargetPoint xi({Rational(1), Rational(0), Rational(0), Rational(0)});
    GaugeBody body = GaugeBody::make_k(xi, Rational(8), Rational(2));
    MinimaResult result = successive_minima(body);
    check_result_shape(body, result);
    CHECK(result.lambdas[0] == GaugeValue::linear(Rational(1, 8)));
    CHECK(result.lambdas[1] == GaugeValue::linear(Rational(2)));
    CHECK(result.lambdas[2] == GaugeValue::linear(Rational(2)));
    CHECK(result.lambdas[3] == GaugeValue::linear(Rational(2)));
    CHECK(result.witnesses[0] ==
          IntVector{Integer(1), Integer(0), Integer(0), Integer(0)});
}

TEST_CASE("dual family at an axis point") {
    TargetPoint xi({Rational(1), Rational(0), Rational(0)});
    GaugeBody body = GaugeBody::make_kstar(xi, Rational(4), Rational(2));
    MinimaResult result = successive_minima(body);
    check_result_shape(body, result);
    CHECK(result.lambdas[0].squared() == Rational(1, 4));
    CHECK(result.lambdas[1].squared() == Rational(1, 4));
    CHECK(result.lambdas[2] == GaugeValue::linear(Rational(4)));
}

TEST_CASE("cube with skew lattice at an axis point") {
    TargetPoint xi({Rational(1), Rational(0), Rational(0)});
    GaugeBody body = GaugeBody::make_cube_lattice(xi, Rational(4), Rational(2));
    MinimaResult result = successive_minima(body);
    check_result_shape(body, result);
    CHECK(result.lambdas[0] == GaugeValue::linear(Rational(1, 4)));
    CHECK(result.lambdas[1] == GaugeValue::linear(Rational(2)));
    CHECK(result.lambdas[2] == GaugeValue::linear(Rational(2)));
}

TEST_CASE("agreement with the exhaustive box oracle") {
    TargetPoint thirds({Rational(1), Rational(1, 2), Rational(1, 3)});
    TargetPoint skew({Rational(1), Rational(2, 3), Rational(-1, 5)});
    TargetPoint four({Rational(1), Rational(1, 2), Rational(1, 3), Rational(1, 5)});

    std::vector<GaugeBody> bodies;
    bodies.push_back(GaugeBody::make_c(thirds, Rational(1)));
    bodies.push_back(GaugeBody::make_c(thirds, Rational(6)));
    bodies.push_back(GaugeBody::make_c(skew, Rational(10)));
    bodies.push_back(GaugeBody::make_c(four, Rational(3)));
    bodies.push_back(GaugeBody::make_k(thirds, Rational(9), Rational(3)));
    bodies.push_back(GaugeBody::make_k(skew, Rational(49, 4), Rational(7, 2)));
    bodies.push_back(GaugeBody::make_kstar(thirds, Rational(4), Rational(2)));
    bodies.push_back(GaugeBody::make_kstar(skew, Rational(9), Rational(3)));
    bodies.push_back(
        GaugeBody::make_cube_lattice(thirds, Rational(4), Rational(2)));
    bodies.push_back(
        GaugeBody::make_cube_lattice(skew, Rational(9), Rational(3)));

    for (std::size_t b = 0; b < bodies.size(); ++b) {
        CAPTURE(b);
        const GaugeBody& body = bodies[b];
        MinimaResult result = successive_minima(body);
        check_result_shape(body, result);
        const std::vector<Rational> expected =
            testing::box_oracle_minima_squared(body);
        REQUIRE(expected.size() == result.lambdas.size());
        for (std::size_t j = 0; j < expected.size(); ++j) {
            CHECK(result.lambdas[j].squared() == expected[j]);
        }
    }
}

TEST_CASE("dilation divides every minimum") {
    TargetPoint xi({Rational(1), Rational(1, 2), Rational(1, 3)});
    GaugeBody body = GaugeBody::make_c(xi, Rational(6));
    MinimaResult plain = successive_minima(body);
    MinimaResult scaled = successive_minima(body.dilated(Rational(3, 2)));
    for (std::size_t j = 0; j < plain.lambdas.size(); ++j) {
        CHECK(scaled.lambdas[j].squared() ==
              plain.lambdas[j].squared() / Rational(9, 4));
    }
}

TEST_CASE("two runs produce identical output") {
    TargetPoint xi({Rational(1), Rational(2, 3), Rational(-1, 5)});
    GaugeBody body = GaugeBody::make_c(xi, Rational(10));
    MinimaResult first = successive_minima(body);
    MinimaResult second = successive_minima(body);
    CHECK(first.witnesses == second.witnesses);
    for (std::size_t j = 0; j < first.lambdas.size(); ++j) {
        CHECK(first.lambdas[j] == second.lambdas[j]);
    }
}

TEST_CASE("candidate ceiling aborts the search") {
    TargetPoint xi({Rational(1), Rational(1, 2), Rational(1, 3)});
    GaugeBody body = GaugeBody::make_c(xi, Rational(6));
    MinimaOptions options;
    options.candidate_ceiling = 1;
    CHECK_THROWS_AS(successive_minima(body, options), ResourceLimitError);
}

TEST_CASE("environment variable controls the default ceiling") {
    EnvGuard guard("PGNLAB_CANDIDATE_CEILING");

    unsetenv("PGNLAB_CANDIDATE_CEILING");
    CHECK(MinimaOptions::from_environment().candidate_ceiling ==
          default_candidate_ceiling);

    setenv("PGNLAB_CANDIDATE_CEILING", "12345", 1);
    CHECK(MinimaOptions::from_environment().candidate_ceiling == 12345);

    setenv("PGNLAB_CANDIDATE_CEILING", "0", 1);
    CHECK_THROWS_AS(MinimaOptions::from_environment(), std::invalid_argument);
    setenv("PGNLAB_CANDIDATE_CEILING", "-5", 1);
    CHECK_THROWS_AS(MinimaOptions::from_environment(), std::invalid_argument);
    setenv("PGNLAB_CANDIDATE_CEILING", "many", 1);
    CHECK_THROWS_AS(MinimaOptions::from_environment(), std::invalid_argument);
    setenv("PGNLAB_CANDIDATE_CEILING", "12x", 1);
    CHECK_THROWS_AS(MinimaOptions::from_environment(), std::invalid_argument);
}

}  // TEST_SUITE
