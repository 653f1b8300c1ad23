#include <doctest.h>

#include <cmath>
#include <sstream>

#include "oracles/oracles.hpp"
#include "support.hpp"
#include "swarm/coupling.hpp"
#include "swarm/errors.hpp"

using namespace swarm;

TEST_CASE("validate_coupling") {
    SUBCASE("circulant is balanced and irreducible") {
        const auto w = CouplingMatrix::from_rows({{0, 2, 1}, {1, 0, 2}, {2, 1, 0}});
        const auto v = validate_coupling(w);
        CHECK(v.zero_diagonal);
        CHECK(v.balanced);
        CHECK(v.irreducible);
        CHECK(v.max_balance_residual == 0.0);
        CHECK(v.ok());
    }
    SUBCASE("one-way edge is not balanced") {
        const auto v = validate_coupling(CouplingMatrix::from_rows({{0, 1}, {0, 0}}));
        CHECK_FALSE(v.balanced);
        CHECK(v.max_balance_residual == 1.0);
        CHECK(v.irreducible);
    }
    SUBCASE("two disconnected 2-cycles are balanced but reducible") {
        const auto w =
            CouplingMatrix::from_rows({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 2}, {0, 0, 2, 0}});
        const auto v = validate_coupling(w);
        CHECK(v.balanced);
        CHECK_FALSE(v.irreducible);
    }
    SUBCASE("nonzero diagonal is reported") {
        const auto v = validate_coupling(CouplingMatrix::from_rows({{1, 1}, {1, 0}}));
        CHECK_FALSE(v.zero_diagonal);
    }
}

TEST_CASE("coupling matrix rejects negative and non-square input") {
    CHECK_THROWS_AS(CouplingMatrix::from_rows({{0, -1}, {1, 0}}), InvalidInputError);
    CHECK_THROWS_AS(CouplingMatrix::from_rows({{0, 1, 2}, {1, 0}}), InvalidInputError);
    CHECK_THROWS_AS(CouplingMatrix(2, {0.0, 1.0, 1.0}), InvalidInputError);
}

TEST_CASE("generate_balanced") {
    SUBCASE("N = 3, dense") {
        const auto w = generate_balanced(3, 1.0, 1.0, 7);
        CHECK(validate_coupling(w).ok());
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                if (i != j) CHECK(w(i, j) > 0.0);
    }
    SUBCASE("N = 2 is forced symmetric") {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const auto w = generate_balanced(2, 0.3 + 0.035 * seed, 2.0, seed);
            CHECK(w(0, 0) == 0.0);
            CHECK(w(1, 1) == 0.0);
            CHECK(w(0, 1) > 0.0);
            CHECK(w(0, 1) == w(1, 0));
        }
    }
    SUBCASE("N = 10, density 0.5") {
        const auto w = generate_balanced(10, 0.5, 1.0, 42);
        const auto v = validate_coupling(w);
        CHECK(v.ok());
        CHECK(v.max_balance_residual <= 1e-12);
        std::size_t nonzero = 0;
        for (double x : w.data()) nonzero += x > 0.0;
        CHECK(nonzero >= 45);
        CHECK_FALSE(w.is_symmetric());
    }
    SUBCASE("same seed, same matrix") {
        CHECK(generate_balanced(12, 0.4, 1.5, 99) == generate_balanced(12, 0.4, 1.5, 99));
        CHECK_FALSE(generate_balanced(12, 0.4, 1.5, 99) == generate_balanced(12, 0.4, 1.5, 100));
    }
    SUBCASE("bad arguments") {
        CHECK_THROWS_AS(generate_balanced(1, 0.5, 1.0, 1), InvalidInputError);
        CHECK_THROWS_AS(generate_balanced(5, 0.0, 1.0, 1), InvalidInputError);
        CHECK_THROWS_AS(generate_balanced(5, 1.5, 1.0, 1), InvalidInputError);
        CHECK_THROWS_AS(generate_balanced(5, 0.5, 0.0, 1), InvalidInputError);
    }
    SUBCASE("weights stay within the per-cycle scale") {
        const auto w = generate_balanced(6, 0.3, 0.25, 3);
        for (double x : w.data()) CHECK(x >= 0.0);
        CHECK(total_weight(w) > 0.0);
    }
}

TEST_CASE("laplacian entries") {
    const auto pair = laplacian(testing::complete_unit(3));
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(pair.laplacian(i, j) == (i == j ? 2.0 : -1.0));
            CHECK(pair.symmetric(i, j) == 2.0 * pair.laplacian(i, j));
        }
    }
    const auto ev = pair.eigenvalues();
    CHECK(std::abs(ev[0]) < 1e-12);
    CHECK(ev[1] == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(ev[2] == doctest::Approx(6.0).epsilon(1e-12));

    const auto oracle_ev = oracle::jacobi_eigenvalues(
        std::vector<double>(pair.symmetric_data().begin(), pair.symmetric_data().end()), 3);
    CHECK(oracle_ev[1] == doctest::Approx(6.0).epsilon(1e-12));
}

TEST_CASE("laplacian preconditions") {
    CHECK_THROWS_AS(laplacian(CouplingMatrix::from_rows({{0, 1}, {0, 0}})), PreconditionError);
    CHECK_THROWS_AS(laplacian(CouplingMatrix::from_rows({{1, 1}, {1, 0}})), PreconditionError);
}

TEST_CASE("lambda2") {
    SUBCASE("complete unit graphs give 2N") {
        for (std::size_t n : {3u, 5u, 10u}) {
            CHECK(lambda2(laplacian(testing::complete_unit(n))) ==
                  doctest::Approx(2.0 * n).epsilon(1e-12));
        }
    }
    SUBCASE("single symmetric edge") {
        const auto pair = laplacian(CouplingMatrix::from_rows({{0, 1}, {1, 0}}));
        CHECK(pair.symmetric(0, 0) == 2.0);
        CHECK(pair.symmetric(0, 1) == -2.0);
        CHECK(lambda2(pair) == doctest::Approx(4.0).epsilon(1e-14));
    }
    SUBCASE("disconnected components are degenerate") {
        const auto w =
            CouplingMatrix::from_rows({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 2}, {0, 0, 2, 0}});
        CHECK_THROWS_AS(lambda2(laplacian(w)), DegenerateSpectrumError);
    }
}

TEST_CASE("total_weight") {
    CHECK(total_weight(testing::complete_unit(10)) == 90.0);
    CHECK(total_weight(CouplingMatrix::from_rows({{0, 3, 0}, {3, 0, 0}, {0, 0, 0}})) == 6.0);
    CHECK(total_weight(CouplingMatrix::from_rows({{0, 2, 1}, {1, 0, 2}, {2, 1, 0}})) == 9.0);
}

TEST_CASE("spectral properties of generated couplings") {
    Rng rng(77);
    for (int t = 0; t < 40; ++t) {
        const auto w = testing::random_balanced(rng, 2, 16);
        const std::size_t n = w.size();
        const auto pair = laplacian(w);

        // Lsym 1 = 0
        for (std::size_t i = 0; i < n; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < n; ++j) s += pair.symmetric(i, j);
            CHECK(std::abs(s) <= 1e-12);
        }

        // Simple zero eigenvalue; library spectrum agrees with Jacobi oracle.
        const auto ev = pair.eigenvalues();
        const auto ref = oracle::jacobi_eigenvalues(
            std::vector<double>(pair.symmetric_data().begin(), pair.symmetric_data().end()), n);
        const double scale = std::max(1.0, ev.back());
        CHECK(std::abs(ev[0]) <= 1e-12 * scale);
        const double l2 = lambda2(pair);
        CHECK(l2 > 0.0);
        CHECK(l2 == doctest::Approx(ref[1]).epsilon(1e-10));
        for (std::size_t k = 1; k < n; ++k) CHECK(ev[k] > 1e-10 * scale);

        // Rayleigh quotient on the complement of 1 never drops below lambda2.
        const std::size_t dim = 1 + rng.below(3);
        std::vector<double> e(n * dim);
        for (int s = 0; s < 1000; ++s) {
            for (double& v : e) v = rng.uniform(-1.0, 1.0);
            for (std::size_t k = 0; k < dim; ++k) {
                double mean = 0.0;
                for (std::size_t i = 0; i < n; ++i) mean += e[i * dim + k];
                mean /= static_cast<double>(n);
                for (std::size_t i = 0; i < n; ++i) e[i * dim + k] -= mean;
            }
            double e2 = 0.0;
            for (double v : e) e2 += v * v;
            const double q = pair.quadratic_form(e, dim);
            if (!(q >= l2 * e2 * (1.0 - 1e-12))) {
                FAIL("Rayleigh quotient below lambda2: q=" << q << " l2*|e|^2=" << l2 * e2);
            }
        }
    }
}

TEST_CASE("quadratic form matches an explicit Kronecker product") {
    const auto w = generate_balanced(5, 0.6, 1.0, 8);
    const auto pair = laplacian(w);
    const std::size_t n = 5, dim = 3;
    Rng rng(3);
    std::vector<double> e(n * dim);
    for (double& v : e) v = rng.uniform(-2.0, 2.0);
    double explicit_q = 0.0;
    for (std::size_t r = 0; r < n * dim; ++r)
        for (std::size_t c = 0; c < n * dim; ++c)
            if (r % dim == c % dim) explicit_q += e[r] * pair.symmetric(r / dim, c / dim) * e[c];
    CHECK(pair.quadratic_form(e, dim) == doctest::Approx(explicit_q).epsilon(1e-12));
    CHECK_THROWS_AS(pair.quadratic_form(e, 2), InvalidInputError);
}

TEST_CASE("coupling text format") {
    std::istringstream in("# circulant\n0 2 1\n1 0 2  # row two\n\n2 1 0\n");
    const auto w = read_coupling(in);
    CHECK(w == CouplingMatrix::from_rows({{0, 2, 1}, {1, 0, 2}, {2, 1, 0}}));

    const auto g = generate_balanced(7, 0.5, 1.0, 5);
    std::stringstream buf;
    write_coupling(buf, g);
    CHECK(read_coupling(buf) == g);

    std::istringstream ragged("0 1\n1 0 0\n");
    CHECK_THROWS_AS(read_coupling(ragged), ConfigError);
    std::istringstream junk("0 x\n1 0\n");
    CHECK_THROWS_AS(read_coupling(junk), ConfigError);
    std::istringstream empty("# nothing\n");
    CHECK_THROWS_AS(read_coupling(empty), ConfigError);
}
