#include <doctest.h>

#include <cmath>

#include "oracles/oracles.hpp"
#include "support.hpp"
#include "swarm/errors.hpp"
#include "swarm/integrator.hpp"

using namespace swarm;

namespace {

double separation(const AgentMatrix& x) {
    double d2 = 0.0;
    for (std::size_t k = 0; k < x.dim(); ++k) d2 += (x(0, k) - x(1, k)) * (x(0, k) - x(1, k));
    return std::sqrt(d2);
}

// Two agents on a line, state (x0, x1), unit symmetric coupling.
OdeProblem two_agent_problem(double r0, double t_end) {
    const GaussianKernel g = testing::standard_kernel();
    OdeProblem p;
    p.initial = {0.0, r0};
    p.t_end = t_end;
    p.rhs = [g](std::span<const double> y, std::span<double> dy) {
        const double d = y[0] - y[1];
        const double f = -d * g.gain_sq(d * d);
        dy[0] = f;
        dy[1] = -f;
    };
    return p;
}

}  // namespace

TEST_CASE("integration config validation") {
    IntegrationConfig c;
    CHECK_NOTHROW(c.validate());
    c.dt = 0.0;
    CHECK_THROWS_AS(c.validate(), InvalidInputError);
    c = {};
    c.t_end = c.dt / 2;
    CHECK_THROWS_AS(c.validate(), InvalidInputError);
    c = {};
    c.record_stride = 0;
    CHECK_THROWS_AS(c.validate(), InvalidInputError);
    CHECK(parse_method("euler") == Method::euler);
    CHECK_THROWS_AS(parse_method("rk45"), ConfigError);
}

TEST_CASE("two agents at the equilibrium distance stay put") {
    const GaussianKernel g = testing::standard_kernel();
    const double delta = equilibrium_distance(g);
    const SwarmState s{AgentMatrix(2, 2, {0.0, 0.0, delta, 0.0}), 0.0};
    const auto traj = integrate(s, CouplingMatrix::from_rows({{0, 1}, {1, 0}}), g, IntegrationConfig{});
    const auto& last = traj.positions(traj.size() - 1);
    for (std::size_t i = 0; i < last.data().size(); ++i)
        CHECK(std::abs(last.data()[i] - s.positions.data()[i]) <= 1e-9);
    CHECK(traj.times().back() == doctest::Approx(30.0));
}

TEST_CASE("single agent trajectory is constant") {
    const SwarmState s{AgentMatrix(1, 2, {1.5, -2.0}), 0.0};
    IntegrationConfig c;
    c.t_end = 1.0;
    const auto traj = integrate(s, CouplingMatrix(1, {0.0}), testing::standard_kernel(), c);
    for (std::size_t k = 0; k < traj.size(); ++k) CHECK(traj.positions(k) == s.positions);
}

TEST_CASE("two agents converge to the equilibrium distance") {
    const GaussianKernel g = testing::standard_kernel();
    const SwarmState s{AgentMatrix(2, 2, {0.0, 0.0, 5.0, 0.0}), 0.0};
    const auto traj = integrate(s, CouplingMatrix::from_rows({{0, 1}, {1, 0}}), g, IntegrationConfig{});
    const double r = separation(traj.positions(traj.size() - 1));
    const double ref = static_cast<double>(oracle::radial_separation(1, 20, 0.2L, 1, 5, 30, 1e-5L));
    CHECK(std::abs(ref - 0.7740455120409899) <= 1e-3);
    CHECK(std::abs(r - 0.7740455120409899) <= 1e-3);
    CHECK(r == doctest::Approx(ref).epsilon(1e-9));
}

TEST_CASE("RK4 and Euler self-convergence orders") {
    const double dts[] = {1e-2, 5e-3, 2.5e-3};
    const auto p = two_agent_problem(2.0, 1.0);
    const auto rk4 = convergence_order_check(p, Method::rk4, dts);
    CHECK(rk4.order >= 3.5);
    CHECK(rk4.order <= 4.5);
    const auto euler = convergence_order_check(p, Method::euler, dts);
    CHECK(euler.order >= 0.8);
    CHECK(euler.order <= 1.2);

    const double bad[] = {1e-2, 5e-3, 1e-3};
    CHECK_THROWS_AS(convergence_order_check(p, Method::rk4, bad), InvalidInputError);
}

TEST_CASE("RK4 step on x' = -x is the degree-4 Taylor polynomial") {
    OdeProblem p;
    p.initial = {1.0};
    p.rhs = [](std::span<const double> y, std::span<double> dy) { dy[0] = -y[0]; };
    for (double h : {0.5, 0.1, 0.01}) {
        const double expect = 1.0 - h + h * h / 2 - h * h * h / 6 + h * h * h * h / 24;
        CHECK(solve_fixed(p, Method::rk4, h, 1)[0] == doctest::Approx(expect).epsilon(1e-15));
        CHECK(solve_fixed(p, Method::euler, h, 1)[0] == doctest::Approx(1.0 - h).epsilon(1e-15));
    }
    // Global error at t = 1 ~ h^4 / 120 * e^-1.
    const double y = solve_fixed(p, Method::rk4, 0.01, 100)[0];
    CHECK(std::abs(y - std::exp(-1.0)) < 1e-10);
}

TEST_CASE("trajectory recording") {
    Rng rng(5);
    const auto w = generate_balanced(6, 0.5, 1.0, 1);
    const auto s = testing::random_state(rng, 6, 2, 5.0);
    IntegrationConfig c;
    c.t_end = 1.0;
    c.dt = 1e-3;
    c.record_stride = 7;
    const auto traj = integrate(s, w, testing::standard_kernel(), c);
    // 0, 7, 14, ..., 994 and the final step 1000.
    CHECK(traj.size() == 1000 / 7 + 2);
    for (std::size_t k = 1; k < traj.size(); ++k) CHECK(traj.times()[k] > traj.times()[k - 1]);
    CHECK(traj.times().back() == doctest::Approx(1.0).epsilon(1e-15));
    for (std::size_t k = 0; k < traj.size(); ++k) {
        const auto cs = center_state(traj.positions(k));
        CHECK(std::abs(cs.dispersion - traj.dispersions()[k]) <= 1e-12);
        CHECK(traj.lyapunov_values()[k] == 0.5 * traj.dispersions()[k]);
    }
    CHECK(traj.coincidence_samples == 0);

    Trajectory t2(1, 1);
    t2.record(1.0, AgentMatrix(1, 1));
    CHECK_THROWS_AS(t2.record(1.0, AgentMatrix(1, 1)), InvalidInputError);
    CHECK_THROWS_AS(t2.record(2.0, AgentMatrix(2, 1)), InvalidInputError);
}

TEST_CASE("integration is deterministic") {
    Rng rng(17);
    const auto w = generate_balanced(10, 0.5, 1.0, 3);
    const auto s = testing::random_state(rng, 10, 2, 5.0);
    IntegrationConfig c;
    c.t_end = 5.0;
    for (Backend be : {Backend::scalar, Backend::avx2}) {
        const auto a = integrate(s, w, testing::standard_kernel(), c, be);
        const auto b = integrate(s, w, testing::standard_kernel(), c, be);
        REQUIRE(a.size() == b.size());
        for (std::size_t k = 0; k < a.size(); ++k) CHECK(a.positions(k) == b.positions(k));
    }
}

TEST_CASE("integration is translation equivariant") {
    Rng rng(19);
    const auto w = generate_balanced(8, 0.5, 1.0, 4);
    const auto s = testing::random_state(rng, 8, 2, 5.0);
    const std::vector<double> shift{3.25, -1.5};
    IntegrationConfig c;
    c.t_end = 10.0;
    const auto a = integrate(s, w, testing::standard_kernel(), c);
    const auto b = integrate({s.positions.translated(shift), 0.0}, w, testing::standard_kernel(), c);
    const auto& xa = a.positions(a.size() - 1);
    const auto& xb = b.positions(b.size() - 1);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t k = 0; k < 2; ++k) CHECK(std::abs(xb(i, k) - xa(i, k) - shift[k]) <= 1e-10);
}

TEST_CASE("symmetric coupling keeps the center fixed over 30 s") {
    Rng rng(23);
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
        const auto w = generate_balanced(10, 0.5, 1.0, seed).symmetrized();
        const auto s = testing::random_state(rng, 10, 2, 5.0);
        const auto traj = integrate(s, w, testing::standard_kernel(), IntegrationConfig{});
        const auto c0 = traj.center(0);
        const auto c1 = traj.center(traj.size() - 1);
        CHECK(std::hypot(c1[0] - c0[0], c1[1] - c0[1]) <= 1e-6);
    }
}

TEST_CASE("divergence is reported with its time") {
    const SwarmState s{AgentMatrix(2, 1, {0.0, 10.0}), 0.0};
    IntegrationConfig c;
    c.method = Method::euler;
    c.dt = 5.0;
    c.t_end = 1000.0;
    try {
        (void)integrate(s, CouplingMatrix::from_rows({{0, 1}, {1, 0}}), testing::standard_kernel(), c);
        FAIL("expected divergence");
    } catch (const DivergenceError& e) {
        CHECK(e.time() > 0.0);
        CHECK(e.time() <= 1000.0);
    }
}

TEST_CASE("coincident agents are flagged, not fatal") {
    const SwarmState s{AgentMatrix(3, 2, {0, 0, 0, 0, 1, 1}), 0.0};
    IntegrationConfig c;
    c.t_end = 0.01;
    const auto traj = integrate(s, testing::complete_unit(3), testing::standard_kernel(), c);
    CHECK(traj.coincidence_samples >= 1);

    const InteractionKernel k = linear_attraction_bounded_repulsion(1.0, 20.0);
    const auto t2 = integrate(s, testing::complete_unit(3), k, c);
    CHECK(t2.clamped_evaluations > 0);
}
