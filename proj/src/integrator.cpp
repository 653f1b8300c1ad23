#include "swarm/integrator.hpp"

#include <cmath>
#include <string>

#include "swarm/errors.hpp"

namespace swarm {

namespace {

// Reusable buffers for one fixed-step scheme.
class Stepper {
public:
    Stepper(Method method, std::size_t size)
        : method_(method), k1_(size), k2_(size), k3_(size), k4_(size), tmp_(size) {}

    template <class F>
    void step(F&& f, std::span<double> y, double dt) {
        const std::size_t n = y.size();
        f(std::span<const double>(y), std::span<double>(k1_));
        if (method_ == Method::euler) {
            for (std::size_t i = 0; i < n; ++i) y[i] += dt * k1_[i];
            return;
        }
        const double half = 0.5 * dt;
        for (std::size_t i = 0; i < n; ++i) tmp_[i] = y[i] + half * k1_[i];
        f(std::span<const double>(tmp_), std::span<double>(k2_));
        for (std::size_t i = 0; i < n; ++i) tmp_[i] = y[i] + half * k2_[i];
        f(std::span<const double>(tmp_), std::span<double>(k3_));
        for (std::size_t i = 0; i < n; ++i) tmp_[i] = y[i] + dt * k3_[i];
        f(std::span<const double>(tmp_), std::span<double>(k4_));
        const double sixth = dt / 6.0;
        for (std::size_t i = 0; i < n; ++i)
            y[i] += sixth * (k1_[i] + 2.0 * k2_[i] + 2.0 * k3_[i] + k4_[i]);
    }

private:
    Method method_;
    std::vector<double> k1_, k2_, k3_, k4_, tmp_;
};

bool within_bounds(std::span<const double> y) {
    for (double v : y)
        if (!(std::abs(v) <= kDivergenceBound)) return false;
    return true;
}

}  // namespace

std::string_view method_name(Method m) noexcept {
    return m == Method::euler ? "euler" : "rk4";
}

Method parse_method(std::string_view name) {
    if (name == "rk4") return Method::rk4;
    if (name == "euler") return Method::euler;
    throw ConfigError("unknown integration method '" + std::string(name) + "'");
}

void IntegrationConfig::validate() const {
    if (!(std::isfinite(dt) && dt > 0.0)) throw InvalidInputError("dt must be positive");
    if (!(std::isfinite(t_end) && t_end >= dt)) throw InvalidInputError("t_end must be >= dt");
    if (record_stride < 1) throw InvalidInputError("record_stride must be >= 1");
}

std::size_t IntegrationConfig::steps() const {
    return static_cast<std::size_t>(std::llround(t_end / dt));
}

void Trajectory::record(double time, const AgentMatrix& positions) {
    if (positions.agents() != agents_ || positions.dim() != dim_) {
        throw InvalidInputError("trajectory sample has the wrong shape");
    }
    if (!times_.empty() && !(time > times_.back())) {
        throw InvalidInputError("trajectory times must be strictly increasing");
    }
    const auto cs = center_state(positions);
    times_.push_back(time);
    states_.push_back(positions);
    centers_.push_back(cs.center);
    dispersion_.push_back(cs.dispersion);
    lyapunov_.push_back(0.5 * cs.dispersion);
    if (coincident_pairs(positions) > 0) ++coincidence_samples;
}

Trajectory integrate(const SwarmState& initial, const CouplingMatrix& w,
                     const InteractionKernel& kernel, const IntegrationConfig& config,
                     Backend backend) {
    config.validate();
    if (initial.agents() != w.size()) {
        throw InvalidInputError("initial state and W disagree on the number of agents");
    }
    if (!initial.positions.all_finite()) throw InvalidInputError("initial state is not finite");

    const std::size_t dim = initial.dim();
    const ForceField field(w, kernel, backend);
    KernelDiagnostics diag;
    auto f = [&](std::span<const double> y, std::span<double> dydt) {
        field.velocities(y, dim, dydt, &diag);
    };

    Trajectory traj(initial.agents(), dim);
    AgentMatrix x = initial.positions;
    traj.record(initial.time, x);

    Stepper stepper(config.method, x.data().size());
    const std::size_t steps = config.steps();
    for (std::size_t k = 1; k <= steps; ++k) {
        stepper.step(f, x.data(), config.dt);
        const double t = initial.time + static_cast<double>(k) * config.dt;
        if (!within_bounds(x.data())) {
            throw DivergenceError("state diverged at t = " + std::to_string(t), t);
        }
        if (k % config.record_stride == 0 || k == steps) traj.record(t, x);
    }
    traj.clamped_evaluations = diag.clamped_evaluations;
    return traj;
}

std::vector<double> solve_fixed(const OdeProblem& problem, Method method, double dt,
                                std::size_t steps) {
    std::vector<double> y = problem.initial;
    Stepper stepper(method, y.size());
    for (std::size_t k = 0; k < steps; ++k) stepper.step(problem.rhs, std::span<double>(y), dt);
    return y;
}

OrderEstimate convergence_order_check(const OdeProblem& problem, Method method,
                                      std::span<const double> dt_list) {
    if (dt_list.size() != 3) throw InvalidInputError("order check needs exactly three step sizes");
    const double ratio = dt_list[0] / dt_list[1];
    if (!(ratio > 1.0) || std::abs(dt_list[1] / dt_list[2] - ratio) > 1e-12 * ratio) {
        throw InvalidInputError("step sizes must decrease with a common ratio");
    }
    std::vector<std::vector<double>> sols;
    for (double dt : dt_list) {
        const auto steps = static_cast<std::size_t>(std::llround(problem.t_end / dt));
        sols.push_back(solve_fixed(problem, method, dt, steps));
    }
    auto dist = [](const std::vector<double>& u, const std::vector<double>& v) {
        double s = 0.0;
        for (std::size_t i = 0; i < u.size(); ++i) s += (u[i] - v[i]) * (u[i] - v[i]);
        return std::sqrt(s);
    };
    OrderEstimate est;
    est.differences = {dist(sols[0], sols[1]), dist(sols[1], sols[2])};
    est.order = std::log(est.differences[0] / est.differences[1]) / std::log(ratio);
    return est;
}

}  // namespace swarm
