#include "swarm/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

#include "swarm/errors.hpp"
#include "swarm/format.hpp"

namespace swarm {

namespace {

void require_valid(const CouplingMatrix& w) {
    const auto v = validate_coupling(w);
    if (!v.zero_diagonal) throw PreconditionError("cohesion bound: W must have a zero diagonal");
    if (!v.balanced) throw PreconditionError("cohesion bound: W is not balanced");
    if (!v.irreducible) throw PreconditionError("cohesion bound: W + W^T is reducible");
}

}  // namespace

std::string_view bound_kind_name(BoundKind k) noexcept {
    return k == BoundKind::bounded_repulsion ? "bounded-repulsion" : "gaussian";
}

CohesionBound gaussian_cohesion_bound(const GaussianKernel& kernel, const CouplingMatrix& w) {
    if (!(kernel.b() > kernel.a())) throw PreconditionError("cohesion bound needs b > a");
    require_valid(w);
    CohesionBound out;
    out.kind = BoundKind::gaussian;
    out.lambda2 = lambda2(laplacian(w));
    out.total_weight = total_weight(w);
    const double scale = 2.0 * kernel.b() * out.total_weight * std::exp(-0.5) /
                         (kernel.a() * out.lambda2);
    out.rho = scale * std::sqrt(2.0 * kernel.c());
    const double root_v = scale * std::sqrt(kernel.c());
    out.threshold_v = root_v * root_v;
    return out;
}

CohesionBound bounded_repulsion_cohesion_bound(const GeneralKernel& kernel,
                                               const CouplingMatrix& w) {
    const auto check = validate_bounded_repulsion(kernel);
    if (!check.attraction_constant) {
        throw PreconditionError("kernel '" + kernel.name() + "': fa is not the constant a");
    }
    if (!check.repulsion_bounded) {
        throw PreconditionError("kernel '" + kernel.name() + "': fr(r) r exceeds b");
    }
    require_valid(w);
    CohesionBound out;
    out.kind = BoundKind::bounded_repulsion;
    out.lambda2 = lambda2(laplacian(w));
    out.total_weight = total_weight(w);
    out.rho = 4.0 * kernel.b() * out.total_weight / (kernel.a() * out.lambda2);
    return out;
}

Containment containment_check(const Trajectory& traj, double rho, double t_hold) {
    Containment c;
    c.rho = rho;
    c.t_hold = t_hold;
    if (traj.empty()) return c;

    const auto disp = traj.dispersions();
    const auto times = traj.times();
    const double limit = rho * rho * (1.0 + kContainmentSlack);

    std::size_t entry = disp.size();
    while (entry > 0 && disp[entry - 1] <= limit) --entry;
    if (entry == disp.size()) return c;

    c.entry_time = times[entry];
    c.max_dispersion_after_entry = *std::max_element(disp.begin() + entry, disp.end());
    const double t_end = times.back();
    c.contained = t_end - *c.entry_time >= t_hold - 1e-9 * std::max(1.0, std::abs(t_end));
    return c;
}

void write_bound_report(std::ostream& out, const BoundReport& r) {
    const auto& b = r.bound;
    const auto& c = r.containment;
    out << "bound_kind: " << bound_kind_name(b.kind) << '\n'
        << "lambda2: " << fmt_double(b.lambda2) << '\n'
        << "total_weight: " << fmt_double(b.total_weight) << '\n'
        << "rho: " << fmt_double(b.rho) << '\n'
        << "rho_sq: " << fmt_double(b.rho * b.rho) << '\n'
        << "threshold_v: " << (b.threshold_v ? fmt_double(*b.threshold_v) : "n/a") << '\n'
        << "t_hold: " << fmt_double(c.t_hold) << '\n'
        << "entry_time: " << (c.entry_time ? fmt_double(*c.entry_time) : "none") << '\n'
        << "contained: " << (c.contained ? "true" : "false") << '\n'
        << "max_dispersion_after_entry: " << fmt_double(c.max_dispersion_after_entry) << '\n'
        << "max_dispersion_ratio: " << fmt_double(c.max_dispersion_ratio()) << '\n';
}

CenterDrift center_drift_summary(const Trajectory& traj) {
    CenterDrift d;
    const std::size_t dim = traj.dim();
    d.displacement.assign(dim, 0.0);
    if (traj.empty()) return d;

    const auto first = traj.center(0);
    const auto last = traj.center(traj.size() - 1);
    double net = 0.0;
    for (std::size_t k = 0; k < dim; ++k) {
        d.displacement[k] = last[k] - first[k];
        net += d.displacement[k] * d.displacement[k];
    }
    d.net_displacement = std::sqrt(net);

    const auto times = traj.times();
    double turning = 0.0;
    std::optional<double> prev_heading;
    for (std::size_t s = 1; s < traj.size(); ++s) {
        const auto p = traj.center(s - 1);
        const auto q = traj.center(s);
        double step = 0.0;
        for (std::size_t k = 0; k < dim; ++k) step += (q[k] - p[k]) * (q[k] - p[k]);
        step = std::sqrt(step);
        d.path_length += step;
        d.speeds.push_back(step / (times[s] - times[s - 1]));

        if (dim == 2 && step > 0.0) {
            const double heading = std::atan2(q[1] - p[1], q[0] - p[0]);
            if (prev_heading) {
                double dh = heading - *prev_heading;
                while (dh > std::numbers::pi) dh -= 2.0 * std::numbers::pi;
                while (dh < -std::numbers::pi) dh += 2.0 * std::numbers::pi;
                turning += dh;
            }
            prev_heading = heading;
        }
    }
    if (dim == 2) d.total_turning = turning;
    return d;
}

}  // namespace swarm
