#include "swarm/kernel.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#include "swarm/errors.hpp"

namespace swarm {

namespace {

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

double norm_sq(std::span<const double> y) {
    double s = 0.0;
    for (double v : y) s += v * v;
    return s;
}

double general_gain(const GeneralKernel& k, double r, KernelDiagnostics* diag) {
    double r_eval = r;
    if (r < kMinPairDistance) {
        r_eval = kMinPairDistance;
        if (diag) ++diag->clamped_evaluations;
    }
    const double fa = k.attraction(r_eval);
    const double fr = k.repulsion(r_eval);
    if (!std::isfinite(fr) || !std::isfinite(fr * r_eval)) {
        throw SingularityError("kernel '" + k.name() +
                               "': repulsion is unbounded at r = " +
                               std::to_string(r_eval));
    }
    if (!std::isfinite(fa)) {
        throw SingularityError("kernel '" + k.name() +
                               "': attraction is not finite at r = " +
                               std::to_string(r_eval));
    }
    return fa - fr;
}

}  // namespace

GaussianKernel::GaussianKernel(double a, double b, double c) : a_(a), b_(b), c_(c) {
    if (!positive_finite(a) || !positive_finite(b) || !positive_finite(c)) {
        throw InvalidInputError("gaussian kernel requires finite a, b, c > 0");
    }
}

GeneralKernel::GeneralKernel(std::string name, RadialMap attraction,
                             RadialMap repulsion, double a, double b)
    : name_(std::move(name)),
      fa_(std::move(attraction)),
      fr_(std::move(repulsion)),
      a_(a),
      b_(b) {
    if (!fa_ || !fr_) throw InvalidInputError("general kernel needs both fa and fr");
    if (!positive_finite(a) || !positive_finite(b)) {
        throw InvalidInputError("general kernel requires finite a, b > 0");
    }
}

double radial_gain(const InteractionKernel& kernel, double r, KernelDiagnostics* diag) {
    if (!std::isfinite(r) || r < 0.0) throw InvalidInputError("radius must be finite and >= 0");
    if (const auto* g = std::get_if<GaussianKernel>(&kernel)) return g->gain_sq(r * r);
    return general_gain(std::get<GeneralKernel>(kernel), r, diag);
}

std::vector<double> eval_kernel(const InteractionKernel& kernel, std::span<const double> y,
                                KernelDiagnostics* diag) {
    for (double v : y) {
        if (!std::isfinite(v)) throw InvalidInputError("kernel argument is not finite");
    }
    const double r_sq = norm_sq(y);
    double gain = 0.0;
    if (const auto* g = std::get_if<GaussianKernel>(&kernel)) {
        gain = g->gain_sq(r_sq);
    } else {
        gain = general_gain(std::get<GeneralKernel>(kernel), std::sqrt(r_sq), diag);
    }
    std::vector<double> out(y.size());
    std::transform(y.begin(), y.end(), out.begin(), [gain](double v) { return -v * gain; });
    return out;
}

double equilibrium_distance(const GaussianKernel& kernel) {
    if (!(kernel.b() > kernel.a())) {
        throw NoEquilibriumError("equilibrium distance needs b > a");
    }
    return std::sqrt(kernel.c() * std::log(kernel.b() / kernel.a()));
}

RepulsionPeak repulsion_peak(const GaussianKernel& kernel) {
    const double r = std::sqrt(kernel.c() / 2.0);
    return {r, r * std::exp(-0.5)};
}

BoundedRepulsionReport validate_bounded_repulsion(const GeneralKernel& kernel,
                                                  std::size_t samples) {
    constexpr double kLogLo = -6.0;
    constexpr double kLogHi = 3.0;
    constexpr double kTol = 1e-12;
    samples = std::max<std::size_t>(samples, 2);

    BoundedRepulsionReport rep;
    for (std::size_t k = 0; k < samples; ++k) {
        const double t = static_cast<double>(k) / static_cast<double>(samples - 1);
        const double r = std::pow(10.0, kLogLo + t * (kLogHi - kLogLo));
        const double fa = kernel.attraction(r);
        const double moment = kernel.repulsion(r) * r;

        const double dev = std::isfinite(fa) ? std::abs(fa - kernel.a())
                                             : std::numeric_limits<double>::infinity();
        rep.max_attraction_deviation = std::max(rep.max_attraction_deviation, dev);
        if (!(dev == 0.0)) rep.attraction_constant = false;

        if (!std::isfinite(moment) || moment > rep.max_repulsion_moment) {
            rep.max_repulsion_moment = moment;
            rep.argmax_repulsion_moment = r;
        }
        if (!(moment <= kernel.b() + kTol)) rep.repulsion_bounded = false;
    }
    return rep;
}

GeneralKernel linear_attraction_bounded_repulsion(double a, double b) {
    return GeneralKernel(
        "linear-attraction-bounded-repulsion", [a](double) { return a; },
        [b](double r) { return b / r; }, a, b);
}

GeneralKernel gaussian_as_general(const GaussianKernel& kernel) {
    const double a = kernel.a();
    const double b = kernel.b();
    const double c = kernel.c();
    return GeneralKernel(
        "gaussian-as-general", [a](double) { return a; },
        [b, c](double r) { return b * std::exp(-r * r / c); }, a,
        b * repulsion_peak(kernel).magnitude);
}

GeneralKernel general_kernel_by_name(std::string_view name, double a, double b, double c) {
    if (name == "linear-attraction-bounded-repulsion") {
        return linear_attraction_bounded_repulsion(a, b);
    }
    if (name == "gaussian-as-general") return gaussian_as_general(GaussianKernel(a, b, c));
    throw ConfigError("unknown general kernel '" + std::string(name) + "'");
}

}  // namespace swarm
