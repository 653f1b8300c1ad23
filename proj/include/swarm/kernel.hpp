#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace swarm {

// Radii below this are evaluated at the floor by GeneralKernel.
inline constexpr double kMinPairDistance = 1e-9;

/// f(y) = -y (a - b exp(-|y|^2 / c)). Linear attraction with a Gaussian
/// repulsion term; repulsive inside the equilibrium distance and attractive
/// outside it.
class GaussianKernel {
public:
    /// Throws InvalidInputError unless a, b, c are finite and positive.
    /// b <= a is accepted here; equilibrium_distance() rejects it.
    GaussianKernel(double a, double b, double c);

    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    double c() const noexcept { return c_; }

    /// Scalar g with f(y) = -y * g, as a function of |y|^2.
    double gain_sq(double dist_sq) const noexcept {
        return a_ - b_ * std::exp(-dist_sq / c_);
    }

private:
    double a_;
    double b_;
    double c_;
};

using RadialMap = std::function<double(double)>;

/// f(y) = -y [fa(|y|) - fr(|y|)] with declared constants a and b. The
/// bounded-repulsion class requires fa == a and fr(r) * r <= b; use
/// validate_bounded_repulsion() to check a particular instance.
class GeneralKernel {
public:
    GeneralKernel(std::string name, RadialMap attraction, RadialMap repulsion,
                  double a, double b);

    const std::string& name() const noexcept { return name_; }
    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    double attraction(double r) const { return fa_(r); }
    double repulsion(double r) const { return fr_(r); }

private:
    std::string name_;
    RadialMap fa_;
    RadialMap fr_;
    double a_;
    double b_;
};

using InteractionKernel = std::variant<GaussianKernel, GeneralKernel>;

// Clamp counter filled by kernel evaluation. Not shared between threads.
struct KernelDiagnostics {
    std::uint64_t clamped_evaluations = 0;
};

/// Evaluates f(y). Throws InvalidInputError on non-finite y and
/// SingularityError when a general kernel's repulsion is unbounded at the
/// (clamped) evaluation radius.
std::vector<double> eval_kernel(const InteractionKernel& kernel,
                                std::span<const double> y,
                                KernelDiagnostics* diag = nullptr);

/// Scalar g(r) with f(y) = -y g(|y|). Same clamping rules as eval_kernel.
double radial_gain(const InteractionKernel& kernel, double r,
                   KernelDiagnostics* diag = nullptr);

/// sqrt(c ln(b/a)); throws NoEquilibriumError when b <= a.
double equilibrium_distance(const GaussianKernel& kernel);

struct RepulsionPeak {
    double distance;
    double magnitude;
};

/// Argmax and max of r exp(-r^2/c): (sqrt(c/2), sqrt(c/2) e^{-1/2}).
RepulsionPeak repulsion_peak(const GaussianKernel& kernel);

struct BoundedRepulsionReport {
    bool attraction_constant = true;  // fa(r) == a on the grid
    bool repulsion_bounded = true;    // fr(r) * r <= b + tol on the grid
    double max_attraction_deviation = 0.0;
    double max_repulsion_moment = 0.0;  // max of fr(r) * r
    double argmax_repulsion_moment = 0.0;

    bool ok() const noexcept { return attraction_constant && repulsion_bounded; }
};

/// Samples r on a log grid over [1e-6, 1e3] and checks fa == a and
/// fr(r) r <= b + 1e-12.
BoundedRepulsionReport validate_bounded_repulsion(const GeneralKernel& kernel,
                                                  std::size_t samples = 2001);

/// fa = a, fr(r) = b / r. Repulsive force of constant magnitude b.
GeneralKernel linear_attraction_bounded_repulsion(double a, double b);

/// The Gaussian kernel written in (fa, fr) form, declaring
/// b' = b sqrt(c/2) e^{-1/2} as its repulsion bound.
GeneralKernel gaussian_as_general(const GaussianKernel& kernel);

/// Registered general kernels by name. Known names:
/// "linear-attraction-bounded-repulsion" (a, b) and
/// "gaussian-as-general" (a, b, c). Throws ConfigError for unknown names.
GeneralKernel general_kernel_by_name(std::string_view name, double a, double b,
                                     double c);

}  // namespace swarm
