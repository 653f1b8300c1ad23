#pragma once

#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "swarm/coupling.hpp"
#include "swarm/integrator.hpp"
#include "swarm/kernel.hpp"

namespace swarm {

// Relative slack on rho^2 when testing membership of the bounded region.
inline constexpr double kContainmentSlack = 1e-9;

enum class BoundKind { gaussian, bounded_repulsion };

std::string_view bound_kind_name(BoundKind k) noexcept;

/// Radius of the region {sum_i |x_i - x bar|^2 <= rho^2} that every
/// trajectory eventually enters and stays in.
struct CohesionBound {
    BoundKind kind = BoundKind::gaussian;
    double rho = 0.0;
    // V level above which V' < 0; Gaussian kernel only. rho^2 = 2 threshold_v.
    std::optional<double> threshold_v;
    double lambda2 = 0.0;
    double total_weight = 0.0;

    friend bool operator==(const CohesionBound&, const CohesionBound&) = default;
};

/// rho = 2 b M sqrt(2c) e^{-1/2} / (a lambda2) and
/// threshold_v = (2 b M sqrt(c) e^{-1/2} / (a lambda2))^2.
/// Throws PreconditionError unless W is valid (zero diagonal, balanced,
/// irreducible) and b > a.
CohesionBound gaussian_cohesion_bound(const GaussianKernel& kernel, const CouplingMatrix& w);

/// rho* = 4 b M / (a lambda2) for kernels with fa == a and fr(r) r <= b.
/// Throws PreconditionError if the kernel fails validate_bounded_repulsion
/// or W is invalid.
CohesionBound bounded_repulsion_cohesion_bound(const GeneralKernel& kernel,
                                               const CouplingMatrix& w);

struct Containment {
    double rho = 0.0;
    double t_hold = 0.0;
    // Earliest sample time after which every recorded sample is inside.
    std::optional<double> entry_time;
    bool contained = false;
    double max_dispersion_after_entry = 0.0;

    double max_dispersion_ratio() const noexcept {
        return max_dispersion_after_entry / (rho * rho);
    }

    friend bool operator==(const Containment&, const Containment&) = default;
};

/// contained == some entry time exists with t_end - entry_time >= t_hold.
Containment containment_check(const Trajectory& traj, double rho, double t_hold);

struct BoundReport {
    CohesionBound bound;
    Containment containment;

    friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

/// "key: value" lines, full round-trip precision.
void write_bound_report(std::ostream& out, const BoundReport& report);

struct CenterDrift {
    std::vector<double> displacement;  // x bar(t_end) - x bar(t_0)
    double net_displacement = 0.0;
    double path_length = 0.0;
    std::vector<double> speeds;  // between consecutive samples
    // Accumulated signed heading change of the center path (2-D only).
    std::optional<double> total_turning;
};

CenterDrift center_drift_summary(const Trajectory& traj);

}  // namespace swarm
