#pragma once

#include <optional>
#include <string>
#include <variant>

#include "layershock/boundary.hpp"
#include "layershock/grid.hpp"
#include "layershock/medium.hpp"
#include "layershock/simulation.hpp"

namespace layershock {

/// σ(x) = amplitude·exp(−((x−center)/width)²), u = 0.
struct GaussianPulse {
    double amplitude = 0.2;
    double width = 5.0;
    double center = 50.0;
};

/// Medium at rest; motion comes from the boundary.
struct RestState {};

/// (σ, u) blend from (sigma_l, u_l) to (sigma_r, 0) by a raised-cosine ramp
/// of the given width centred on x_mid.
struct SmoothTransition {
    double sigma_l = 0.0;
    double sigma_r = 0.0;
    double u_l = 0.0;
    double x_mid = 30.0;
    double width = 2.0;
};

/// (σ_l, u_l) for x ≤ x_jump, rest state beyond.
struct StressJump {
    double sigma_l = 0.0;
    double u_l = 0.0;
    double x_jump = 30.0;
};

/// Strain ε₀ and velocity u₀ for x < x0, rest state beyond.
struct StrainJump {
    double eps0 = 0.0;
    double u0 = 0.0;
    double x0 = 0.0;
};

using InitialCondition = std::variant<GaussianPulse, RestState, SmoothTransition, StressJump, StrainJump>;

/// Evolution that precedes the main phase: run for `duration` under `bc`,
/// then optionally negate the velocity.
struct Prelude {
    BoundaryCondition bc;
    double duration = 0.0;
    bool reverse_after = false;
};

struct Scenario {
    std::string name;
    Medium medium = Medium::homogeneous(Material{});
    double x_lo = 0.0;
    double x_hi = 100.0;
    int cells_per_layer = 24;
    InitialCondition initial;
    BoundaryCondition bc = Periodic{};
    std::optional<Prelude> prelude;
    double t_initial = 0.0;  // time of the initial data
    double t_end = 0.0;
    double snapshot_interval = 0.0;

    /// Time at which the main phase starts (after any prelude).
    [[nodiscard]] double t_start() const noexcept { return t_initial + (prelude ? prelude->duration : 0.0); }

    /// Layer-aligned grid; throws DomainError on misalignment or a periodic
    /// domain that is not a whole number of periods.
    [[nodiscard]] Grid make_grid() const;
    /// Cell averages of the initial data at t_initial, checked for admissibility.
    [[nodiscard]] SimState initial_state(const Grid& grid) const;
};

/// Two-layer medium with ρ_A = K_A = 1 and ρ_B = K_B = impedance_b
/// (exponential laws). impedance_b = 1 gives a homogeneous medium that still
/// has two layers per period.
Medium ly_medium(double impedance_b);

/// Gaussian stress pulse at rest on the periodic domain [0, 100].
Scenario gaussian_pulse_scenario(const Medium& medium, double amplitude = 0.2, double width = 5.0,
                                 double center = 50.0);

/// LY problem: piston-driven pulse on [0, 200] entering a medium at rest,
/// switched to periodic boundaries at t = 40.
Scenario ly_stegoton_scenario(double impedance_b, int cells_per_layer = 24);

/// Smooth transition between two uniform states on [0, 250] with outflow
/// boundaries. The left velocity follows the effective Rankine–Hugoniot
/// relation. Runs to t = 200 by default (reversal at t = 100).
Scenario smooth_riemann_scenario(const Medium& medium, double sigma_l, double sigma_r = 0.0,
                                 double transition_width = 2.0);

/// Effective shock jump at x_jump on [0, 250] with outflow boundaries.
Scenario effective_shock_scenario(const Medium& medium, double sigma_l, double x_jump = 30.0);

/// Jump data evolved for time tau and then reversed, so that the main phase
/// (starting at t = 0) re-forms the jump by t = tau. Throws DomainError unless
/// the jump opens into a rarefaction (c(ε₀) < c(0) at x0) that stays inside
/// the layer containing x0 for the whole prelude.
Scenario rarefaction_reversal_scenario(const Medium& medium, double eps0, double tau, double x0 = 20.0,
                                       double x_lo = 0.0, double x_hi = 50.0);

/// Main-phase starting state: initial data with the prelude applied.
SimState prepared_state(const Scenario& scenario, const Grid& grid, const SchemeConfig& scheme);

}  // namespace layershock
