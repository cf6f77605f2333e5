#pragma once

#include <limits>
#include <vector>

#include "layershock/boundary.hpp"
#include "layershock/grid.hpp"
#include "layershock/limiter.hpp"

namespace layershock {

struct SolverConfig {
    double cfl_target = 0.9;
    Limiter limiter = Limiter::VanLeer;
    int order = 2;  // 1: Godunov fluctuations only, 2: limited correction fluxes

    void validate() const;
};

/// Explicit f-wave propagation scheme for (ε, ρu) on a layer-aligned grid.
///
/// Owns its scratch buffers, so repeated stepping does not allocate. One
/// instance must not be shared between threads.
class WavePropagation {
public:
    WavePropagation(const Grid& grid, BoundaryCondition bc, SolverConfig config = {});

    /// cfl_target · dx / max_i c(ε_i).
    [[nodiscard]] double cfl_dt(const SimState& state) const;

    /// Advances by min(cfl_dt, dt_max) and returns the step taken.
    double step(SimState& state, double dt_max = std::numeric_limits<double>::infinity());

    /// Advances by exactly dt (caller is responsible for stability).
    void advance(SimState& state, double dt);

    /// Largest |s|·dt/dx over all waves of the last step.
    [[nodiscard]] double last_cfl() const noexcept { return last_cfl_; }
    /// Largest ‖Z₁+Z₂−δ‖∞ / (1+‖δ‖∞) over the interfaces of `state`,
    /// ghost interfaces included.
    double completeness_defect(const SimState& state);

    [[nodiscard]] const Grid& grid() const noexcept { return *grid_; }
    [[nodiscard]] const BoundaryCondition& boundary() const noexcept { return bc_; }
    [[nodiscard]] const SolverConfig& config() const noexcept { return config_; }

private:
    double prepare(const SimState& state);  // returns max physical sound speed
    void update(SimState& state, double dt);

    const Grid* grid_;
    BoundaryCondition bc_;
    SolverConfig config_;

    ExtendedState ext_;
    std::vector<double> sigma_, z_, c_, b1_, b2_, flux_eps_, flux_mom_;
    double last_cfl_ = 0.0;
};

/// Stable step for the given state (see WavePropagation::cfl_dt).
double cfl_dt(const SimState& state, const Grid& grid, const SolverConfig& config);

/// One stable step, returning the advanced state.
SimState step(const SimState& state, const Grid& grid, const BoundaryCondition& bc,
              const SolverConfig& config);

}  // namespace layershock
