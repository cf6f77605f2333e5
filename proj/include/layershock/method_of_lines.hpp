#pragma once

#include <limits>
#include <vector>

#include "layershock/boundary.hpp"
#include "layershock/grid.hpp"
#include "layershock/riemann.hpp"
#include "layershock/runge_kutta.hpp"

namespace layershock {

/// Weno5 reconstructs u across interfaces but keeps every strain stencil
/// inside one material, since strain jumps where the material changes.
enum class Reconstruction { Weno5, PiecewiseConstant };

struct HighOrderConfig {
    double cfl = 0.4;  // Courant number per forward-Euler stage
    RungeKutta method = RungeKutta::Ssp104;
    Reconstruction reconstruction = Reconstruction::Weno5;

    void validate() const;
};

/// Interface values reconstructed from one cell: left edge (i−½)⁺ and right
/// edge (i+½)⁻.
struct ReconstructionPair {
    PointState left;
    PointState right;
};

/// Semi-discrete wave-propagation scheme: componentwise reconstruction of
/// (ε, u), f-wave Riemann solves at every interface plus the flux difference
/// inside each cell.
class MethodOfLines {
public:
    MethodOfLines(const Grid& grid, BoundaryCondition bc, HighOrderConfig config = {});
    MethodOfLines(const MethodOfLines&) = delete;
    MethodOfLines& operator=(const MethodOfLines&) = delete;

    /// Time derivative of (ε, u); the boundary data is taken at state.t.
    void rhs(const SimState& state, SimState& dstate);

    /// cfl · C_ssp · dx / max c (C_ssp = 1 for the classical method).
    [[nodiscard]] double stable_dt(const SimState& state) const;

    double step(SimState& state, double dt_max = std::numeric_limits<double>::infinity());
    void advance(SimState& state, double dt);

    [[nodiscard]] const Grid& grid() const noexcept { return *grid_; }
    [[nodiscard]] const BoundaryCondition& boundary() const noexcept { return bc_; }
    [[nodiscard]] const HighOrderConfig& config() const noexcept { return config_; }

private:
    const Grid* grid_;
    BoundaryCondition bc_;
    HighOrderConfig config_;
    Rhs rhs_fn_;
    RKWorkspace work_;

    ExtendedState ext_;
    std::vector<double> eps_l_, eps_r_, u_l_, u_r_, sig_l_, sig_r_, z_l_, z_r_;
    std::vector<std::size_t> material_class_, cls_;
};

/// Per-cell edge values of the physical cells.
std::vector<ReconstructionPair> reconstruct(const SimState& state, const Grid& grid, const BoundaryCondition& bc,
                                            Reconstruction reconstruction = Reconstruction::Weno5);

/// Right-hand side for a single state (allocating convenience form).
SimState mol_rhs(const SimState& state, const Grid& grid, const BoundaryCondition& bc,
                 Reconstruction reconstruction = Reconstruction::Weno5);

}  // namespace layershock
