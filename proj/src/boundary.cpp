#include "layershock/boundary.hpp"

#include <cmath>
#include <numbers>

#include "layershock/error.hpp"

namespace layershock {

void apply_bc(const SimState& state, const Grid& grid, const BoundaryCondition& bc, double t,
              ExtendedState& out, std::size_t ghosts) {
    const std::size_t m = grid.size();
    if (state.size() != m) throw DomainError("state size does not match grid");
    if (ghosts > m) throw DomainError("grid too small for requested ghost cells");
    const std::size_t n = m + 2 * ghosts;
    out.ghosts = ghosts;
    out.eps.resize(n);
    out.u.resize(n);
    out.material.resize(n);
    const auto& mat = grid.material_indices();
    for (std::size_t i = 0; i < m; ++i) {
        out.eps[i + ghosts] = state.eps[i];
        out.u[i + ghosts] = state.u[i];
        out.material[i + ghosts] = mat[i];
    }

    auto copy_cell = [&](std::size_t ghost, std::size_t src) {
        out.eps[ghost] = state.eps[src];
        out.u[ghost] = state.u[src];
        out.material[ghost] = mat[src];
    };

    if (std::holds_alternative<Periodic>(bc)) {
        for (std::size_t g = 0; g < ghosts; ++g) {
            copy_cell(g, m - ghosts + g);
            copy_cell(m + ghosts + g, g);
        }
        return;
    }

    // right edge: extrapolation for both MovingWall and Extrapolation
    for (std::size_t g = 0; g < ghosts; ++g) copy_cell(m + ghosts + g, m - 1);

    if (const auto* wall = std::get_if<MovingWall>(&bc)) {
        const double uw = wall->wall_velocity ? wall->wall_velocity(t) : 0.0;
        for (std::size_t g = 0; g < ghosts; ++g) {
            // ghost ghosts-1-g mirrors interior cell g
            const std::size_t dst = ghosts - 1 - g;
            copy_cell(dst, g);
            out.u[dst] = 2.0 * uw - state.u[g];
        }
    } else {
        for (std::size_t g = 0; g < ghosts; ++g) copy_cell(g, 0);
    }
}

ExtendedState apply_bc(const SimState& state, const Grid& grid, const BoundaryCondition& bc, double t,
                       std::size_t ghosts) {
    ExtendedState out;
    apply_bc(state, grid, bc, t, out, ghosts);
    return out;
}

double boundary_power(const SimState& state, const Grid& grid, const BoundaryCondition& bc, double t) {
    if (std::holds_alternative<Periodic>(bc)) return 0.0;
    const std::size_t m = grid.size();
    const double sigma_left = grid.material(0).law.stress(state.eps[0]);
    const double sigma_right = grid.material(m - 1).law.stress(state.eps[m - 1]);
    double u_left = state.u[0];
    if (const auto* wall = std::get_if<MovingWall>(&bc)) {
        u_left = wall->wall_velocity ? wall->wall_velocity(t) : 0.0;
    }
    return sigma_right * state.u[m - 1] - sigma_left * u_left;
}

double ly_wall_velocity(double t) {
    if (t < 0.0 || t > 20.0) return 0.0;
    return -0.1 * (1.0 + std::cos(std::numbers::pi * (t - 10.0) / 10.0));
}

}  // namespace layershock
