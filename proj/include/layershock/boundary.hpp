#pragma once

#include <functional>
#include <variant>
#include <vector>

#include "layershock/grid.hpp"

namespace layershock {

struct Periodic {};

/// Piston at the left edge moving with prescribed velocity; the right edge
/// uses zero-order extrapolation.
struct MovingWall {
    std::function<double(double)> wall_velocity;
};

struct Extrapolation {};

using BoundaryCondition = std::variant<Periodic, MovingWall, Extrapolation>;

/// Cell data padded with ghost cells on both sides. Index g corresponds to
/// physical cell g − ghosts.
struct ExtendedState {
    std::size_t ghosts = 2;
    std::vector<double> eps;
    std::vector<double> u;
    std::vector<std::size_t> material;  // index into Grid::materials()

    [[nodiscard]] std::size_t size() const noexcept { return eps.size(); }
};

/// Fills `out` (resized as needed) with the state plus `ghosts` cells per side.
void apply_bc(const SimState& state, const Grid& grid, const BoundaryCondition& bc, double t,
              ExtendedState& out, std::size_t ghosts = 2);

ExtendedState apply_bc(const SimState& state, const Grid& grid, const BoundaryCondition& bc, double t,
                       std::size_t ghosts = 2);

/// Power delivered through the domain edges, (σu)_right − (σu)_left, using
/// edge values averaged from the boundary cell and its first ghost.
double boundary_power(const SimState& state, const Grid& grid, const BoundaryCondition& bc, double t);

/// Wall speed of the left piston in the LY pulse problem:
/// −0.1(1 + cos(π(t−10)/10)) on [0, 20], zero afterwards.
double ly_wall_velocity(double t);

}  // namespace layershock
