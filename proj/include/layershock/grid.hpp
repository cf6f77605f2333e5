#pragma once

#include <cstddef>
#include <vector>

#include "layershock/medium.hpp"

namespace layershock {

/// Uniform finite-volume grid whose cell edges include every material
/// interface of the medium.
///
/// The thinnest layer receives `cells_per_layer` cells; every other layer must
/// then hold an integer number of cells of the same width.
class Grid {
public:
    Grid(const Medium& medium, double x_lo, double x_hi, int cells_per_layer);

    [[nodiscard]] double x_lo() const noexcept { return x_lo_; }
    [[nodiscard]] double x_hi() const noexcept { return x_hi_; }
    [[nodiscard]] double dx() const noexcept { return dx_; }
    [[nodiscard]] std::size_t size() const noexcept { return material_index_.size(); }
    [[nodiscard]] int cells_per_layer() const noexcept { return cells_per_layer_; }

    [[nodiscard]] double center(std::size_t i) const noexcept {
        return x_lo_ + (static_cast<double>(i) + 0.5) * dx_;
    }
    [[nodiscard]] std::size_t material_index(std::size_t i) const noexcept { return material_index_[i]; }
    [[nodiscard]] const Material& material(std::size_t i) const noexcept {
        return materials_[material_index_[i]];
    }
    [[nodiscard]] const std::vector<Material>& materials() const noexcept { return materials_; }
    [[nodiscard]] const std::vector<std::size_t>& material_indices() const noexcept {
        return material_index_;
    }
    [[nodiscard]] const Medium& medium() const noexcept { return medium_; }

private:
    Medium medium_;
    double x_lo_;
    double x_hi_;
    double dx_;
    int cells_per_layer_;
    std::vector<Material> materials_;
    std::vector<std::size_t> material_index_;
};

/// Cell-averaged strain and velocity at time t.
struct SimState {
    std::vector<double> eps;
    std::vector<double> u;
    double t = 0.0;

    SimState() = default;
    SimState(std::size_t n, double time = 0.0) : eps(n, 0.0), u(n, 0.0), t(time) {}
    [[nodiscard]] std::size_t size() const noexcept { return eps.size(); }
};

/// Cell stresses σ(ε_i) with each cell's own law.
std::vector<double> cell_stress(const SimState& state, const Grid& grid);

/// Throws BlowupError if any field is non-finite or any strain inadmissible.
void check_admissible(const SimState& state, const Grid& grid);

}  // namespace layershock
