#include "layershock/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "layershock/error.hpp"

namespace layershock {

namespace {

bool near_integer(double v) { return std::abs(v - std::round(v)) <= 1e-9 * std::max(1.0, std::abs(v)); }

}  // namespace

Grid::Grid(const Medium& medium, double x_lo, double x_hi, int cells_per_layer)
    : medium_(medium), x_lo_(x_lo), x_hi_(x_hi), dx_(0.0), cells_per_layer_(cells_per_layer) {
    if (!(x_hi > x_lo)) throw DomainError("grid requires x_hi > x_lo");
    if (cells_per_layer < 1) throw DomainError("cells_per_layer must be positive");

    double thinnest = 1.0;
    for (const auto& l : medium.layers()) thinnest = std::min(thinnest, l.width_fraction);
    dx_ = thinnest * medium.period() / cells_per_layer;

    for (const auto& l : medium.layers()) {
        if (!near_integer(l.width_fraction * medium.period() / dx_)) {
            throw DomainError("layer widths are not integer multiples of the cell width");
        }
    }
    const double cells = (x_hi - x_lo) / dx_;
    if (!near_integer(cells) || !near_integer(x_lo / dx_)) {
        throw DomainError("domain bounds do not align with the layer-aligned cell edges");
    }
    const auto m = static_cast<std::size_t>(std::llround(cells));
    // recompute so that x_lo + m·dx reproduces x_hi exactly up to rounding
    dx_ = (x_hi - x_lo) / static_cast<double>(m);

    materials_.reserve(medium.size());
    for (const auto& l : medium.layers()) materials_.push_back(l.material);
    material_index_.resize(m);
    for (std::size_t i = 0; i < m; ++i) material_index_[i] = medium.layer_at(center(i));
}

std::vector<double> cell_stress(const SimState& state, const Grid& grid) {
    std::vector<double> out(state.size());
    for (std::size_t i = 0; i < state.size(); ++i) out[i] = grid.material(i).law.stress(state.eps[i]);
    return out;
}

void check_admissible(const SimState& state, const Grid& grid) {
    if (state.eps.size() != grid.size() || state.u.size() != grid.size()) {
        throw DomainError("state size does not match grid");
    }
    for (std::size_t i = 0; i < state.size(); ++i) {
        if (!std::isfinite(state.u[i]) || !grid.material(i).law.admissible(state.eps[i])) {
            throw BlowupError("inadmissible or non-finite state in cell " + std::to_string(i) +
                              " at t=" + std::to_string(state.t));
        }
    }
}

}  // namespace layershock
