#include "layershock/wave_propagation.hpp"

#include <algorithm>
#include <cmath>

#include "layershock/error.hpp"
#include "layershock/riemann.hpp"

namespace layershock {

void SolverConfig::validate() const {
    if (!(cfl_target > 0.0 && cfl_target <= 1.0)) throw ConfigError("cfl_target must lie in (0, 1]");
    if (order != 1 && order != 2) throw ConfigError("order must be 1 or 2");
}

WavePropagation::WavePropagation(const Grid& grid, BoundaryCondition bc, SolverConfig config)
    : grid_(&grid), bc_(std::move(bc)), config_(config) {
    config_.validate();
}

double WavePropagation::prepare(const SimState& state) {
    apply_bc(state, *grid_, bc_, state.t, ext_, 2);
    const std::size_t n = ext_.size();
    sigma_.resize(n);
    z_.resize(n);
    c_.resize(n);
    const auto& mats = grid_->materials();
    double cmax = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Material& m = mats[ext_.material[i]];
        double ds = 0.0;
        m.law.evaluate(ext_.eps[i], sigma_[i], ds);
        z_[i] = std::sqrt(m.rho * ds);
        c_[i] = z_[i] / m.rho;
        if (i >= 2 && i + 2 < n) cmax = std::max(cmax, c_[i]);
    }
    if (!std::isfinite(cmax)) throw BlowupError("non-finite wave speed");
    return cmax;
}

double WavePropagation::cfl_dt(const SimState& state) const {
    double cmax = 0.0;
    for (std::size_t i = 0; i < state.size(); ++i) {
        const Material& m = grid_->material(i);
        cmax = std::max(cmax, m.sound_speed(state.eps[i]));
    }
    if (!(cmax > 0.0)) throw DegenerateError("cfl_dt: maximum wave speed is zero");
    return config_.cfl_target * grid_->dx() / cmax;
}

double WavePropagation::step(SimState& state, double dt_max) {
    const double cmax = prepare(state);
    if (!(cmax > 0.0)) throw DegenerateError("cfl_dt: maximum wave speed is zero");
    const double dt = std::min(config_.cfl_target * grid_->dx() / cmax, dt_max);
    update(state, dt);
    return dt;
}

void WavePropagation::advance(SimState& state, double dt) {
    prepare(state);
    update(state, dt);
}

void WavePropagation::update(SimState& state, double dt) {
    const std::size_t n = ext_.size();
    const std::size_t m = n - 4;
    const double dtdx = dt / grid_->dx();
    const auto& mats = grid_->materials();

    // interface j lies between extended cells j-1 and j
    b1_.assign(n, 0.0);
    b2_.assign(n, 0.0);
    double smax = 0.0;
    for (std::size_t j = 1; j < n; ++j) {
        const double zl = z_[j - 1];
        const double zr = z_[j];
        if (!(zl + zr > 1e-14)) throw DegenerateError("riemann_fwave: vanishing impedance");
        const auto [b1, b2] = fwave_strengths(ext_.u[j - 1], sigma_[j - 1], zl, ext_.u[j], sigma_[j], zr);
        b1_[j] = b1;
        b2_[j] = b2;
        smax = std::max(smax, std::max(c_[j - 1], c_[j]));
    }
    last_cfl_ = smax * dtdx;

    flux_eps_.assign(n, 0.0);
    flux_mom_.assign(n, 0.0);
    if (config_.order == 2) {
        const Limiter lim = config_.limiter;
        for (std::size_t j = 2; j <= m + 2; ++j) {
            // left-going family, upwind neighbour is interface j+1
            {
                const double zl = z_[j - 1];
                const double w0 = b1_[j];
                const double dot_self = w0 * w0 * (1.0 + zl * zl);
                double phi = 0.0;
                if (dot_self >= 1e-28) {
                    const double dot_up = b1_[j + 1] * w0 * (1.0 + z_[j] * zl);
                    phi = limiter_ratio(dot_up, dot_self, lim);
                } else {
                    phi = limiter_value(0.0, lim);
                }
                const double s = c_[j - 1];
                const double coef = -0.5 * (1.0 - dtdx * s) * phi * w0;
                flux_eps_[j] += coef;
                flux_mom_[j] += coef * zl;
            }
            // right-going family, upwind neighbour is interface j-1
            {
                const double zr = z_[j];
                const double w0 = b2_[j];
                const double dot_self = w0 * w0 * (1.0 + zr * zr);
                double phi = 0.0;
                if (dot_self >= 1e-28) {
                    const double dot_up = b2_[j - 1] * w0 * (1.0 + z_[j - 1] * zr);
                    phi = limiter_ratio(dot_up, dot_self, lim);
                } else {
                    phi = limiter_value(0.0, lim);
                }
                const double s = c_[j];
                const double coef = 0.5 * (1.0 - dtdx * s) * phi * w0;
                flux_eps_[j] += coef;
                flux_mom_[j] -= coef * zr;
            }
        }
    }

    for (std::size_t i = 2; i < m + 2; ++i) {
        // A⁺Δq from the left interface (family 2), A⁻Δq from the right one (family 1)
        const double ap_eps = b2_[i];
        const double ap_mom = -b2_[i] * z_[i];
        const double am_eps = b1_[i + 1];
        const double am_mom = b1_[i + 1] * z_[i];
        const double d_eps = ap_eps + am_eps + flux_eps_[i + 1] - flux_eps_[i];
        const double d_mom = ap_mom + am_mom + flux_mom_[i + 1] - flux_mom_[i];
        const std::size_t k = i - 2;
        const Material& mat = mats[ext_.material[i]];
        state.eps[k] -= dtdx * d_eps;
        state.u[k] -= dtdx * d_mom / mat.rho;
        if (!std::isfinite(state.u[k]) || !mat.law.admissible(state.eps[k])) {
            throw BlowupError("wave propagation blow-up in cell " + std::to_string(k) +
                              " at t=" + std::to_string(state.t + dt));
        }
    }
    state.t += dt;
}

double WavePropagation::completeness_defect(const SimState& state) {
    prepare(state);
    double defect = 0.0;
    for (std::size_t j = 1; j < ext_.size(); ++j) {
        const double zl = z_[j - 1];
        const double zr = z_[j];
        const auto [b1, b2] = fwave_strengths(ext_.u[j - 1], sigma_[j - 1], zl, ext_.u[j], sigma_[j], zr);
        const double d1 = -(ext_.u[j] - ext_.u[j - 1]);
        const double d2 = -(sigma_[j] - sigma_[j - 1]);
        const double e = std::max(std::abs(b1 + b2 - d1), std::abs(b1 * zl - b2 * zr - d2));
        defect = std::max(defect, e / (1.0 + std::max(std::abs(d1), std::abs(d2))));
    }
    return defect;
}

double cfl_dt(const SimState& state, const Grid& grid, const SolverConfig& config) {
    return WavePropagation(grid, Periodic{}, config).cfl_dt(state);
}

SimState step(const SimState& state, const Grid& grid, const BoundaryCondition& bc,
              const SolverConfig& config) {
    SimState out = state;
    WavePropagation(grid, bc, config).step(out);
    return out;
}

}  // namespace layershock
