#include "layershock/method_of_lines.hpp"

#include <algorithm>
#include <cmath>

#include "layershock/error.hpp"
#include "layershock/weno.hpp"

namespace layershock {

namespace {

constexpr std::size_t kGhosts = 3;

// Edge values for cells [first, last); kept free of calls so that the loop
// vectorizes.
void reconstruct_range(const double* __restrict v, std::size_t first, std::size_t last, Reconstruction rec,
                       double* __restrict left, double* __restrict right) {
    if (rec == Reconstruction::PiecewiseConstant) {
        for (std::size_t i = first; i < last; ++i) left[i] = right[i] = v[i];
        return;
    }
    for (std::size_t i = first; i < last; ++i) {
        double l = 0.0;
        double r = 0.0;
        weno5_edges(v[i - 2], v[i - 1], v[i], v[i + 1], v[i + 2], l, r);
        left[i] = l;
        right[i] = r;
    }
}

// Redoes cells whose window spans a material change so that no stencil
// reaches across an interface, where strain is discontinuous.
void confine_to_material(const double* v, const std::size_t* cls, std::size_t first, std::size_t last,
                         double* left, double* right) {
    for (std::size_t i = first; i < last; ++i) {
        const std::size_t c = cls[i];
        if (cls[i - 2] == c && cls[i - 1] == c && cls[i + 1] == c && cls[i + 2] == c) continue;
        const bool use[3] = {cls[i - 2] == c && cls[i - 1] == c, cls[i - 1] == c && cls[i + 1] == c,
                             cls[i + 1] == c && cls[i + 2] == c};
        weno5_edges_masked(v[i - 2], v[i - 1], v[i], v[i + 1], v[i + 2], use, left[i], right[i]);
    }
}

// Index of the first material equal to each material.
std::vector<std::size_t> material_classes(const std::vector<Material>& mats) {
    std::vector<std::size_t> cls(mats.size());
    for (std::size_t k = 0; k < mats.size(); ++k) {
        cls[k] = k;
        for (std::size_t j = 0; j < k; ++j) {
            if (mats[j] == mats[k]) {
                cls[k] = cls[j];
                break;
            }
        }
    }
    return cls;
}

}  // namespace

void HighOrderConfig::validate() const {
    if (!(cfl > 0.0 && cfl <= 1.0)) throw ConfigError("high-order cfl must lie in (0, 1]");
}

MethodOfLines::MethodOfLines(const Grid& grid, BoundaryCondition bc, HighOrderConfig config)
    : grid_(&grid), bc_(std::move(bc)), config_(config) {
    config_.validate();
    material_class_ = material_classes(grid.materials());
    rhs_fn_ = [this](const SimState& s, SimState& ds) { rhs(s, ds); };
}

void MethodOfLines::rhs(const SimState& state, SimState& dstate) {
    apply_bc(state, *grid_, bc_, state.t, ext_, kGhosts);
    const std::size_t n = ext_.size();
    const std::size_t m = n - 2 * kGhosts;
    const auto& mats = grid_->materials();
    const double inv_dx = 1.0 / grid_->dx();

    eps_l_.resize(n);
    eps_r_.resize(n);
    u_l_.resize(n);
    u_r_.resize(n);
    sig_l_.resize(n);
    sig_r_.resize(n);
    z_l_.resize(n);
    z_r_.resize(n);

    // cells 2 .. m+3 cover the physical cells and one neighbour on each side
    reconstruct_range(ext_.u.data(), 2, m + 4, config_.reconstruction, u_l_.data(), u_r_.data());
    reconstruct_range(ext_.eps.data(), 2, m + 4, config_.reconstruction, eps_l_.data(), eps_r_.data());
    if (config_.reconstruction == Reconstruction::Weno5) {
        cls_.resize(n);
        for (std::size_t i = 0; i < n; ++i) cls_[i] = material_class_[ext_.material[i]];
        confine_to_material(ext_.eps.data(), cls_.data(), 2, m + 4, eps_l_.data(), eps_r_.data());
    }
    for (std::size_t i = 2; i < m + 4; ++i) {
        const Material& mat = mats[ext_.material[i]];
        if (!mat.law.admissible(eps_l_[i]) || !mat.law.admissible(eps_r_[i])) {
            eps_l_[i] = eps_r_[i] = ext_.eps[i];
        }
        double ds = 0.0;
        mat.law.evaluate(eps_l_[i], sig_l_[i], ds);
        z_l_[i] = std::sqrt(mat.rho * ds);
        mat.law.evaluate(eps_r_[i], sig_r_[i], ds);
        z_r_[i] = std::sqrt(mat.rho * ds);
    }

    dstate.eps.resize(m);
    dstate.u.resize(m);
    dstate.t = state.t;

    // β of the interface to the left of cell i (between i−1 and i)
    auto strengths = [&](std::size_t i) {
        const double zl = z_r_[i - 1];
        const double zr = z_l_[i];
        if (!(zl + zr > 1e-14)) throw DegenerateError("riemann_fwave: vanishing impedance");
        return fwave_strengths(u_r_[i - 1], sig_r_[i - 1], zl, u_l_[i], sig_l_[i], zr);
    };

    auto left = strengths(kGhosts);
    for (std::size_t i = kGhosts; i < m + kGhosts; ++i) {
        const auto right = strengths(i + 1);
        // A⁺Δq at the left edge: family 2 with the cell's left-edge impedance
        const double ap_eps = left[1];
        const double ap_mom = -left[1] * z_l_[i];
        // A⁻Δq at the right edge: family 1 with the cell's right-edge impedance
        const double am_eps = right[0];
        const double am_mom = right[0] * z_r_[i];
        // flux difference across the cell interior
        const double in_eps = -(u_r_[i] - u_l_[i]);
        const double in_mom = -(sig_r_[i] - sig_l_[i]);
        const Material& mat = mats[ext_.material[i]];
        dstate.eps[i - kGhosts] = -inv_dx * (ap_eps + am_eps + in_eps);
        dstate.u[i - kGhosts] = -inv_dx * (ap_mom + am_mom + in_mom) / mat.rho;
        left = right;
    }
}

double MethodOfLines::stable_dt(const SimState& state) const {
    double cmax = 0.0;
    for (std::size_t i = 0; i < state.size(); ++i) {
        double s = 0.0;
        double ds = 0.0;
        const Material& mat = grid_->material(i);
        mat.law.evaluate(state.eps[i], s, ds);
        cmax = std::max(cmax, std::sqrt(ds / mat.rho));
    }
    if (!(cmax > 0.0) || !std::isfinite(cmax)) throw DegenerateError("stable_dt: invalid maximum wave speed");
    const double ssp = config_.method == RungeKutta::Ssp104 ? 6.0 : 1.0;
    return config_.cfl * ssp * grid_->dx() / cmax;
}

double MethodOfLines::step(SimState& state, double dt_max) {
    const double dt = std::min(stable_dt(state), dt_max);
    advance(state, dt);
    return dt;
}

void MethodOfLines::advance(SimState& state, double dt) {
    ssprk4_advance(state, rhs_fn_, dt, config_.method, work_);
    check_admissible(state, *grid_);
}

std::vector<ReconstructionPair> reconstruct(const SimState& state, const Grid& grid, const BoundaryCondition& bc,
                                            Reconstruction reconstruction) {
    const ExtendedState ext = apply_bc(state, grid, bc, state.t, kGhosts);
    const std::size_t n = ext.size();
    std::vector<double> el(n), er(n), ul(n), ur(n);
    reconstruct_range(ext.u.data(), kGhosts, n - kGhosts, reconstruction, ul.data(), ur.data());
    reconstruct_range(ext.eps.data(), kGhosts, n - kGhosts, reconstruction, el.data(), er.data());
    if (reconstruction == Reconstruction::Weno5) {
        const auto classes = material_classes(grid.materials());
        std::vector<std::size_t> cls(n);
        for (std::size_t i = 0; i < n; ++i) cls[i] = classes[ext.material[i]];
        confine_to_material(ext.eps.data(), cls.data(), kGhosts, n - kGhosts, el.data(), er.data());
    }
    std::vector<ReconstructionPair> out(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const std::size_t i = k + kGhosts;
        out[k].left = {el[i], ul[i]};
        out[k].right = {er[i], ur[i]};
    }
    return out;
}

SimState mol_rhs(const SimState& state, const Grid& grid, const BoundaryCondition& bc,
                 Reconstruction reconstruction) {
    HighOrderConfig config;
    config.reconstruction = reconstruction;
    MethodOfLines mol(grid, bc, config);
    SimState out;
    mol.rhs(state, out);
    return out;
}

}  // namespace layershock
