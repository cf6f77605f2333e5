#pragma once

#include <array>

#include "layershock/stress_law.hpp"

namespace layershock {

/// Point state (strain, velocity).
struct PointState {
    double eps = 0.0;
    double u = 0.0;
};

using Vec2 = std::array<double, 2>;  // (strain, momentum) components

struct Fwave {
    Vec2 z{0.0, 0.0};
    double speed = 0.0;
};

/// f-wave decomposition at one interface. waves[0] is the left-going family
/// (speed −c_l), waves[1] the right-going family (speed +c_r).
struct FluctuationSet {
    std::array<Fwave, 2> waves;
    Vec2 amdq{0.0, 0.0};
    Vec2 apdq{0.0, 0.0};
    Vec2 flux_difference{0.0, 0.0};
};

/// Splits δ = f(q_r; mat_r) − f(q_l; mat_l), f = (−u, −σ(ε)), into
/// β₁(1, Z_l) + β₂(1, −Z_r) with impedances evaluated on each side.
/// Throws DomainError for inadmissible strains and DegenerateError when
/// Z_l + Z_r ≤ 1e−14.
FluctuationSet riemann_fwave(const PointState& q_l, const PointState& q_r, const Material& mat_l,
                             const Material& mat_r);

/// Kernel shared by the solvers: splits the flux difference given the
/// precomputed stresses and impedances. Returns (β₁, β₂).
inline std::array<double, 2> fwave_strengths(double u_l, double sigma_l, double z_l, double u_r,
                                             double sigma_r, double z_r) noexcept {
    const double d1 = -(u_r - u_l);
    const double d2 = -(sigma_r - sigma_l);
    const double inv = 1.0 / (z_l + z_r);
    return {(z_r * d1 + d2) * inv, (z_l * d1 - d2) * inv};
}

}  // namespace layershock
