#include "layershock/riemann.hpp"

#include <cmath>

#include "layershock/error.hpp"

namespace layershock {

FluctuationSet riemann_fwave(const PointState& q_l, const PointState& q_r, const Material& mat_l,
                             const Material& mat_r) {
    const double sigma_l = mat_l.law.stress(q_l.eps);
    const double sigma_r = mat_r.law.stress(q_r.eps);
    const double z_l = std::sqrt(mat_l.rho * mat_l.law.modulus(q_l.eps));
    const double z_r = std::sqrt(mat_r.rho * mat_r.law.modulus(q_r.eps));
    if (!(z_l + z_r > 1e-14)) throw DegenerateError("riemann_fwave: vanishing impedance");

    const auto [b1, b2] = fwave_strengths(q_l.u, sigma_l, z_l, q_r.u, sigma_r, z_r);

    FluctuationSet out;
    out.flux_difference = {-(q_r.u - q_l.u), -(sigma_r - sigma_l)};
    out.waves[0].z = {b1, b1 * z_l};
    out.waves[0].speed = -z_l / mat_l.rho;
    out.waves[1].z = {b2, -b2 * z_r};
    out.waves[1].speed = z_r / mat_r.rho;
    out.amdq = out.waves[0].z;
    out.apdq = out.waves[1].z;
    return out;
}

}  // namespace layershock
