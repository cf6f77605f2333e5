#pragma once

namespace layershock {

inline constexpr double kWenoEpsilon = 1e-6;

/// Fifth-order WENO value at the right edge of cell v2 from the cell averages
/// v0..v4 (Jiang–Shu smoothness indicators, ideal weights 1/10, 6/10, 3/10).
/// Mirror the window to obtain the value at the left edge.
inline double weno5_reconstruct(double v0, double v1, double v2, double v3, double v4) noexcept {
    const double p0 = (2.0 * v0 - 7.0 * v1 + 11.0 * v2) / 6.0;
    const double p1 = (-v1 + 5.0 * v2 + 2.0 * v3) / 6.0;
    const double p2 = (2.0 * v2 + 5.0 * v3 - v4) / 6.0;

    const double a0 = v0 - 2.0 * v1 + v2;
    const double a1 = v0 - 4.0 * v1 + 3.0 * v2;
    const double b0 = (13.0 / 12.0) * a0 * a0 + 0.25 * a1 * a1;
    const double c0 = v1 - 2.0 * v2 + v3;
    const double c1 = v1 - v3;
    const double b1 = (13.0 / 12.0) * c0 * c0 + 0.25 * c1 * c1;
    const double d0 = v2 - 2.0 * v3 + v4;
    const double d1 = 3.0 * v2 - 4.0 * v3 + v4;
    const double b2 = (13.0 / 12.0) * d0 * d0 + 0.25 * d1 * d1;

    const double w0 = 0.1 / ((kWenoEpsilon + b0) * (kWenoEpsilon + b0));
    const double w1 = 0.6 / ((kWenoEpsilon + b1) * (kWenoEpsilon + b1));
    const double w2 = 0.3 / ((kWenoEpsilon + b2) * (kWenoEpsilon + b2));
    return (w0 * p0 + w1 * p1 + w2 * p2) / (w0 + w1 + w2);
}

/// Both edge values of cell v2 in one pass. The mirrored window reuses the
/// three smoothness indicators, and the weights are normalized with a single
/// division. Agrees with weno5_reconstruct to rounding.
inline void weno5_edges(double v0, double v1, double v2, double v3, double v4, double& left,
                        double& right) noexcept {
    constexpr double sixth = 1.0 / 6.0;
    const double a0 = v0 - 2.0 * v1 + v2;
    const double a1 = v0 - 4.0 * v1 + 3.0 * v2;
    const double b0 = (13.0 / 12.0) * a0 * a0 + 0.25 * a1 * a1;
    const double c0 = v1 - 2.0 * v2 + v3;
    const double c1 = v1 - v3;
    const double b1 = (13.0 / 12.0) * c0 * c0 + 0.25 * c1 * c1;
    const double d0 = v2 - 2.0 * v3 + v4;
    const double d1 = 3.0 * v2 - 4.0 * v3 + v4;
    const double b2 = (13.0 / 12.0) * d0 * d0 + 0.25 * d1 * d1;

    const double q0 = (kWenoEpsilon + b0) * (kWenoEpsilon + b0);
    const double q1 = (kWenoEpsilon + b1) * (kWenoEpsilon + b1);
    const double q2 = (kWenoEpsilon + b2) * (kWenoEpsilon + b2);
    // w_k ∝ d_k / q_k, scaled by q0·q1·q2
    const double q12 = q1 * q2;
    const double q02 = q0 * q2;
    const double q01 = q0 * q1;

    const double r0 = (2.0 * v0 - 7.0 * v1 + 11.0 * v2) * sixth;
    const double r1 = (-v1 + 5.0 * v2 + 2.0 * v3) * sixth;
    const double r2 = (2.0 * v2 + 5.0 * v3 - v4) * sixth;
    const double wr0 = 0.1 * q12;
    const double wr1 = 0.6 * q02;
    const double wr2 = 0.3 * q01;
    right = (wr0 * r0 + wr1 * r1 + wr2 * r2) / (wr0 + wr1 + wr2);

    const double l0 = (2.0 * v4 - 7.0 * v3 + 11.0 * v2) * sixth;
    const double l1 = (-v3 + 5.0 * v2 + 2.0 * v1) * sixth;
    const double l2 = (2.0 * v2 + 5.0 * v1 - v0) * sixth;
    const double wl0 = 0.1 * q01;
    const double wl1 = 0.6 * q02;
    const double wl2 = 0.3 * q12;
    left = (wl0 * l0 + wl1 * l1 + wl2 * l2) / (wl0 + wl1 + wl2);
}

/// weno5_edges restricted to the candidate stencils flagged in `use`
/// ({v0,v1,v2}, {v1,v2,v3}, {v2,v3,v4}); the ideal weights of the remaining
/// stencils are renormalized. Falls back to v2 when no stencil is allowed.
inline void weno5_edges_masked(double v0, double v1, double v2, double v3, double v4, const bool use[3],
                               double& left, double& right) noexcept {
    if (!use[0] && !use[1] && !use[2]) {
        left = right = v2;
        return;
    }
    const double a0 = v0 - 2.0 * v1 + v2;
    const double a1 = v0 - 4.0 * v1 + 3.0 * v2;
    const double c0 = v1 - 2.0 * v2 + v3;
    const double c1 = v1 - v3;
    const double d0 = v2 - 2.0 * v3 + v4;
    const double d1 = 3.0 * v2 - 4.0 * v3 + v4;
    const double b[3] = {(13.0 / 12.0) * a0 * a0 + 0.25 * a1 * a1, (13.0 / 12.0) * c0 * c0 + 0.25 * c1 * c1,
                         (13.0 / 12.0) * d0 * d0 + 0.25 * d1 * d1};
    double inv_q[3];
    for (int k = 0; k < 3; ++k) inv_q[k] = use[k] ? 1.0 / ((kWenoEpsilon + b[k]) * (kWenoEpsilon + b[k])) : 0.0;

    const double r[3] = {(2.0 * v0 - 7.0 * v1 + 11.0 * v2) / 6.0, (-v1 + 5.0 * v2 + 2.0 * v3) / 6.0,
                         (2.0 * v2 + 5.0 * v3 - v4) / 6.0};
    const double l[3] = {(2.0 * v2 + 5.0 * v1 - v0) / 6.0, (-v3 + 5.0 * v2 + 2.0 * v1) / 6.0,
                         (2.0 * v4 - 7.0 * v3 + 11.0 * v2) / 6.0};
    constexpr double dr[3] = {0.1, 0.6, 0.3};
    constexpr double dl[3] = {0.3, 0.6, 0.1};
    double num_r = 0.0, den_r = 0.0, num_l = 0.0, den_l = 0.0;
    for (int k = 0; k < 3; ++k) {
        num_r += dr[k] * inv_q[k] * r[k];
        den_r += dr[k] * inv_q[k];
        num_l += dl[k] * inv_q[k] * l[k];
        den_l += dl[k] * inv_q[k];
    }
    right = num_r / den_r;
    left = num_l / den_l;
}

/// Same stencil with the ideal (linear) weights: the fifth-order upwind-biased
/// reconstruction that WENO5 reduces to on smooth data.
inline double linear5_reconstruct(double v0, double v1, double v2, double v3, double v4) noexcept {
    return (2.0 * v0 - 13.0 * v1 + 47.0 * v2 + 27.0 * v3 - 3.0 * v4) / 60.0;
}

}  // namespace layershock
