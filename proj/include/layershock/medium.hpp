#pragma once

#include <concepts>
#include <vector>

#include "layershock/error.hpp"
#include "layershock/stress_law.hpp"

namespace layershock {

struct Layer {
    double width_fraction = 1.0;  // share of one period, in (0, 1]
    Material material;
};

/// Periodic piecewise-constant medium. Layer k occupies
/// [period·(f₀+…+f_{k−1}), period·(f₀+…+f_k)) within every period, with the
/// first period starting at x = 0.
class Medium {
public:
    Medium(double period, std::vector<Layer> layers);

    /// Half-half alternating medium: material `a` on (j, j+½), `b` elsewhere.
    static Medium alternating(const Material& a, const Material& b, double period = 1.0);
    static Medium homogeneous(const Material& m, double period = 1.0);
    /// Exponential laws with ρ_A = K_A = 1 and ρ_B = K_B = impedance_b.
    static Medium exponential_pair(double rho_b, double k_b);

    [[nodiscard]] double period() const noexcept { return period_; }
    [[nodiscard]] const std::vector<Layer>& layers() const noexcept { return layers_; }
    [[nodiscard]] std::size_t size() const noexcept { return layers_.size(); }

    /// Layer index of position x (x taken modulo the period).
    [[nodiscard]] std::size_t layer_at(double x) const;
    /// Offsets of layer boundaries within one period, starting with 0.
    [[nodiscard]] std::vector<double> interface_offsets() const;
    /// Distance from x to the nearest boundary between layers whose
    /// materials differ; infinity when every layer is the same material.
    [[nodiscard]] double distance_to_interface(double x) const;

    /// Medium with the layer list rotated by `shift` positions.
    [[nodiscard]] Medium rotated(std::size_t shift) const;

private:
    double period_;
    std::vector<Layer> layers_;
};

/// Width-weighted arithmetic mean over one period (exact for piecewise data).
template <std::invocable<const Material&> F>
double mean_arithmetic(const Medium& medium, F&& sample) {
    double acc = 0.0;
    for (const auto& layer : medium.layers()) acc += layer.width_fraction * sample(layer.material);
    return acc;
}

/// Width-weighted harmonic mean over one period. Samples must be positive.
template <std::invocable<const Material&> F>
double mean_harmonic(const Medium& medium, F&& sample) {
    double acc = 0.0;
    for (const auto& layer : medium.layers()) {
        const double v = sample(layer.material);
        if (!(v > 0.0)) throw DomainError("harmonic mean requires positive samples");
        acc += layer.width_fraction / v;
    }
    return 1.0 / acc;
}

struct AmbientState {
    double sigma0 = 0.0;
};

/// Harmonic mean of the layer sound speeds at the ambient stress: the speed of
/// the unreflected part of a small perturbation.
double c_hat(const Medium& medium, AmbientState ambient);

/// Effective (homogenized) sound speed sqrt(hat(σ′)/bar(ρ)) at the ambient stress.
double c_eff(const Medium& medium, AmbientState ambient);

/// Effective Rankine–Hugoniot speed of a jump from sigma_l to sigma_r:
/// sqrt(hat([σ]/[ε]) / bar(ρ)).
double s_eff(const Medium& medium, double sigma_l, double sigma_r);

/// s_eff / c_hat(σ_r). Values above one predict a persistent shock.
double s_eff_relative(const Medium& medium, double sigma_l, double sigma_r);

/// Velocity behind an effective shock joining (sigma_l, u_l) to (sigma_r, u_r)
/// with the averaged medium: u_l = u_r + s_eff·(bar(ε_r) − bar(ε_l)).
double effective_shock_velocity(const Medium& medium, double sigma_l, double sigma_r,
                                double u_r = 0.0);

struct ShockPrediction {
    double c_hat;
    double c_eff;
    double s_eff;
    double S_eff;
    [[nodiscard]] bool shock() const noexcept { return S_eff > 1.0; }
};

ShockPrediction predict_shock(const Medium& medium, double sigma_l, double sigma_r);

}  // namespace layershock
