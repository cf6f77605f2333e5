#include "layershock/medium.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace layershock {

Medium::Medium(double period, std::vector<Layer> layers) : period_(period), layers_(std::move(layers)) {
    if (!(period > 0.0) || !std::isfinite(period)) throw DomainError("medium period must be positive");
    if (layers_.empty()) throw DomainError("medium requires at least one layer");
    double total = 0.0;
    for (const auto& l : layers_) {
        if (!(l.width_fraction > 0.0 && l.width_fraction <= 1.0)) {
            throw DomainError("layer width fraction must lie in (0, 1]");
        }
        total += l.width_fraction;
    }
    if (std::abs(total - 1.0) > 1e-14) throw DomainError("layer width fractions must sum to 1");
}

Medium Medium::alternating(const Material& a, const Material& b, double period) {
    return Medium(period, {Layer{0.5, a}, Layer{0.5, b}});
}

Medium Medium::homogeneous(const Material& m, double period) { return Medium(period, {Layer{1.0, m}}); }

Medium Medium::exponential_pair(double rho_b, double k_b) {
    return alternating(Material(1.0, Exponential{1.0}), Material(rho_b, Exponential{k_b}));
}

std::vector<double> Medium::interface_offsets() const {
    std::vector<double> out;
    out.reserve(layers_.size());
    double acc = 0.0;
    for (const auto& l : layers_) {
        out.push_back(acc * period_);
        acc += l.width_fraction;
    }
    return out;
}

std::size_t Medium::layer_at(double x) const {
    double phase = std::fmod(x, period_) / period_;
    if (phase < 0.0) phase += 1.0;
    double acc = 0.0;
    for (std::size_t k = 0; k < layers_.size(); ++k) {
        acc += layers_[k].width_fraction;
        if (phase < acc) return k;
    }
    return layers_.size() - 1;
}

double Medium::distance_to_interface(double x) const {
    const auto offsets = interface_offsets();
    const std::size_t n = layers_.size();
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n; ++k) {
        const auto& prev = layers_[(k + n - 1) % n].material;
        if (prev == layers_[k].material) continue;
        // nearest periodic image of this boundary
        const double rel = x - offsets[k];
        const double shifted = rel - period_ * std::round(rel / period_);
        best = std::min(best, std::abs(shifted));
    }
    return best;
}

Medium Medium::rotated(std::size_t shift) const {
    std::vector<Layer> out(layers_.size());
    for (std::size_t k = 0; k < layers_.size(); ++k) out[k] = layers_[(k + shift) % layers_.size()];
    return Medium(period_, std::move(out));
}

double c_hat(const Medium& medium, AmbientState ambient) {
    return mean_harmonic(medium, [&](const Material& m) {
        return m.sound_speed(m.law.strain(ambient.sigma0));
    });
}

double c_eff(const Medium& medium, AmbientState ambient) {
    const double k_hat =
        mean_harmonic(medium, [&](const Material& m) { return m.law.modulus(m.law.strain(ambient.sigma0)); });
    const double rho_bar = mean_arithmetic(medium, [](const Material& m) { return m.rho; });
    return std::sqrt(k_hat / rho_bar);
}

double s_eff(const Medium& medium, double sigma_l, double sigma_r) {
    if (sigma_l == sigma_r) throw DomainError("effective shock speed requires sigma_l != sigma_r");
    const double k_hat = mean_harmonic(medium, [&](const Material& m) {
        const double jump_eps = m.law.strain(sigma_r) - m.law.strain(sigma_l);
        return (sigma_r - sigma_l) / jump_eps;
    });
    const double rho_bar = mean_arithmetic(medium, [](const Material& m) { return m.rho; });
    return std::sqrt(k_hat / rho_bar);
}

double s_eff_relative(const Medium& medium, double sigma_l, double sigma_r) {
    return s_eff(medium, sigma_l, sigma_r) / c_hat(medium, AmbientState{sigma_r});
}

double effective_shock_velocity(const Medium& medium, double sigma_l, double sigma_r, double u_r) {
    if (sigma_l == sigma_r) return u_r;
    const double eps_l = mean_arithmetic(medium, [&](const Material& m) { return m.law.strain(sigma_l); });
    const double eps_r = mean_arithmetic(medium, [&](const Material& m) { return m.law.strain(sigma_r); });
    return u_r + s_eff(medium, sigma_l, sigma_r) * (eps_r - eps_l);
}

ShockPrediction predict_shock(const Medium& medium, double sigma_l, double sigma_r) {
    ShockPrediction p{};
    p.c_hat = c_hat(medium, AmbientState{sigma_r});
    p.c_eff = c_eff(medium, AmbientState{sigma_r});
    p.s_eff = s_eff(medium, sigma_l, sigma_r);
    p.S_eff = p.s_eff / p.c_hat;
    return p;
}

}  // namespace layershock
