#pragma once

#include <cmath>
#include <string>
#include <variant>

namespace layershock {

// σ(ε) = exp(Kε) − 1
struct Exponential {
    double K = 1.0;
    bool operator==(const Exponential&) const = default;
};

// σ(ε) = Kε
struct Linear {
    double K = 1.0;
    bool operator==(const Linear&) const = default;
};

// p-system closure σ(ε) = K(1 − (1+ε)^(−γ)), ε > −1
struct PowerLaw {
    double K = 1.0;
    double gamma = 1.4;
    bool operator==(const PowerLaw&) const = default;
};

// σ(ε) = Kε + βε³; K = 0 is the purely cubic medium
struct Cubic {
    double K = 1.0;
    double beta = 0.0;
    bool operator==(const Cubic&) const = default;
};

/// Constitutive stress-strain relation with σ(0) = 0.
///
/// All members throw DomainError when the strain is outside the admissible
/// domain (where σ′ > 0) and RangeError when a stress cannot be attained.
class StressLaw {
public:
    using Variant = std::variant<Exponential, Linear, PowerLaw, Cubic>;

    StressLaw(Exponential law);
    StressLaw(Linear law);
    StressLaw(PowerLaw law);
    StressLaw(Cubic law);

    [[nodiscard]] const Variant& variant() const noexcept { return law_; }
    friend bool operator==(const StressLaw& a, const StressLaw& b) { return a.law_ == b.law_; }

    /// Linear modulus parameter K shared by every variant.
    [[nodiscard]] double modulus_parameter() const noexcept;
    [[nodiscard]] std::string name() const;

    [[nodiscard]] bool admissible(double eps) const noexcept {
        return std::isfinite(eps) && eps > lower_ && eps < upper_;
    }

    [[nodiscard]] double stress(double eps) const;
    /// σ′(ε).
    [[nodiscard]] double modulus(double eps) const;
    /// Inverse of stress(); closed form except for Cubic (bracketed Newton).
    [[nodiscard]] double strain(double sigma) const;
    /// Φ(ε) = ∫₀^ε σ(s) ds.
    [[nodiscard]] double potential(double eps) const;

    /// Evaluates σ and σ′ together without domain checks. Hot-path helper
    /// for the solvers, which validate admissibility separately.
    void evaluate(double eps, double& sigma, double& dsigma) const noexcept;

    /// Bounds of the admissible strain interval (open interval).
    [[nodiscard]] double strain_lower_bound() const noexcept;
    [[nodiscard]] double strain_upper_bound() const noexcept;

private:
    void check(double eps) const;
    void cache_bounds() noexcept;

    Variant law_;
    double lower_ = 0.0;
    double upper_ = 0.0;
};

/// Homogeneous material: density and constitutive law.
struct Material {
    double rho = 1.0;
    StressLaw law = Exponential{1.0};

    Material() = default;
    Material(double density, StressLaw stress_law);

    /// Acoustic impedance sqrt(ρσ′(ε)).
    [[nodiscard]] double impedance(double eps) const;
    /// Characteristic speed sqrt(σ′(ε)/ρ).
    [[nodiscard]] double sound_speed(double eps) const;

    friend bool operator==(const Material& a, const Material& b) { return a.rho == b.rho && a.law == b.law; }
};

}  // namespace layershock
