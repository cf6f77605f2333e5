#include "layershock/stress_law.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "layershock/error.hpp"

namespace layershock {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr double inf = std::numeric_limits<double>::infinity();

std::string fmt_value(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

// Largest |ε| on the monotone branch of a softening cubic (β < 0).
double cubic_branch_limit(const Cubic& c) {
    if (c.beta >= 0.0) return inf;
    return std::sqrt(c.K / (-3.0 * c.beta));
}

double cubic_stress(const Cubic& c, double e) { return c.K * e + c.beta * e * e * e; }

// Bisection safeguarded Newton iteration on a bracket that is grown
// geometrically until it contains the root.
double cubic_inverse(const Cubic& c, double sigma) {
    if (sigma == 0.0) return 0.0;
    const double limit = cubic_branch_limit(c);
    if (std::isfinite(limit)) {
        const double smax = cubic_stress(c, limit);
        if (std::abs(sigma) >= smax) {
            throw RangeError("cubic law: stress " + fmt_value(sigma) +
                             " outside attainable range (" + fmt_value(-smax) + ", " +
                             fmt_value(smax) + ")");
        }
    }
    const double scale = c.K > 0.0 ? std::abs(sigma) / c.K : std::abs(sigma);
    double lo = -scale - 1.0;
    double hi = scale + 1.0;
    if (std::isfinite(limit)) {
        lo = std::max(lo, -limit);
        hi = std::min(hi, limit);
    }
    auto f = [&](double e) { return cubic_stress(c, e) - sigma; };
    for (int grow = 0; f(lo) > 0.0; ++grow) {
        if (grow > 200) throw RangeError("cubic law: cannot bracket stress " + fmt_value(sigma));
        lo *= 2.0;
    }
    for (int grow = 0; f(hi) < 0.0; ++grow) {
        if (grow > 200) throw RangeError("cubic law: cannot bracket stress " + fmt_value(sigma));
        hi *= 2.0;
    }
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        const double fx = f(x);
        if (fx == 0.0) return x;
        if (fx < 0.0) {
            lo = x;
        } else {
            hi = x;
        }
        const double d = c.K + 3.0 * c.beta * x * x;
        double next = d > 0.0 ? x - fx / d : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - x) <= 1e-13 * (1.0 + std::abs(x)) || hi - lo <= 1e-13) {
            return next;
        }
        x = next;
    }
    return x;
}

}  // namespace

StressLaw::StressLaw(Exponential law) : law_(law) {
    if (!(law.K > 0.0)) throw DomainError("exponential law requires K > 0");
    cache_bounds();
}

StressLaw::StressLaw(Linear law) : law_(law) {
    if (!(law.K > 0.0)) throw DomainError("linear law requires K > 0");
    cache_bounds();
}

StressLaw::StressLaw(PowerLaw law) : law_(law) {
    if (!(law.K > 0.0) || !(law.gamma > 0.0)) {
        throw DomainError("power law requires K > 0 and gamma > 0");
    }
    cache_bounds();
}

StressLaw::StressLaw(Cubic law) : law_(law) {
    if (!(law.K >= 0.0) || !std::isfinite(law.beta)) {
        throw DomainError("cubic law requires K >= 0 and finite beta");
    }
    if (law.K == 0.0 && !(law.beta > 0.0)) {
        throw DomainError("purely cubic law (K = 0) requires beta > 0");
    }
    cache_bounds();
}

double StressLaw::modulus_parameter() const noexcept {
    return std::visit([](const auto& l) { return l.K; }, law_);
}

std::string StressLaw::name() const {
    return std::visit(overloaded{[](const Exponential&) { return std::string("exponential"); },
                                 [](const Linear&) { return std::string("linear"); },
                                 [](const PowerLaw&) { return std::string("power"); },
                                 [](const Cubic&) { return std::string("cubic"); }},
                      law_);
}

double StressLaw::strain_lower_bound() const noexcept {
    return std::visit(overloaded{[](const Exponential&) { return -inf; },
                                 [](const Linear&) { return -inf; },
                                 [](const PowerLaw&) { return -1.0; },
                                 [](const Cubic& c) { return -cubic_branch_limit(c); }},
                      law_);
}

double StressLaw::strain_upper_bound() const noexcept {
    return std::visit(overloaded{[](const Exponential&) { return inf; },
                                 [](const Linear&) { return inf; },
                                 [](const PowerLaw&) { return inf; },
                                 [](const Cubic& c) { return cubic_branch_limit(c); }},
                      law_);
}

void StressLaw::cache_bounds() noexcept {
    lower_ = strain_lower_bound();
    upper_ = strain_upper_bound();
}

void StressLaw::check(double eps) const {
    if (!admissible(eps)) {
        throw DomainError(name() + " law: strain " + fmt_value(eps) + " outside admissible domain");
    }
}

void StressLaw::evaluate(double eps, double& sigma, double& dsigma) const noexcept {
    switch (law_.index()) {
        case 0: {
            const double K = std::get<Exponential>(law_).K;
            sigma = std::expm1(K * eps);
            dsigma = K * (sigma + 1.0);
            return;
        }
        case 1: {
            const double K = std::get<Linear>(law_).K;
            sigma = K * eps;
            dsigma = K;
            return;
        }
        case 2: {
            const auto& p = std::get<PowerLaw>(law_);
            const double v = std::pow(1.0 + eps, -p.gamma);
            sigma = p.K * (1.0 - v);
            dsigma = p.K * p.gamma * v / (1.0 + eps);
            return;
        }
        default: {
            const auto& c = std::get<Cubic>(law_);
            sigma = cubic_stress(c, eps);
            dsigma = c.K + 3.0 * c.beta * eps * eps;
            return;
        }
    }
}

double StressLaw::stress(double eps) const {
    check(eps);
    double s = 0.0;
    double ds = 0.0;
    evaluate(eps, s, ds);
    return s;
}

double StressLaw::modulus(double eps) const {
    check(eps);
    double s = 0.0;
    double ds = 0.0;
    evaluate(eps, s, ds);
    return ds;
}

double StressLaw::strain(double sigma) const {
    if (!std::isfinite(sigma)) throw RangeError(name() + " law: non-finite stress");
    return std::visit(
        overloaded{
            [&](const Exponential& l) {
                if (!(sigma > -1.0)) {
                    throw RangeError("exponential law: stress " + fmt_value(sigma) +
                                     " not attainable (requires sigma > -1)");
                }
                return std::log1p(sigma) / l.K;
            },
            [&](const Linear& l) { return sigma / l.K; },
            [&](const PowerLaw& l) {
                if (!(sigma < l.K)) {
                    throw RangeError("power law: stress " + fmt_value(sigma) +
                                     " not attainable (requires sigma < K)");
                }
                // (1+ε)^(−γ) = 1 − σ/K
                return std::expm1(-std::log1p(-sigma / l.K) / l.gamma);
            },
            [&](const Cubic& l) { return cubic_inverse(l, sigma); }},
        law_);
}

double StressLaw::potential(double eps) const {
    check(eps);
    return std::visit(
        overloaded{[&](const Exponential& l) { return std::expm1(l.K * eps) / l.K - eps; },
                   [&](const Linear& l) { return 0.5 * l.K * eps * eps; },
                   [&](const PowerLaw& l) {
                       const double lg = std::log1p(eps);
                       if (l.gamma == 1.0) return l.K * (eps - lg);
                       return l.K * (eps - std::expm1((1.0 - l.gamma) * lg) / (1.0 - l.gamma));
                   },
                   [&](const Cubic& l) {
                       const double e2 = eps * eps;
                       return 0.5 * l.K * e2 + 0.25 * l.beta * e2 * e2;
                   }},
        law_);
}

Material::Material(double density, StressLaw stress_law) : rho(density), law(std::move(stress_law)) {
    if (!(density > 0.0) || !std::isfinite(density)) {
        throw DomainError("material density must be positive and finite");
    }
}

double Material::impedance(double eps) const { return std::sqrt(rho * law.modulus(eps)); }

double Material::sound_speed(double eps) const { return std::sqrt(law.modulus(eps) / rho); }

}  // namespace layershock
