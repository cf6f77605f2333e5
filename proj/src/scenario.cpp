#include "layershock/scenario.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "layershock/diagnostics.hpp"
#include "layershock/error.hpp"

namespace layershock {

namespace {

// Three-point Gauss–Legendre nodes and weights on [−½, ½].
constexpr std::array<double, 3> kNodes{-0.3872983346207417, 0.0, 0.3872983346207417};
constexpr std::array<double, 3> kWeights{5.0 / 18.0, 8.0 / 18.0, 5.0 / 18.0};

double raised_cosine(double x, double x_mid, double width) {
    const double a = x_mid - 0.5 * width;
    if (x <= a) return 0.0;
    if (x >= a + width) return 1.0;
    return 0.5 * (1.0 - std::cos(std::numbers::pi * (x - a) / width));
}

struct PointValue {
    double eps;
    double u;
};

PointValue evaluate(const InitialCondition& ic, const Material& mat, double x) {
    return std::visit(
        [&](const auto& c) -> PointValue {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, GaussianPulse>) {
                const double z = (x - c.center) / c.width;
                return {mat.law.strain(c.amplitude * std::exp(-z * z)), 0.0};
            } else if constexpr (std::is_same_v<T, RestState>) {
                return {0.0, 0.0};
            } else if constexpr (std::is_same_v<T, SmoothTransition>) {
                const double s = raised_cosine(x, c.x_mid, c.width);
                return {mat.law.strain(c.sigma_l + (c.sigma_r - c.sigma_l) * s), c.u_l * (1.0 - s)};
            } else if constexpr (std::is_same_v<T, StressJump>) {
                if (x <= c.x_jump) return {mat.law.strain(c.sigma_l), c.u_l};
                return {0.0, 0.0};
            } else {
                if (x < c.x0) return {c.eps0, c.u0};
                return {0.0, 0.0};
            }
        },
        ic);
}

}  // namespace

Grid Scenario::make_grid() const {
    if (std::holds_alternative<Periodic>(bc)) {
        const double periods = (x_hi - x_lo) / medium.period();
        if (std::abs(periods - std::round(periods)) > 1e-9 * std::max(1.0, periods)) {
            throw DomainError("periodic domain must span a whole number of periods");
        }
    }
    return Grid(medium, x_lo, x_hi, cells_per_layer);
}

SimState Scenario::initial_state(const Grid& grid) const {
    SimState s(grid.size(), t_initial);
    const double dx = grid.dx();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const Material& mat = grid.material(i);
        double eps = 0.0;
        double u = 0.0;
        for (std::size_t q = 0; q < kNodes.size(); ++q) {
            const PointValue v = evaluate(initial, mat, grid.center(i) + kNodes[q] * dx);
            eps += kWeights[q] * v.eps;
            u += kWeights[q] * v.u;
        }
        s.eps[i] = eps;
        s.u[i] = u;
    }
    check_admissible(s, grid);
    return s;
}

Medium ly_medium(double impedance_b) {
    if (!(impedance_b > 0.0)) throw DomainError("impedance of material B must be positive");
    return Medium::exponential_pair(impedance_b, impedance_b);
}

Scenario gaussian_pulse_scenario(const Medium& medium, double amplitude, double width, double center) {
    if (!(amplitude >= 0.0)) throw DomainError("Gaussian amplitude must be non-negative");
    if (!(width > 0.0)) throw DomainError("Gaussian width must be positive");
    Scenario s;
    s.name = "gaussian";
    s.medium = medium;
    s.x_lo = 0.0;
    s.x_hi = 100.0;
    s.initial = GaussianPulse{amplitude, width, center};
    s.bc = Periodic{};
    s.t_end = 60.0;
    for (const auto& layer : medium.layers()) {
        if (!layer.material.law.admissible(layer.material.law.strain(amplitude))) {
            throw DomainError("Gaussian amplitude is inadmissible for the stress law");
        }
    }
    return s;
}

Scenario ly_stegoton_scenario(double impedance_b, int cells_per_layer) {
    Scenario s;
    s.name = "ly";
    s.medium = ly_medium(impedance_b);
    s.x_lo = 0.0;
    s.x_hi = 200.0;
    s.cells_per_layer = cells_per_layer;
    s.initial = RestState{};
    s.prelude = Prelude{MovingWall{ly_wall_velocity}, 40.0, false};
    s.bc = Periodic{};
    s.t_end = 600.0;
    return s;
}

Scenario smooth_riemann_scenario(const Medium& medium, double sigma_l, double sigma_r, double transition_width) {
    if (!(transition_width > 0.0)) throw DomainError("transition width must be positive");
    Scenario s;
    s.name = "smooth-riemann";
    s.medium = medium;
    s.x_lo = 0.0;
    s.x_hi = 250.0;
    const double u_l = sigma_l == sigma_r ? 0.0 : effective_shock_velocity(medium, sigma_l, sigma_r);
    s.initial = SmoothTransition{sigma_l, sigma_r, u_l, 30.0, transition_width * medium.period()};
    s.bc = Extrapolation{};
    s.t_end = 200.0;
    return s;
}

Scenario effective_shock_scenario(const Medium& medium, double sigma_l, double x_jump) {
    Scenario s;
    s.name = "effective-shock";
    s.medium = medium;
    s.x_lo = 0.0;
    s.x_hi = 250.0;
    const double u_l = sigma_l == 0.0 ? 0.0 : effective_shock_velocity(medium, sigma_l, 0.0);
    s.initial = StressJump{sigma_l, u_l, x_jump};
    s.bc = Extrapolation{};
    s.t_end = 100.0;
    return s;
}

Scenario rarefaction_reversal_scenario(const Medium& medium, double eps0, double tau, double x0, double x_lo,
                                       double x_hi) {
    if (!(tau > 0.0)) throw DomainError("rarefaction time tau must be positive");
    if (!(x0 > x_lo && x0 < x_hi)) throw DomainError("jump position must lie inside the domain");
    const Material& mat = medium.layers()[medium.layer_at(x0)].material;
    if (!mat.law.admissible(eps0)) throw DomainError("jump strain is inadmissible");
    const double c0 = mat.sound_speed(eps0);
    const double c_rest = mat.sound_speed(0.0);
    if (eps0 != 0.0 && !(c0 < c_rest)) {
        throw DomainError("jump does not open into a rarefaction (needs c(eps0) < c(0))");
    }
    const double reach = std::max(c0, c_rest) * tau;
    if (!(reach < medium.distance_to_interface(x0))) {
        throw DomainError("rarefaction leaves the layer containing x0 within time tau");
    }
    if (!(x0 + reach < x_hi)) throw DomainError("rarefaction reaches the domain edge within time tau");

    Scenario s;
    s.name = "rarefaction-reversal";
    s.medium = medium;
    s.x_lo = x_lo;
    s.x_hi = x_hi;
    s.initial = StrainJump{eps0, -eps0 * std::sqrt(mat.law.modulus(eps0) / mat.rho), x0};
    s.bc = Extrapolation{};
    s.prelude = Prelude{Extrapolation{}, tau, true};
    s.t_initial = -tau;
    s.t_end = tau;
    return s;
}

SimState prepared_state(const Scenario& scenario, const Grid& grid, const SchemeConfig& scheme) {
    SimState state = scenario.initial_state(grid);
    if (scenario.prelude) {
        const auto integrator = make_integrator(grid, scenario.prelude->bc, scheme);
        evolve(state, *integrator, scenario.t_start());
        if (scenario.prelude->reverse_after) state = time_reverse(state);
    }
    state.t = scenario.t_start();
    return state;
}

}  // namespace layershock
