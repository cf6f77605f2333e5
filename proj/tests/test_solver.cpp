#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "layershock/diagnostics.hpp"
#include "layershock/error.hpp"
#include "layershock/riemann.hpp"
#include "layershock/wave_propagation.hpp"
#include "support.hpp"

using namespace layershock;
using testing::Gen;

namespace {

Material random_material(Gen& g) {
    if (g.coin()) return Material(g.uniform(0.2, 5.0), Exponential{g.uniform(0.2, 5.0)});
    return Material(g.uniform(0.2, 5.0), PowerLaw{g.uniform(0.5, 3.0), g.uniform(1.1, 3.0)});
}

double totals(const SimState& s, const Grid& grid, bool momentum) {
    double acc = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) acc += momentum ? grid.material(i).rho * s.u[i] : s.eps[i];
    return acc * grid.dx();
}

SimState random_state(Gen& g, const Grid& grid, double amp) {
    SimState s(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        s.eps[i] = amp * g.uniform(-1.0, 1.0);
        s.u[i] = amp * g.uniform(-1.0, 1.0);
    }
    return s;
}

// Linear medium ρ = K = 1: u + ε travels left and u − ε right at unit speed.
struct LinearExact {
    double length;
    double eps0(double x) const { return 0.1 * std::sin(2.0 * std::numbers::pi * x / length); }
    double u0(double x) const { return 0.05 * std::cos(4.0 * std::numbers::pi * x / length); }
    double eps(double x, double t) const {
        const double p = u0(x + t) + eps0(x + t);
        const double m = u0(x - t) - eps0(x - t);
        return 0.5 * (p - m);
    }
    double u(double x, double t) const {
        const double p = u0(x + t) + eps0(x + t);
        const double m = u0(x - t) - eps0(x - t);
        return 0.5 * (p + m);
    }
};

double linear_error(int cells_per_layer, Limiter lim, double t_end) {
    const Medium m = Medium::homogeneous(Material(1.0, Linear{1.0}));
    const Grid grid(m, 0.0, 10.0, cells_per_layer);
    const LinearExact exact{10.0};
    SimState s(grid.size());
    const double dx = grid.dx();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double a = grid.x_lo() + i * dx;
        s.eps[i] = testing::cell_average([&](double x) { return exact.eps(x, 0.0); }, a, a + dx);
        s.u[i] = testing::cell_average([&](double x) { return exact.u(x, 0.0); }, a, a + dx);
    }
    SolverConfig cfg;
    cfg.limiter = lim;
    cfg.cfl_target = 0.8;
    WavePropagation solver(grid, Periodic{}, cfg);
    while (s.t < t_end) solver.step(s, t_end - s.t);
    double err = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double a = grid.x_lo() + i * dx;
        const double e = testing::cell_average([&](double x) { return exact.u(x, t_end); }, a, a + dx);
        err = std::max(err, std::abs(s.u[i] - e));
    }
    return err;
}

}  // namespace

TEST_SUITE("solver") {
    TEST_CASE("limiter formulas") {
        for (Limiter l : {Limiter::None, Limiter::Minmod, Limiter::Superbee, Limiter::MC, Limiter::VanLeer}) {
            CHECK(limiter_value(1.0, l) == 1.0);
        }
        CHECK(limiter_value(-1.0, Limiter::Minmod) == 0.0);
        CHECK(limiter_value(0.5, Limiter::Superbee) == 1.0);
        CHECK(limiter_value(3.0, Limiter::MC) == 2.0);
        CHECK(limiter_value(3.0, Limiter::VanLeer) == doctest::Approx(1.5));
        CHECK(parse_limiter("vanleer") == Limiter::VanLeer);
        CHECK_FALSE(parse_limiter("nope").has_value());
    }

    TEST_CASE("single-division limiter agrees with the ratio form") {
        Gen g(21);
        for (Limiter l : {Limiter::None, Limiter::Minmod, Limiter::Superbee, Limiter::MC, Limiter::VanLeer}) {
            for (int i = 0; i < 2000; ++i) {
                const double den = g.uniform(1e-3, 10.0);
                const double num = g.uniform(-30.0, 30.0);
                CHECK(limiter_ratio(num, den, l) == doctest::Approx(limiter_value(num / den, l)).epsilon(1e-13));
            }
        }
    }

    TEST_CASE("f-wave split of a linear velocity jump") {
        const Material lin(1.0, Linear{1.0});
        const FluctuationSet f = riemann_fwave({0.0, 0.0}, {0.0, 1.0}, lin, lin);
        CHECK(f.flux_difference[0] == doctest::Approx(-1.0));
        CHECK(f.flux_difference[1] == doctest::Approx(0.0));
        CHECK(f.amdq[0] == doctest::Approx(-0.5));
        CHECK(f.amdq[1] == doctest::Approx(-0.5));
        CHECK(f.apdq[0] == doctest::Approx(-0.5));
        CHECK(f.apdq[1] == doctest::Approx(0.5));
        const FluctuationSet zero = riemann_fwave({0.3, 0.1}, {0.3, 0.1}, lin, lin);
        CHECK(zero.waves[0].z[0] == 0.0);
        CHECK(zero.waves[1].z[1] == 0.0);
    }

    TEST_CASE("f-waves sum to the flux difference on random interfaces") {
        Gen g(22);
        for (int i = 0; i < 10000; ++i) {
            const Material ml = random_material(g);
            const Material mr = random_material(g);
            const PointState ql{g.uniform(-0.5, 0.5), g.uniform(-1.0, 1.0)};
            const PointState qr{g.uniform(-0.5, 0.5), g.uniform(-1.0, 1.0)};
            const FluctuationSet f = riemann_fwave(ql, qr, ml, mr);
            const double d0 = -(qr.u - ql.u);
            const double d1 = -(mr.law.stress(qr.eps) - ml.law.stress(ql.eps));
            const double scale = 1.0 + std::max(std::abs(d0), std::abs(d1));
            CHECK(std::abs(f.waves[0].z[0] + f.waves[1].z[0] - d0) <= 1e-13 * scale);
            CHECK(std::abs(f.waves[0].z[1] + f.waves[1].z[1] - d1) <= 1e-13 * scale);
            CHECK(f.waves[0].speed < 0.0);
            CHECK(f.waves[1].speed > 0.0);
        }
    }

    TEST_CASE("inadmissible interface states are rejected") {
        const Material p(1.0, PowerLaw{1.0, 1.4});
        CHECK_THROWS_AS(riemann_fwave({-1.5, 0.0}, {0.0, 0.0}, p, p), DomainError);
    }

    TEST_CASE("periodic stepping conserves strain and momentum") {
        Gen g(23);
        const Medium m = Medium::exponential_pair(4.0, 4.0);
        const Grid grid(m, 0.0, 8.0, 6);
        for (Limiter l : {Limiter::VanLeer, Limiter::Superbee, Limiter::None}) {
            SolverConfig cfg;
            cfg.limiter = l;
            WavePropagation solver(grid, Periodic{}, cfg);
            SimState s = random_state(g, grid, 0.1);
            for (int n = 0; n < 50; ++n) {
                const double e0 = totals(s, grid, false);
                const double p0 = totals(s, grid, true);
                solver.step(s);
                CHECK(std::abs(totals(s, grid, false) - e0) <= 1e-12);
                CHECK(std::abs(totals(s, grid, true) - p0) <= 1e-12);
                CHECK(solver.last_cfl() <= cfg.cfl_target + 1e-12);
            }
        }
    }

    TEST_CASE("rest state is a fixed point and stepping is deterministic") {
        const Medium m = Medium::exponential_pair(2.0, 2.0);
        const Grid grid(m, 0.0, 5.0, 4);
        SimState rest(grid.size());
        const SimState next = step(rest, grid, Periodic{}, SolverConfig{});
        for (std::size_t i = 0; i < grid.size(); ++i) {
            CHECK(next.eps[i] == 0.0);
            CHECK(next.u[i] == 0.0);
        }
        Gen g(24);
        const SimState s = random_state(g, grid, 0.05);
        const SimState a = step(s, grid, Periodic{}, SolverConfig{});
        const SimState b = step(s, grid, Periodic{}, SolverConfig{});
        CHECK(a.eps == b.eps);
        CHECK(a.u == b.u);
    }

    TEST_CASE("completeness defect of the solver is at rounding level") {
        Gen g(25);
        const Medium m = Medium::exponential_pair(3.0, 1.5);
        const Grid grid(m, 0.0, 6.0, 4);
        WavePropagation solver(grid, Periodic{}, SolverConfig{});
        CHECK(solver.completeness_defect(random_state(g, grid, 0.3)) <= 1e-13);
    }

    TEST_CASE("first-order entropy never increases") {
        Gen g(26);
        const Medium m = Medium::exponential_pair(4.0, 4.0);
        const Grid grid(m, 0.0, 10.0, 8);
        SolverConfig cfg;
        cfg.order = 1;
        WavePropagation solver(grid, Periodic{}, cfg);
        SimState s = random_state(g, grid, 0.05);
        double prev = total_entropy(s, grid);
        for (int n = 0; n < 100; ++n) {
            solver.step(s);
            const double e = total_entropy(s, grid);
            CHECK(e <= prev + 1e-12);
            prev = e;
        }
    }

    TEST_CASE("second-order convergence against the characteristic solution") {
        const double e1 = linear_error(16, Limiter::None, 3.0);
        const double e2 = linear_error(32, Limiter::None, 3.0);
        const double e3 = linear_error(64, Limiter::None, 3.0);
        CHECK(std::log2(e1 / e2) > 1.8);
        CHECK(std::log2(e2 / e3) > 1.8);
        CHECK(linear_error(64, Limiter::VanLeer, 3.0) < linear_error(16, Limiter::VanLeer, 3.0) / 4.0);
    }

    TEST_CASE("invalid solver settings") {
        SolverConfig cfg;
        cfg.cfl_target = 1.5;
        CHECK_THROWS_AS(cfg.validate(), ConfigError);
    }
}
