#include "layershock/runge_kutta.hpp"

#include <cmath>
#include <numeric>

#include "layershock/error.hpp"

namespace layershock {

namespace {

// y ← α·y + β·x  (fields and time)
void combine(SimState& y, double alpha, const SimState& x, double beta) {
    for (std::size_t i = 0; i < y.eps.size(); ++i) {
        y.eps[i] = alpha * y.eps[i] + beta * x.eps[i];
        y.u[i] = alpha * y.u[i] + beta * x.u[i];
    }
    y.t = alpha * y.t + beta * x.t;
}

// y ← y + h·k  (fields only)
void axpy(SimState& y, double h, const SimState& k) {
    for (std::size_t i = 0; i < y.eps.size(); ++i) {
        y.eps[i] += h * k.eps[i];
        y.u[i] += h * k.u[i];
    }
}

void check_finite(const SimState& s) {
    for (std::size_t i = 0; i < s.eps.size(); ++i) {
        if (!std::isfinite(s.eps[i]) || !std::isfinite(s.u[i])) {
            throw BlowupError("Runge-Kutta step produced a non-finite value");
        }
    }
}

// Stage values of the low-storage SSP(10,4) method written as linear
// combinations of the stage derivatives; index 0 of each row is the
// coefficient of the initial value.
RKScheme build_ssp104() {
    constexpr std::size_t s = 10;
    using Row = std::vector<double>;
    auto unit = [](std::size_t k) {
        Row r(s + 1, 0.0);
        r[k + 1] = 1.0;
        return r;
    };
    auto lin = [](const Row& x, double a, const Row& y, double b) {
        Row r(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) r[i] = a * x[i] + b * y[i];
        return r;
    };

    std::vector<Row> stage(s);
    Row q1(s + 1, 0.0);
    q1[0] = 1.0;
    Row q2 = q1;
    for (std::size_t k = 0; k < 5; ++k) {
        stage[k] = q1;
        q1 = lin(q1, 1.0, unit(k), 1.0 / 6.0);
    }
    q2 = lin(q2, 1.0 / 25.0, q1, 9.0 / 25.0);
    q1 = lin(q2, 15.0, q1, -5.0);
    for (std::size_t k = 5; k < 9; ++k) {
        stage[k] = q1;
        q1 = lin(q1, 1.0, unit(k), 1.0 / 6.0);
    }
    stage[9] = q1;
    const Row final_row = lin(lin(q2, 1.0, q1, 3.0 / 5.0), 1.0, unit(9), 1.0 / 10.0);

    RKScheme scheme;
    scheme.name = "SSPRK(10,4)";
    scheme.ssp_coefficient = 6.0;
    scheme.a.assign(s, std::vector<double>(s, 0.0));
    scheme.b.assign(s, 0.0);
    scheme.c.assign(s, 0.0);
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < s; ++j) scheme.a[i][j] = stage[i][j + 1];
        scheme.c[i] = std::accumulate(scheme.a[i].begin(), scheme.a[i].end(), 0.0);
        scheme.b[i] = final_row[i + 1];
    }
    return scheme;
}

RKScheme build_classic4() {
    RKScheme scheme;
    scheme.name = "RK4";
    scheme.ssp_coefficient = 0.0;
    scheme.a = {{0, 0, 0, 0}, {0.5, 0, 0, 0}, {0, 0.5, 0, 0}, {0, 0, 1, 0}};
    scheme.b = {1.0 / 6.0, 1.0 / 3.0, 1.0 / 3.0, 1.0 / 6.0};
    scheme.c = {0.0, 0.5, 0.5, 1.0};
    return scheme;
}

void resize_like(SimState& s, const SimState& ref) {
    s.eps.resize(ref.eps.size());
    s.u.resize(ref.u.size());
}

}  // namespace

RKScheme rk_scheme(RungeKutta method) {
    return method == RungeKutta::Ssp104 ? build_ssp104() : build_classic4();
}

void ssprk4_advance(SimState& state, const Rhs& rhs, double dt, RungeKutta method, RKWorkspace& work) {
    const double t0 = state.t;
    resize_like(work.k, state);
    if (method == RungeKutta::Ssp104) {
        work.q1 = state;
        work.q2 = state;
        const double h = dt / 6.0;
        for (int i = 0; i < 5; ++i) {
            rhs(work.q1, work.k);
            axpy(work.q1, h, work.k);
            work.q1.t += h;
        }
        combine(work.q2, 1.0 / 25.0, work.q1, 9.0 / 25.0);
        // q1 ← 15 q2 − 5 q1
        combine(work.q1, -5.0, work.q2, 15.0);
        for (int i = 5; i < 9; ++i) {
            rhs(work.q1, work.k);
            axpy(work.q1, h, work.k);
            work.q1.t += h;
        }
        rhs(work.q1, work.k);
        // state ← q2 + 3/5 q1 + dt/10 k
        for (std::size_t i = 0; i < state.eps.size(); ++i) {
            state.eps[i] = work.q2.eps[i] + 0.6 * work.q1.eps[i] + 0.1 * dt * work.k.eps[i];
            state.u[i] = work.q2.u[i] + 0.6 * work.q1.u[i] + 0.1 * dt * work.k.u[i];
        }
    } else {
        work.stages.resize(4);
        for (auto& st : work.stages) resize_like(st, state);
        static constexpr double c[4] = {0.0, 0.5, 0.5, 1.0};
        work.q1 = state;
        for (int s = 0; s < 4; ++s) {
            if (s > 0) {
                work.q1 = state;
                axpy(work.q1, c[s] * dt, work.stages[s - 1]);
                work.q1.t = t0 + c[s] * dt;
            }
            rhs(work.q1, work.stages[s]);
        }
        for (std::size_t i = 0; i < state.eps.size(); ++i) {
            state.eps[i] += dt / 6.0 *
                            (work.stages[0].eps[i] + 2.0 * work.stages[1].eps[i] +
                             2.0 * work.stages[2].eps[i] + work.stages[3].eps[i]);
            state.u[i] += dt / 6.0 *
                          (work.stages[0].u[i] + 2.0 * work.stages[1].u[i] + 2.0 * work.stages[2].u[i] +
                           work.stages[3].u[i]);
        }
    }
    state.t = t0 + dt;
    check_finite(state);
}

void ssprk4_advance(SimState& state, const Rhs& rhs, double dt, RungeKutta method) {
    RKWorkspace work;
    ssprk4_advance(state, rhs, dt, method, work);
}

}  // namespace layershock
