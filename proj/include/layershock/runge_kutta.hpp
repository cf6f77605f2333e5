#pragma once

#include <functional>
#include <string>
#include <vector>

#include "layershock/grid.hpp"

namespace layershock {

enum class RungeKutta {
    Ssp104,    // ten-stage, fourth-order SSP method, SSP coefficient 6
    Classic4,  // classical four-stage method
};

/// Butcher tableau. `a` is strictly lower triangular (explicit methods).
struct RKScheme {
    std::string name;
    std::vector<std::vector<double>> a;
    std::vector<double> b;
    std::vector<double> c;
    double ssp_coefficient = 0.0;

    [[nodiscard]] std::size_t stages() const noexcept { return b.size(); }
};

/// Tableau of the method as implemented by ssprk4_advance.
RKScheme rk_scheme(RungeKutta method);

/// Semi-discrete right-hand side: writes d(state)/dt into the second argument
/// (its `t` member is ignored). The input's `t` is the stage time.
using Rhs = std::function<void(const SimState&, SimState&)>;

/// Scratch storage for repeated Runge–Kutta steps.
struct RKWorkspace {
    SimState q1, q2, k;
    std::vector<SimState> stages;
};

/// One Runge–Kutta step of size dt. Ssp104 uses the two-register low-storage
/// form; Classic4 the textbook four-stage form. Throws BlowupError on
/// non-finite results.
void ssprk4_advance(SimState& state, const Rhs& rhs, double dt, RungeKutta method, RKWorkspace& work);

void ssprk4_advance(SimState& state, const Rhs& rhs, double dt, RungeKutta method = RungeKutta::Ssp104);

}  // namespace layershock
