#include "layershock/simulation.hpp"

#include <cmath>

#include "layershock/error.hpp"

namespace layershock {

std::string SchemeConfig::name() const {
    if (kind == SchemeKind::WavePropagation) return wave.order == 1 ? "wave-prop-1" : "wave-prop-2";
    return high.method == RungeKutta::Ssp104 ? "weno5-ssprk4" : "weno5-rk4";
}

std::optional<SchemeConfig> SchemeConfig::from_name(std::string_view name) {
    SchemeConfig out;
    if (name == "wave-prop-2") {
        out.wave.order = 2;
    } else if (name == "wave-prop-1") {
        out.wave.order = 1;
    } else if (name == "weno5-ssprk4") {
        out.kind = SchemeKind::MethodOfLines;
        out.high.method = RungeKutta::Ssp104;
    } else if (name == "weno5-rk4") {
        out.kind = SchemeKind::MethodOfLines;
        out.high.method = RungeKutta::Classic4;
    } else {
        return std::nullopt;
    }
    return out;
}

namespace {

class WavePropIntegrator final : public Integrator {
public:
    WavePropIntegrator(const Grid& grid, const BoundaryCondition& bc, const SolverConfig& config)
        : impl_(grid, bc, config) {}
    double step(SimState& state, double dt_max) override { return impl_.step(state, dt_max); }
    const Grid& grid() const override { return impl_.grid(); }
    const BoundaryCondition& boundary() const override { return impl_.boundary(); }

private:
    WavePropagation impl_;
};

class MolIntegrator final : public Integrator {
public:
    MolIntegrator(const Grid& grid, const BoundaryCondition& bc, const HighOrderConfig& config)
        : impl_(grid, bc, config) {}
    double step(SimState& state, double dt_max) override { return impl_.step(state, dt_max); }
    const Grid& grid() const override { return impl_.grid(); }
    const BoundaryCondition& boundary() const override { return impl_.boundary(); }

private:
    MethodOfLines impl_;
};

}  // namespace

std::unique_ptr<Integrator> make_integrator(const Grid& grid, const BoundaryCondition& bc,
                                            const SchemeConfig& scheme) {
    if (scheme.kind == SchemeKind::WavePropagation) {
        return std::make_unique<WavePropIntegrator>(grid, bc, scheme.wave);
    }
    return std::make_unique<MolIntegrator>(grid, bc, scheme.high);
}

EvolveResult evolve(SimState& state, Integrator& integrator, double t_end, double interval,
                    const SampleCallback& on_sample, double initial_work) {
    EvolveResult result;
    result.boundary_work = initial_work;
    const double t_start = state.t;
    if (t_end < t_start) throw DomainError("evolve: t_end precedes the current time");
    const bool periodic = std::holds_alternative<Periodic>(integrator.boundary());
    const Grid& grid = integrator.grid();
    const BoundaryCondition& bc = integrator.boundary();
    const double snap = 1e-10 * std::max(1.0, std::abs(t_end));

    std::size_t next_k = 1;
    auto next_target = [&]() {
        if (interval <= 0.0) return t_end;
        return std::min(t_end, t_start + static_cast<double>(next_k) * interval);
    };

    double power = periodic ? 0.0 : boundary_power(state, grid, bc, state.t);
    while (state.t < t_end - snap) {
        const double target = next_target();
        const double t_before = state.t;
        integrator.step(state, target - state.t);
        ++result.steps;
        if (std::abs(state.t - target) <= snap) state.t = target;
        if (!periodic) {
            const double next_power = boundary_power(state, grid, bc, state.t);
            result.boundary_work += 0.5 * (state.t - t_before) * (power + next_power);
            power = next_power;
        }
        if (state.t == target) {
            if (interval > 0.0 && on_sample) on_sample(state, result.boundary_work);
            if (interval > 0.0) ++next_k;
        }
    }
    state.t = std::max(state.t, t_end);
    if (interval <= 0.0 && on_sample) on_sample(state, result.boundary_work);
    return result;
}

}  // namespace layershock
