#include "layershock/experiment.hpp"

#include <cmath>

#include "layershock/error.hpp"

namespace layershock {

RunResult run_scenario(const Scenario& scenario, const SchemeConfig& scheme, const RunOptions& options) {
    const Grid grid = scenario.make_grid();
    SimState state = prepared_state(scenario, grid, scheme);
    const double t_end = options.t_end < 0.0 ? scenario.t_end : options.t_end;
    if (t_end < state.t) throw DomainError("run end time precedes the scenario start");
    double interval = options.sample_interval;
    if (interval <= 0.0) interval = scenario.snapshot_interval;
    if (interval <= 0.0) interval = (t_end - state.t) / 100.0;

    RunResult result;
    auto record = [&](const SimState& s, double work) {
        result.entropy.add(s.t, total_entropy(s, grid) - work);
        if (options.keep_snapshots) result.snapshots.push_back(s);
        if (options.on_snapshot) options.on_snapshot(s);
    };
    record(state, 0.0);
    if (t_end > state.t) {
        const auto integrator = make_integrator(grid, scenario.bc, scheme);
        result.steps = evolve(state, *integrator, t_end, interval, record).steps;
    }
    result.final_state = std::move(state);
    return result;
}

ReversalReport reversal_experiment(const Scenario& scenario, double T, const SchemeConfig& scheme,
                                   double early_fraction, EntropySeries* series) {
    const Grid grid = scenario.make_grid();
    SimState state = prepared_state(scenario, grid, scheme);
    const double t_s = state.t;
    if (!(T > t_s)) throw DomainError("reversal time must follow the scenario start");
    if (!(early_fraction > 0.0 && early_fraction < 1.0)) throw DomainError("early_fraction must lie in (0, 1)");

    ReversalReport report;
    report.reversal_time = T;
    report.start_time = t_s;
    report.cells_per_layer = scenario.cells_per_layer;
    report.scheme = scheme.name();

    const SimState reference = state;
    report.entropy_initial = total_entropy(state, grid);
    const double t_early = t_s + early_fraction * (T - t_s);
    const double t_late = 2.0 * T - t_early;
    const auto integrator = make_integrator(grid, scenario.bc, scheme);

    if (series) series->add(t_s, report.entropy_initial);
    const double interval = (T - t_s) / 100.0;
    const double tol = 1e-9 * std::max(1.0, T);
    auto sample = [&](const SimState& s, double work) {
        const double e = total_entropy(s, grid) - work;
        if (std::abs(s.t - t_early) <= tol) report.entropy_early = e;
        if (std::abs(s.t - t_late) <= tol) report.entropy_late = e;
        if (series) series->add(s.t, e);
    };

    // Stop exactly at the entropy probe time lying inside [state.t, t_stop].
    auto run_to = [&](double t_stop, double work) {
        for (double probe : {t_early, t_late}) {
            if (state.t < probe && probe < t_stop) {
                work = evolve(state, *integrator, probe, std::min(interval, probe - state.t), sample, work)
                           .boundary_work;
            }
        }
        return evolve(state, *integrator, t_stop, interval, sample, work).boundary_work;
    };

    double work = run_to(T, 0.0);
    report.forward_state = state;
    state = time_reverse(state);
    work = run_to(2.0 * T - t_s, work);

    const SimState undone = time_reverse(state);
    report.discrepancy = discrepancy(undone.u, reference.u);
    report.strain_discrepancy = discrepancy(undone.eps, reference.eps);
    return report;
}

}  // namespace layershock
