#pragma once

#include <functional>
#include <vector>

#include "layershock/diagnostics.hpp"
#include "layershock/scenario.hpp"
#include "layershock/simulation.hpp"

namespace layershock {

struct RunResult {
    SimState final_state;
    EntropySeries entropy;           // energy budget at each sample
    std::vector<SimState> snapshots;  // only when requested
    std::size_t steps = 0;
};

struct RunOptions {
    double t_end = -1.0;           // < 0: scenario.t_end
    double sample_interval = 0.0;  // <= 0: scenario.snapshot_interval, else (t_end − t_start)/100
    bool keep_snapshots = false;
    /// Called with every sampled state, including the starting one.
    std::function<void(const SimState&)> on_snapshot;
};

/// Runs the main phase of a scenario from its prepared state, recording the
/// energy budget at t_start and every sample time.
RunResult run_scenario(const Scenario& scenario, const SchemeConfig& scheme, const RunOptions& options = {});

/// Evolve from the scenario start t_s to T, negate u, evolve to 2T − t_s and
/// compare with the starting data. Entropies are taken at
/// t₀ = t_s + early_fraction·(T − t_s) and at 2T − t₀.
ReversalReport reversal_experiment(const Scenario& scenario, double T, const SchemeConfig& scheme,
                                   double early_fraction = 0.1, EntropySeries* series = nullptr);

}  // namespace layershock
