#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "layershock/simulation.hpp"

namespace layershock {

/// Parameter grid for the effective-shock-speed validation sweep. Tuples are
/// visited in lexicographic (ρ_B, K_B, σ_l) order; with `paired` set, K_B
/// takes the value of ρ_B and `k_b` is ignored.
struct SweepSpec {
    std::vector<double> rho_b;
    std::vector<double> k_b;
    std::vector<double> sigma_l;
    bool paired = false;
    int cells_per_layer = 24;
    SchemeConfig scheme;
    double reversal_time = 100.0;
    double tol = 1e-3;  // classify_shock_formation tolerance over the whole 2T record

    /// ρ_B = K_B ∈ {1.5, 2, 4}, σ_l ∈ {0.1, 0.5, 1, 2, 4}.
    static SweepSpec desk_scale();
    void validate() const;
};

struct SweepRow {
    double rho_b = 0.0;
    double k_b = 0.0;
    double sigma_l = 0.0;
    double S_eff = 0.0;
    double entropy_ratio = 0.0;  // energy budget at 2T over its initial value
    bool shock = false;
    std::string error;           // empty unless the run failed

    [[nodiscard]] bool failed() const noexcept { return !error.empty(); }
};

struct SweepResult {
    std::vector<SweepRow> rows;

    [[nodiscard]] std::size_t failures() const;
    /// Share of successful rows whose shock flag matches S_eff > 1.
    [[nodiscard]] double agreement() const;
};

/// Smooth-transition reverse protocol for one tuple: evolve to T, negate the
/// velocity, continue to 2T. The shock flag is classify_shock_formation on
/// the budget series; failures are recorded in the row.
SweepRow sweep_row(double rho_b, double k_b, double sigma_l, const SweepSpec& spec);

/// Runs every tuple on `workers` threads (0: one per hardware thread). Rows
/// keep the lexicographic order whatever the scheduling.
SweepResult seff_sweep(const SweepSpec& spec, unsigned workers = 1);

}  // namespace layershock
