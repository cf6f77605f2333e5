#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "layershock/grid.hpp"

namespace layershock {

/// Total energy Σ_i (½ρ_i u_i² + Φ_i(ε_i)) dx, summed left to right.
double total_entropy(const SimState& state, const Grid& grid);

/// (ε, u) → (ε, −u).
SimState time_reverse(const SimState& state);

/// Max-norm of the pointwise difference. Throws DomainError on length mismatch.
double discrepancy(std::span<const double> a, std::span<const double> b);

struct EntropySample {
    double t;
    double entropy;
};

/// Entropy history. Values are energy budgets S(t) − W(t) where W is the
/// work done through the domain edges (zero for periodic runs), so that
/// they stay constant for smooth solutions under any boundary condition.
class EntropySeries {
public:
    EntropySeries() = default;
    explicit EntropySeries(std::vector<EntropySample> samples);

    /// Appends a sample; times must be strictly increasing.
    void add(double t, double entropy);

    [[nodiscard]] const std::vector<EntropySample>& samples() const noexcept { return samples_; }
    [[nodiscard]] bool empty() const noexcept { return samples_.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return samples_.size(); }
    /// Value at the first sample.
    [[nodiscard]] double initial() const;
    [[nodiscard]] double final_value() const;
    /// entropy / initial; 1 when the initial entropy is zero.
    [[nodiscard]] double relative(std::size_t i) const;

private:
    std::vector<EntropySample> samples_;
};

struct ShockClassification {
    bool shock = false;
    double drop = 0.0;  // (S(t_a) − S(t_end)) / S(0)
};

/// Declares a shock when the relative entropy drop over [window_start·t_end,
/// t_end] exceeds tol. Throws DomainError when fewer than two samples fall
/// in the window.
ShockClassification classify_shock_formation(const EntropySeries& series, double window_start = 0.2,
                                             double tol = 1e-3);

struct ConvergenceRow {
    int cells_per_layer;
    double error;
    double rate;  // NaN for the first row
};

struct ConvergenceTable {
    std::vector<ConvergenceRow> rows;
};

/// Rates log₂(E_coarse / E_fine) between successive rows. Throws DomainError
/// unless every N doubles the previous one.
ConvergenceTable convergence_rates(std::span<const std::pair<int, double>> rows);

struct FrontTrace {
    std::vector<std::pair<double, double>> positions;  // (t, x_front)
    double speed = 0.0;
    double intercept = 0.0;
    double residual = 0.0;  // RMS deviation from the fitted line
};

/// Tracks the leading crossing of σ = σ_r + threshold_fraction·(σ_l − σ_r),
/// scanning from the σ_r side of the domain (the right edge), with linear
/// interpolation between cell centres. The speed is the least-squares slope.
/// Requires at least three snapshots with increasing times.
FrontTrace measure_front_speed(std::span<const SimState> snapshots, const Grid& grid, double sigma_l,
                               double sigma_r, double threshold_fraction = 0.5);

/// Left/right states taken from the outermost cells of the first snapshot.
FrontTrace measure_front_speed(std::span<const SimState> snapshots, const Grid& grid,
                               double threshold_fraction = 0.5);

/// Time-reversal experiment outcome.
struct ReversalReport {
    double reversal_time = 0.0;   // T
    double start_time = 0.0;      // time of the reference data
    double discrepancy = 0.0;     // ‖u_final − u_ref‖∞ after undoing the reversal
    double strain_discrepancy = 0.0;
    double entropy_early = 0.0;   // at t₀
    double entropy_late = 0.0;    // at 2T − t₀
    double entropy_initial = 0.0;
    int cells_per_layer = 0;
    std::string scheme;
    SimState forward_state;       // state at T, before reversal
};

}  // namespace layershock
