#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "layershock/medium.hpp"
#include "layershock/scenario.hpp"
#include "layershock/simulation.hpp"
#include "layershock/sweep.hpp"

namespace layershock {

enum class ScenarioKind { Gaussian, Ly, SmoothRiemann, EffectiveShock, Rarefaction };

std::string_view to_string(ScenarioKind kind) noexcept;
std::optional<ScenarioKind> parse_scenario_kind(std::string_view name) noexcept;

/// Scenario selection; parameters not used by the chosen kind are ignored.
struct ScenarioParams {
    ScenarioKind kind = ScenarioKind::Gaussian;
    double amplitude = 0.2;
    double width = 5.0;
    double center = 50.0;
    double sigma_l = 1.0;
    double sigma_r = 0.0;
    double transition_width = 2.0;
    double x_jump = 30.0;
    double eps0 = -1.0;
    double tau = 10.0;
    double x0 = 20.0;
    std::optional<double> t_end;          // scenario default when absent
    std::optional<double> reversal_time;  // scenario default when absent
};

/// Fully deterministic description of a run.
struct RunConfig {
    Medium medium = ly_medium(1.0);
    int cells_per_layer = 24;
    std::optional<double> x_lo;
    std::optional<double> x_hi;
    SchemeConfig scheme;
    ScenarioParams scenario;
    std::string out_dir;            // empty: caller's default
    double snapshot_interval = 0.0;  // 0: scenario default; snapshots written when `snapshots`
    bool snapshots = true;
    SweepSpec sweep = SweepSpec::desk_scale();
    std::vector<int> converge_cells = {12, 24, 48, 96};

    /// Throws ConfigError on inconsistent values.
    void validate() const;
    /// Scenario with the medium, grid and time overrides applied.
    [[nodiscard]] Scenario build_scenario() const;
    /// Reversal time used by `reverse` and `converge`.
    [[nodiscard]] double reversal_time() const;
};

/// Parses TOML text with sections [medium], [grid], [scheme], [scenario],
/// [output], [sweep] and [converge]. Unknown sections or keys and ill-typed
/// values raise ConfigError naming `source` with line and column.
RunConfig parse_config(std::string_view text, const std::string& source = "<config>");
RunConfig load_config(const std::filesystem::path& path);

/// TOML text with every setting resolved; parse_config of the result
/// reproduces the configuration exactly.
std::string emit_config(const RunConfig& config);

}  // namespace layershock
