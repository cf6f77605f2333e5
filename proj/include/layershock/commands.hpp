#pragma once

#include <exception>
#include <filesystem>
#include <iosfwd>

#include "layershock/config.hpp"

namespace layershock {

/// Process exit statuses of the command-line frontend.
enum ExitCode : int { kExitOk = 0, kExitConfig = 2, kExitNumerical = 3, kExitPartialSweep = 4 };

/// Maps an exception escaping a command to its exit status.
int exit_code_for(const std::exception& error) noexcept;

/// Runs the configured scenario; writes `config.toml`, `entropy.csv` and,
/// when enabled, `snapshots/snapshot_NNNNN.csv` with an `snapshots.csv` index.
int cmd_run(const RunConfig& config, const std::filesystem::path& out, std::ostream& log);

/// Time-reversal experiment at the configured reversal time; writes
/// `config.toml` and `reversal.csv`.
int cmd_reverse(const RunConfig& config, const std::filesystem::path& out, std::ostream& log);

/// Effective-medium shock prediction for the configured medium and
/// scenario stresses. No simulation and no files.
int cmd_predict(const RunConfig& config, std::ostream& log);

/// Parameter sweep; writes `config.toml`, `sweep.csv` and, when some tuples
/// fail, `sweep_failures.csv` (exit status 4).
int cmd_sweep(const RunConfig& config, const std::filesystem::path& out, unsigned workers, std::ostream& log);

/// Reversal experiment on every grid of converge.cells_per_layer; writes
/// `config.toml` and `reversal.csv` with rates.
int cmd_converge(const RunConfig& config, const std::filesystem::path& out, std::ostream& log);

}  // namespace layershock
