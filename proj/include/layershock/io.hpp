#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>

#include "layershock/diagnostics.hpp"
#include "layershock/grid.hpp"
#include "layershock/sweep.hpp"

namespace layershock {

/// Shortest-safe decimal form of a double: 17 significant digits, so the
/// text parses back to the same binary value.
std::string format_double(double value);

/// Header `x,epsilon,u,sigma,rho,K`, one row per cell in ascending x.
void write_snapshot_csv(std::ostream& os, const SimState& state, const Grid& grid);

/// Header `t,entropy,entropy_rel`.
void write_entropy_csv(std::ostream& os, const EntropySeries& series);

/// Header `N,E,rate,entropy_early,entropy_late,delta_entropy`; rows in the
/// given order, rates between successive dyadic rows (empty otherwise).
void write_reversal_csv(std::ostream& os, std::span<const ReversalReport> reports);

/// Header `rho_B,K_B,sigma_l,S_eff,entropy_ratio,shock`. Failed rows are
/// skipped here and listed by write_sweep_failures_csv.
void write_sweep_csv(std::ostream& os, const SweepResult& result);

/// Header `rho_B,K_B,sigma_l,error`, one row per failed tuple.
void write_sweep_failures_csv(std::ostream& os, const SweepResult& result);

/// Writes `text` to `path`, creating parent directories. Throws Error on
/// I/O failure.
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace layershock
