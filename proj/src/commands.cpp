#include "layershock/commands.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>
#include <vector>

#include "layershock/error.hpp"
#include "layershock/experiment.hpp"
#include "layershock/io.hpp"

namespace layershock {

namespace {

template <class Writer>
void write_file(const std::filesystem::path& path, Writer&& writer) {
    std::ostringstream os;
    writer(os);
    write_text_file(path, os.str());
}

void write_config(const RunConfig& config, const std::filesystem::path& out) {
    write_text_file(out / "config.toml", emit_config(config));
}

std::string snapshot_name(std::size_t index) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "snapshot_%05zu.csv", index);
    return buf;
}

}  // namespace

int exit_code_for(const std::exception& error) noexcept {
    if (dynamic_cast<const ConfigError*>(&error)) return kExitConfig;
    return kExitNumerical;
}

int cmd_run(const RunConfig& config, const std::filesystem::path& out, std::ostream& log) {
    const Scenario scenario = config.build_scenario();
    const Grid grid = scenario.make_grid();
    write_config(config, out);

    std::ostringstream index;
    index << "index,t,file\n";
    std::size_t count = 0;
    RunOptions options;
    if (config.snapshots) {
        options.on_snapshot = [&](const SimState& s) {
            const std::string name = snapshot_name(count++);
            write_file(out / "snapshots" / name, [&](std::ostream& os) { write_snapshot_csv(os, s, grid); });
            index << count - 1 << ',' << format_double(s.t) << ",snapshots/" << name << '\n';
        };
    }
    const RunResult result = run_scenario(scenario, config.scheme, options);
    write_file(out / "entropy.csv", [&](std::ostream& os) { write_entropy_csv(os, result.entropy); });
    if (config.snapshots) write_text_file(out / "snapshots.csv", index.str());

    log << "scenario " << scenario.name << ", scheme " << config.scheme.name() << ", " << grid.size()
        << " cells, " << result.steps << " steps\n";
    log << "relative entropy at t=" << format_double(result.entropy.samples().back().t) << ": "
        << format_double(result.entropy.relative(result.entropy.size() - 1)) << '\n';
    if (result.entropy.size() >= 2) {
        try {
            const ShockClassification c = classify_shock_formation(result.entropy);
            log << "shock formation: " << (c.shock ? "yes" : "no") << " (post-transient drop "
                << format_double(c.drop) << ")\n";
        } catch (const DomainError&) {
            log << "shock formation: not classified (too few samples)\n";
        }
    }
    return kExitOk;
}

int cmd_reverse(const RunConfig& config, const std::filesystem::path& out, std::ostream& log) {
    const Scenario scenario = config.build_scenario();
    write_config(config, out);
    const ReversalReport report = reversal_experiment(scenario, config.reversal_time(), config.scheme);
    const std::vector<ReversalReport> reports{report};
    write_file(out / "reversal.csv", [&](std::ostream& os) { write_reversal_csv(os, reports); });
    const double loss = (report.entropy_early - report.entropy_late) / report.entropy_initial;
    log << "reversal at T=" << format_double(report.reversal_time) << ": E = " << format_double(report.discrepancy)
        << ", entropy loss between symmetric times " << format_double(loss) << '\n';
    log << (loss > config.sweep.tol ? "irreversible: shock formation indicated\n" : "reversible within tolerance\n");
    return kExitOk;
}

int cmd_predict(const RunConfig& config, std::ostream& log) {
    const double sigma_l = config.scenario.sigma_l;
    const double sigma_r = config.scenario.sigma_r;
    ShockPrediction p{};
    try {
        p = predict_shock(config.medium, sigma_l, sigma_r);
    } catch (const DomainError& e) {
        throw ConfigError(std::string("predict: ") + e.what());
    } catch (const RangeError& e) {
        throw ConfigError(std::string("predict: ") + e.what());
    }
    log << "sigma_l = " << format_double(sigma_l) << "\nsigma_r = " << format_double(sigma_r)
        << "\nc_hat = " << format_double(p.c_hat) << "\nc_eff = " << format_double(p.c_eff)
        << "\ns_eff = " << format_double(p.s_eff) << "\nS_eff = " << format_double(p.S_eff)
        << "\nverdict: " << (p.shock() ? "shock" : "no shock") << '\n';
    return kExitOk;
}

int cmd_sweep(const RunConfig& config, const std::filesystem::path& out, unsigned workers, std::ostream& log) {
    SweepSpec spec = config.sweep;
    spec.scheme = config.scheme;
    write_config(config, out);
    const SweepResult result = seff_sweep(spec, workers);
    write_file(out / "sweep.csv", [&](std::ostream& os) { write_sweep_csv(os, result); });
    const std::size_t failed = result.failures();
    if (failed > 0) {
        write_file(out / "sweep_failures.csv", [&](std::ostream& os) { write_sweep_failures_csv(os, result); });
    }
    log << result.rows.size() << " tuples, " << failed << " failed, agreement with S_eff > 1: "
        << format_double(result.agreement()) << '\n';
    for (const auto& r : result.rows) {
        if (r.failed()) log << "  failed (" << r.rho_b << ", " << r.k_b << ", " << r.sigma_l << "): " << r.error << '\n';
    }
    return failed > 0 ? kExitPartialSweep : kExitOk;
}

int cmd_converge(const RunConfig& config, const std::filesystem::path& out, std::ostream& log) {
    write_config(config, out);
    std::vector<ReversalReport> reports;
    std::vector<std::pair<int, double>> rows;
    for (int n : config.converge_cells) {
        RunConfig c = config;
        c.cells_per_layer = n;
        reports.push_back(reversal_experiment(c.build_scenario(), config.reversal_time(), config.scheme));
        rows.emplace_back(n, reports.back().discrepancy);
        log << "N=" << n << "  E=" << format_double(reports.back().discrepancy) << '\n';
    }
    write_file(out / "reversal.csv", [&](std::ostream& os) { write_reversal_csv(os, reports); });
    const ConvergenceTable table = convergence_rates(rows);
    for (std::size_t i = 1; i < table.rows.size(); ++i) {
        log << "rate " << table.rows[i - 1].cells_per_layer << "->" << table.rows[i].cells_per_layer << ": "
            << format_double(table.rows[i].rate) << '\n';
    }
    return kExitOk;
}

}  // namespace layershock
