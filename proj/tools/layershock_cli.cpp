#include <cstdlib>
#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "layershock/commands.hpp"
#include "layershock/error.hpp"

using namespace layershock;

namespace {

// Default output directory when neither --out nor output.dir is given.
constexpr const char* kOutEnv = "LAYERSHOCK_OUT";

struct Overrides {
    std::string config_path;
    std::string out;
    unsigned workers = 1;
    std::string scheme;
    std::string limiter;
    int cells_per_layer = 0;
    std::optional<double> t_end;
    std::optional<double> reversal_time;
    std::optional<double> sigma_l;
    std::optional<double> sigma_r;
};

RunConfig resolve(const Overrides& o) {
    RunConfig c = o.config_path.empty() ? RunConfig{} : load_config(o.config_path);
    if (!o.scheme.empty()) {
        const auto scheme = SchemeConfig::from_name(o.scheme);
        if (!scheme) throw ConfigError("--scheme: unknown scheme '" + o.scheme + "'");
        const Limiter keep = c.scheme.wave.limiter;
        c.scheme = *scheme;
        c.scheme.wave.limiter = keep;
    }
    if (!o.limiter.empty()) {
        const auto lim = parse_limiter(o.limiter);
        if (!lim) throw ConfigError("--limiter: unknown limiter '" + o.limiter + "'");
        c.scheme.wave.limiter = *lim;
    }
    if (o.cells_per_layer > 0) {
        c.cells_per_layer = o.cells_per_layer;
        c.sweep.cells_per_layer = o.cells_per_layer;
    }
    if (o.t_end) c.scenario.t_end = *o.t_end;
    if (o.reversal_time) c.scenario.reversal_time = *o.reversal_time;
    if (o.sigma_l) c.scenario.sigma_l = *o.sigma_l;
    if (o.sigma_r) c.scenario.sigma_r = *o.sigma_r;
    if (!o.out.empty()) {
        c.out_dir = o.out;
    } else if (c.out_dir.empty()) {
        const char* env = std::getenv(kOutEnv);
        c.out_dir = env && *env ? env : "out";
    }
    c.validate();
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite-volume nonlinear waves in layered periodic media"};
    app.require_subcommand(1);
    app.fallthrough();
    Overrides o;
    app.add_option("--config", o.config_path, "TOML run configuration")->check(CLI::ExistingFile);
    app.add_option("--out", o.out, std::string("output directory (default: output.dir, then $") + kOutEnv + ", then ./out)");
    app.add_option("--workers", o.workers, "sweep worker threads (0: one per hardware thread)");
    app.add_option("--scheme", o.scheme, "wave-prop-2, wave-prop-1, weno5-ssprk4 or weno5-rk4");
    app.add_option("--limiter", o.limiter, "none, minmod, superbee, mc or vanleer");
    app.add_option("--cells-per-layer", o.cells_per_layer, "grid resolution")->check(CLI::PositiveNumber);

    auto* run = app.add_subcommand("run", "evolve the configured scenario and write snapshots and entropy.csv");
    run->add_option("--t-end", o.t_end, "end time");
    auto* reverse = app.add_subcommand("reverse", "time-reversal experiment, writes reversal.csv");
    reverse->add_option("--time", o.reversal_time, "reversal time T");
    auto* predict = app.add_subcommand("predict", "effective shock speed prediction");
    predict->add_option("--sigma-l", o.sigma_l, "stress behind the front");
    predict->add_option("--sigma-r", o.sigma_r, "stress ahead of the front");
    auto* sweep = app.add_subcommand("sweep", "S_eff validation sweep, writes sweep.csv");
    auto* converge = app.add_subcommand("converge", "reversal discrepancy on a dyadic grid sequence");
    converge->add_option("--time", o.reversal_time, "reversal time T");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        const RunConfig config = resolve(o);
        const std::filesystem::path out = config.out_dir;
        if (*run) return cmd_run(config, out, std::cout);
        if (*reverse) return cmd_reverse(config, out, std::cout);
        if (*predict) return cmd_predict(config, std::cout);
        if (*sweep) return cmd_sweep(config, out, o.workers, std::cout);
        if (*converge) return cmd_converge(config, out, std::cout);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e);
    }
    return kExitOk;
}
