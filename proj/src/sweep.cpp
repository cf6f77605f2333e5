#include "layershock/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "layershock/error.hpp"
#include "layershock/experiment.hpp"

namespace layershock {

SweepSpec SweepSpec::desk_scale() {
    SweepSpec spec;
    spec.rho_b = {1.5, 2.0, 4.0};
    spec.sigma_l = {0.1, 0.5, 1.0, 2.0, 4.0};
    spec.paired = true;
    return spec;
}

void SweepSpec::validate() const {
    if (cells_per_layer < 1) throw ConfigError("sweep cells_per_layer must be positive");
    if (!(reversal_time > 0.0)) throw ConfigError("sweep reversal time must be positive");
    if (!(tol >= 0.0)) throw ConfigError("sweep tolerance must be non-negative");
    auto positive = [](const std::vector<double>& v, const char* what) {
        if (v.empty()) throw ConfigError(std::string("sweep ") + what + " range is empty");
        for (double x : v) {
            if (!(x > 0.0)) throw ConfigError(std::string("sweep ") + what + " values must be positive");
        }
    };
    positive(rho_b, "rho_B");
    if (!paired) positive(k_b, "K_B");
    positive(sigma_l, "sigma_l");
}

std::size_t SweepResult::failures() const {
    return static_cast<std::size_t>(std::ranges::count_if(rows, [](const SweepRow& r) { return r.failed(); }));
}

double SweepResult::agreement() const {
    std::size_t ok = 0;
    std::size_t total = 0;
    for (const auto& r : rows) {
        if (r.failed()) continue;
        ++total;
        if (r.shock == (r.S_eff > 1.0)) ++ok;
    }
    return total == 0 ? 0.0 : static_cast<double>(ok) / static_cast<double>(total);
}

SweepRow sweep_row(double rho_b, double k_b, double sigma_l, const SweepSpec& spec) {
    SweepRow row;
    row.rho_b = rho_b;
    row.k_b = k_b;
    row.sigma_l = sigma_l;
    row.S_eff = std::numeric_limits<double>::quiet_NaN();
    row.entropy_ratio = std::numeric_limits<double>::quiet_NaN();
    try {
        const Medium medium = Medium::exponential_pair(rho_b, k_b);
        row.S_eff = s_eff_relative(medium, sigma_l, 0.0);
        Scenario scenario = smooth_riemann_scenario(medium, sigma_l);
        scenario.cells_per_layer = spec.cells_per_layer;
        EntropySeries series;
        reversal_experiment(scenario, spec.reversal_time, spec.scheme, 0.1, &series);
        row.entropy_ratio = series.final_value() / series.initial();
        row.shock = classify_shock_formation(series, 0.2, spec.tol).shock;
    } catch (const std::exception& e) {
        row.error = e.what();
        if (row.error.empty()) row.error = "unknown failure";
    }
    return row;
}

SweepResult seff_sweep(const SweepSpec& spec, unsigned workers) {
    spec.validate();
    struct Tuple {
        double rho, k, sigma;
    };
    std::vector<Tuple> tuples;
    for (double rho : spec.rho_b) {
        const std::vector<double> ks = spec.paired ? std::vector<double>{rho} : spec.k_b;
        for (double k : ks) {
            for (double s : spec.sigma_l) tuples.push_back({rho, k, s});
        }
    }
    std::ranges::sort(tuples, [](const Tuple& a, const Tuple& b) {
        if (a.rho != b.rho) return a.rho < b.rho;
        if (a.k != b.k) return a.k < b.k;
        return a.sigma < b.sigma;
    });

    SweepResult result;
    result.rows.resize(tuples.size());
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(1, tuples.size())));

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < tuples.size(); i = next++) {
            result.rows[i] = sweep_row(tuples[i].rho, tuples[i].k, tuples[i].sigma, spec);
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    return result;
}

}  // namespace layershock
