#include "layershock/diagnostics.hpp"

#include <cmath>
#include <limits>
#include <optional>

#include "layershock/error.hpp"

namespace layershock {

double total_entropy(const SimState& state, const Grid& grid) {
    if (state.size() != grid.size()) throw DomainError("total_entropy: state size does not match grid");
    double acc = 0.0;
    for (std::size_t i = 0; i < state.size(); ++i) {
        const Material& m = grid.material(i);
        acc += 0.5 * m.rho * state.u[i] * state.u[i] + m.law.potential(state.eps[i]);
    }
    return acc * grid.dx();
}

SimState time_reverse(const SimState& state) {
    SimState out = state;
    for (auto& v : out.u) v = -v;
    return out;
}

double discrepancy(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw DomainError("discrepancy: field lengths differ");
    double e = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) e = std::max(e, std::abs(a[i] - b[i]));
    return e;
}

EntropySeries::EntropySeries(std::vector<EntropySample> samples) {
    for (const auto& s : samples) add(s.t, s.entropy);
}

void EntropySeries::add(double t, double entropy) {
    if (!samples_.empty() && !(t > samples_.back().t)) {
        throw DomainError("entropy series times must be strictly increasing");
    }
    samples_.push_back({t, entropy});
}

double EntropySeries::initial() const {
    if (samples_.empty()) throw DomainError("empty entropy series");
    return samples_.front().entropy;
}

double EntropySeries::final_value() const {
    if (samples_.empty()) throw DomainError("empty entropy series");
    return samples_.back().entropy;
}

double EntropySeries::relative(std::size_t i) const {
    const double s0 = initial();
    return s0 == 0.0 ? 1.0 : samples_.at(i).entropy / s0;
}

ShockClassification classify_shock_formation(const EntropySeries& series, double window_start, double tol) {
    if (series.size() < 2) throw DomainError("classify_shock_formation: insufficient data");
    const auto& s = series.samples();
    const double t0 = s.front().t;
    const double t_end = s.back().t;
    const double t_a = t0 + window_start * (t_end - t0);
    std::size_t first = s.size();
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i].t >= t_a) {
            first = i;
            break;
        }
    }
    if (first + 1 >= s.size()) throw DomainError("classify_shock_formation: insufficient data in window");
    ShockClassification out;
    const double s0 = series.initial();
    out.drop = s0 == 0.0 ? 0.0 : (s[first].entropy - s.back().entropy) / s0;
    out.shock = out.drop > tol;
    return out;
}

ConvergenceTable convergence_rates(std::span<const std::pair<int, double>> rows) {
    ConvergenceTable table;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        ConvergenceRow row{rows[k].first, rows[k].second, std::numeric_limits<double>::quiet_NaN()};
        if (k > 0) {
            if (rows[k].first != 2 * rows[k - 1].first) {
                throw DomainError("convergence_rates: cells per layer must double between rows");
            }
            row.rate = std::log2(rows[k - 1].second / rows[k].second);
        }
        table.rows.push_back(row);
    }
    return table;
}

namespace {

std::optional<double> front_position(const SimState& s, const Grid& grid, double level, double sign) {
    const auto sigma = cell_stress(s, grid);
    const std::size_t m = sigma.size();
    // g > 0 on the σ_l side of the level
    auto g = [&](std::size_t i) { return sign * (sigma[i] - level); };
    for (std::size_t k = m; k-- > 0;) {
        if (g(k) >= 0.0) {
            if (k + 1 == m) return std::nullopt;  // σ_l side already at the right edge
            const double g0 = g(k);
            const double g1 = g(k + 1);
            const double frac = g0 / (g0 - g1);
            return grid.center(k) + frac * grid.dx();
        }
    }
    return std::nullopt;
}

}  // namespace

FrontTrace measure_front_speed(std::span<const SimState> snapshots, const Grid& grid, double sigma_l,
                               double sigma_r, double threshold_fraction) {
    if (snapshots.size() < 3) throw DomainError("measure_front_speed: at least three snapshots required");
    if (sigma_l == sigma_r) throw DomainError("measure_front_speed: sigma_l equals sigma_r");
    const double level = sigma_r + threshold_fraction * (sigma_l - sigma_r);
    const double sign = sigma_l > sigma_r ? 1.0 : -1.0;

    FrontTrace trace;
    for (std::size_t k = 0; k < snapshots.size(); ++k) {
        if (k > 0 && !(snapshots[k].t > snapshots[k - 1].t)) {
            throw DomainError("measure_front_speed: snapshot times must increase");
        }
        const auto x = front_position(snapshots[k], grid, level, sign);
        if (!x) throw DomainError("measure_front_speed: no front crossing at t=" + std::to_string(snapshots[k].t));
        trace.positions.emplace_back(snapshots[k].t, *x);
    }

    const double n = static_cast<double>(trace.positions.size());
    double st = 0.0;
    double sx = 0.0;
    for (const auto& [t, x] : trace.positions) {
        st += t;
        sx += x;
    }
    const double tm = st / n;
    const double xm = sx / n;
    double stt = 0.0;
    double stx = 0.0;
    for (const auto& [t, x] : trace.positions) {
        stt += (t - tm) * (t - tm);
        stx += (t - tm) * (x - xm);
    }
    trace.speed = stx / stt;
    trace.intercept = xm - trace.speed * tm;
    double ss = 0.0;
    for (const auto& [t, x] : trace.positions) {
        const double r = x - (trace.intercept + trace.speed * t);
        ss += r * r;
    }
    trace.residual = std::sqrt(ss / n);
    return trace;
}

FrontTrace measure_front_speed(std::span<const SimState> snapshots, const Grid& grid, double threshold_fraction) {
    if (snapshots.empty()) throw DomainError("measure_front_speed: no snapshots");
    const auto sigma = cell_stress(snapshots.front(), grid);
    return measure_front_speed(snapshots, grid, sigma.front(), sigma.back(), threshold_fraction);
}

}  // namespace layershock
