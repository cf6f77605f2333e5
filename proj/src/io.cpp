#include "layershock/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <vector>

#include "layershock/error.hpp"

namespace layershock {

namespace {

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

}  // namespace

std::string format_double(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

void write_snapshot_csv(std::ostream& os, const SimState& state, const Grid& grid) {
    if (state.size() != grid.size()) throw DomainError("snapshot size does not match the grid");
    os << "x,epsilon,u,sigma,rho,K\n";
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const Material& mat = grid.material(i);
        os << format_double(grid.center(i)) << ',' << format_double(state.eps[i]) << ','
           << format_double(state.u[i]) << ',' << format_double(mat.law.stress(state.eps[i])) << ','
           << format_double(mat.rho) << ',' << format_double(mat.law.modulus_parameter()) << '\n';
    }
}

void write_entropy_csv(std::ostream& os, const EntropySeries& series) {
    os << "t,entropy,entropy_rel\n";
    for (std::size_t i = 0; i < series.size(); ++i) {
        const auto& s = series.samples()[i];
        os << format_double(s.t) << ',' << format_double(s.entropy) << ',' << format_double(series.relative(i))
           << '\n';
    }
}

void write_reversal_csv(std::ostream& os, std::span<const ReversalReport> reports) {
    os << "N,E,rate,entropy_early,entropy_late,delta_entropy\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        std::string rate;
        if (i > 0 && r.cells_per_layer == 2 * reports[i - 1].cells_per_layer) {
            rate = format_double(std::log2(reports[i - 1].discrepancy / r.discrepancy));
        }
        os << r.cells_per_layer << ',' << format_double(r.discrepancy) << ',' << rate << ','
           << format_double(r.entropy_early) << ',' << format_double(r.entropy_late) << ','
           << format_double(r.entropy_late - r.entropy_early) << '\n';
    }
}

void write_sweep_csv(std::ostream& os, const SweepResult& result) {
    os << "rho_B,K_B,sigma_l,S_eff,entropy_ratio,shock\n";
    for (const auto& r : result.rows) {
        if (r.failed()) continue;
        os << format_double(r.rho_b) << ',' << format_double(r.k_b) << ',' << format_double(r.sigma_l) << ','
           << format_double(r.S_eff) << ',' << format_double(r.entropy_ratio) << ',' << (r.shock ? "true" : "false")
           << '\n';
    }
}

void write_sweep_failures_csv(std::ostream& os, const SweepResult& result) {
    os << "rho_B,K_B,sigma_l,error\n";
    for (const auto& r : result.rows) {
        if (!r.failed()) continue;
        os << format_double(r.rho_b) << ',' << format_double(r.k_b) << ',' << format_double(r.sigma_l) << ','
           << csv_quote(r.error) << '\n';
    }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::error_code ec;
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw Error("cannot create directory " + path.parent_path().string() + ": " + ec.message());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    out << text;
    out.close();
    if (!out) throw Error("failed writing " + path.string());
}

}  // namespace layershock
