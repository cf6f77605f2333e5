#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include "layershock/commands.hpp"
#include "layershock/config.hpp"
#include "layershock/error.hpp"
#include "layershock/io.hpp"
#include "support.hpp"

using namespace layershock;
using testing::Gen;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("layershock_test_" + name);
    fs::remove_all(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Small, fast run: a Gaussian on a coarse grid for a short time.
RunConfig tiny_config() {
    return parse_config(R"(
[medium]
rho_b = 2
k_b = 2

[grid]
cells_per_layer = 2

[scenario]
kind = "gaussian"
t_end = 2
)");
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("config errors carry the source location") {
        try {
            (void)parse_config("[medium]\nrho_b = 2\nfoo = 1\n", "bad.toml");
            FAIL("expected ConfigError");
        } catch (const ConfigError& e) {
            const std::string msg = e.what();
            CHECK(msg.find("bad.toml:3:") == 0);
            CHECK(msg.find("unknown key 'foo'") != std::string::npos);
        }
        CHECK_THROWS_AS(parse_config("[nonsense]\n"), ConfigError);
        CHECK_THROWS_AS(parse_config("[grid]\ncells_per_layer = \"many\"\n"), ConfigError);
        CHECK_THROWS_AS(parse_config("[scheme]\nname = \"euler\"\n"), ConfigError);
        CHECK_THROWS_AS(parse_config("[grid]\ncells_per_layer = 0\n"), ConfigError);
        CHECK_THROWS_AS(parse_config("[medium\n"), ConfigError);
        CHECK_THROWS_AS(load_config("/nonexistent/layershock.toml"), ConfigError);
    }

    TEST_CASE("emitted config parses back to the same settings") {
        const char* sources[] = {
            "",
            "[medium]\nrho_b = 4\nk_b = 1.5\n[scheme]\nname = \"weno5-ssprk4\"\ncfl = 0.3\n",
            "[medium]\nperiod = 2\nlayers = [ { width = 0.25, rho = 1, law = \"power\", K = 2, gamma = 1.4 },"
            " { width = 0.75, rho = 3, law = \"linear\", K = 5 } ]\n[scenario]\nkind = \"ly\"\n",
            "[scenario]\nkind = \"rarefaction\"\neps0 = -0.5\ntau = 3\n[converge]\ncells_per_layer = [4, 8]\n",
        };
        for (const char* src : sources) {
            const RunConfig a = parse_config(src);
            const std::string text = emit_config(a);
            const RunConfig b = parse_config(text);
            CHECK(emit_config(b) == text);
            CHECK(b.medium.layers().size() == a.medium.layers().size());
            for (std::size_t k = 0; k < a.medium.layers().size(); ++k) {
                CHECK(b.medium.layers()[k].material == a.medium.layers()[k].material);
                CHECK(b.medium.layers()[k].width_fraction == a.medium.layers()[k].width_fraction);
            }
            CHECK(b.scheme.name() == a.scheme.name());
            CHECK(b.reversal_time() == a.reversal_time());
        }
    }

    TEST_CASE("CSV numbers round trip exactly") {
        Gen g(61);
        for (int i = 0; i < 10000; ++i) {
            const double x = std::ldexp(g.uniform(-1.0, 1.0), g.integer(-300, 300));
            CHECK(std::strtod(format_double(x).c_str(), nullptr) == x);
        }
        for (double x : {0.0, -0.0, 1.0, 0.1, std::numeric_limits<double>::denorm_min(),
                         std::numeric_limits<double>::max()}) {
            CHECK(std::strtod(format_double(x).c_str(), nullptr) == x);
        }
    }

    TEST_CASE("reversal CSV reports rates only between doubled grids") {
        ReversalReport a, b, c;
        a.cells_per_layer = 12;
        a.discrepancy = 4e-2;
        b.cells_per_layer = 24;
        b.discrepancy = 1e-2;
        c.cells_per_layer = 36;
        c.discrepancy = 5e-3;
        const ReversalReport rows[] = {a, b, c};
        std::ostringstream os;
        write_reversal_csv(os, rows);
        std::istringstream in(os.str());
        std::string header, r1, r2, r3;
        std::getline(in, header);
        std::getline(in, r1);
        std::getline(in, r2);
        std::getline(in, r3);
        CHECK(header == "N,E,rate,entropy_early,entropy_late,delta_entropy");
        CHECK(r1.rfind("12,0.040000000000000001,,", 0) == 0);
        CHECK(r2.rfind("24,0.01,2,", 0) == 0);
        CHECK(r3.rfind("36,0.0050000000000000001,,", 0) == 0);
    }

    TEST_CASE("predict prints the effective-medium verdict") {
        RunConfig cfg = parse_config("[medium]\nrho_b = 2\nk_b = 2\n[scenario]\nkind = \"smooth-riemann\"\nsigma_l = 1\n");
        std::ostringstream os;
        CHECK(cmd_predict(cfg, os) == kExitOk);
        const std::string out = os.str();
        CHECK(out.find("S_eff = 1.13242") != std::string::npos);
        CHECK(out.find("verdict: shock\n") != std::string::npos);

        cfg = parse_config("[medium]\nrho_b = 4\nk_b = 4\n[scenario]\nkind = \"smooth-riemann\"\nsigma_l = 1\n");
        std::ostringstream os2;
        cmd_predict(cfg, os2);
        CHECK(os2.str().find("verdict: no shock\n") != std::string::npos);
    }

    TEST_CASE("run writes its outputs and a zero pulse keeps zero entropy") {
        RunConfig cfg = tiny_config();
        cfg.scenario.amplitude = 0.0;
        cfg.snapshot_interval = 1.0;
        const fs::path out = fresh_dir("zero");
        std::ostringstream log;
        CHECK(cmd_run(cfg, out, log) == kExitOk);
        CHECK(fs::exists(out / "config.toml"));
        CHECK(fs::exists(out / "snapshots.csv"));
        CHECK(fs::exists(out / "snapshots" / "snapshot_00000.csv"));
        CHECK(fs::exists(out / "snapshots" / "snapshot_00002.csv"));
        std::istringstream in(slurp(out / "entropy.csv"));
        std::string line;
        std::getline(in, line);
        CHECK(line == "t,entropy,entropy_rel");
        int rows = 0;
        while (std::getline(in, line)) {
            ++rows;
            const auto c1 = line.find(',');
            const auto c2 = line.find(',', c1 + 1);
            CHECK(line.substr(c1 + 1, c2 - c1 - 1) == "0");
        }
        CHECK(rows == 3);
        const std::string snap = slurp(out / "snapshots" / "snapshot_00000.csv");
        CHECK(snap.rfind("x,epsilon,u,sigma,rho,K\n", 0) == 0);
        fs::remove_all(out);
    }

    TEST_CASE("reruns are bit-identical") {
        const RunConfig cfg = tiny_config();
        const fs::path a = fresh_dir("rerun_a");
        const fs::path b = fresh_dir("rerun_b");
        std::ostringstream log;
        REQUIRE(cmd_run(cfg, a, log) == kExitOk);
        REQUIRE(cmd_run(cfg, b, log) == kExitOk);
        CHECK(slurp(a / "entropy.csv") == slurp(b / "entropy.csv"));
        for (const auto& entry : fs::directory_iterator(a / "snapshots")) {
            CHECK(slurp(entry.path()) == slurp(b / "snapshots" / entry.path().filename()));
        }
        fs::remove_all(a);
        fs::remove_all(b);
    }

    TEST_CASE("exit codes") {
        CHECK(exit_code_for(ConfigError("x")) == kExitConfig);
        CHECK(exit_code_for(BlowupError("x")) == kExitNumerical);
        CHECK(exit_code_for(DomainError("x")) == kExitNumerical);
        CHECK(exit_code_for(std::runtime_error("x")) == kExitNumerical);
    }
}
