#include "layershock/config.hpp"

#include <array>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include <toml.hpp>

#include "layershock/error.hpp"
#include "layershock/io.hpp"

namespace layershock {

namespace {

constexpr std::array<std::pair<ScenarioKind, std::string_view>, 5> kScenarioNames{{
    {ScenarioKind::Gaussian, "gaussian"},
    {ScenarioKind::Ly, "ly"},
    {ScenarioKind::SmoothRiemann, "smooth-riemann"},
    {ScenarioKind::EffectiveShock, "effective-shock"},
    {ScenarioKind::Rarefaction, "rarefaction"},
}};

std::string location(const std::string& source, const toml::source_region& region) {
    return source + ":" + std::to_string(region.begin.line) + ":" + std::to_string(region.begin.column);
}

// Typed access to one table that remembers where it came from.
class Section {
public:
    Section(const toml::table& table, std::string name, const std::string& source)
        : table_(table), name_(std::move(name)), source_(source) {}

    void allow(std::initializer_list<std::string_view> keys) const {
        for (const auto& [key, node] : table_) {
            bool known = false;
            for (auto k : keys) known = known || key.str() == k;
            if (!known) fail(node, "unknown key '" + std::string(key.str()) + "' in " + name_);
        }
    }

    [[noreturn]] void fail(const toml::node& node, const std::string& message) const {
        throw ConfigError(location(source_, node.source()) + ": " + message);
    }
    [[noreturn]] void fail(const std::string& message) const {
        throw ConfigError(location(source_, table_.source()) + ": " + message);
    }

    [[nodiscard]] const toml::node* find(std::string_view key) const { return table_.get(key); }

    [[nodiscard]] std::optional<double> number(std::string_view key) const {
        const toml::node* n = find(key);
        if (!n) return std::nullopt;
        if (auto v = n->value_exact<double>()) return *v;
        if (auto v = n->value_exact<int64_t>()) return static_cast<double>(*v);
        fail(*n, name_ + "." + std::string(key) + " must be a number");
    }

    [[nodiscard]] std::optional<int> integer(std::string_view key) const {
        const toml::node* n = find(key);
        if (!n) return std::nullopt;
        if (auto v = n->value_exact<int64_t>()) return static_cast<int>(*v);
        fail(*n, name_ + "." + std::string(key) + " must be an integer");
    }

    [[nodiscard]] std::optional<bool> boolean(std::string_view key) const {
        const toml::node* n = find(key);
        if (!n) return std::nullopt;
        if (auto v = n->value_exact<bool>()) return *v;
        fail(*n, name_ + "." + std::string(key) + " must be true or false");
    }

    [[nodiscard]] std::optional<std::string> string(std::string_view key) const {
        const toml::node* n = find(key);
        if (!n) return std::nullopt;
        if (auto v = n->value_exact<std::string>()) return *v;
        fail(*n, name_ + "." + std::string(key) + " must be a string");
    }

    [[nodiscard]] std::optional<std::vector<double>> numbers(std::string_view key) const {
        const toml::node* n = find(key);
        if (!n) return std::nullopt;
        const toml::array* arr = n->as_array();
        if (!arr) fail(*n, name_ + "." + std::string(key) + " must be an array of numbers");
        std::vector<double> out;
        for (const auto& e : *arr) {
            if (auto v = e.value_exact<double>()) {
                out.push_back(*v);
            } else if (auto w = e.value_exact<int64_t>()) {
                out.push_back(static_cast<double>(*w));
            } else {
                fail(e, name_ + "." + std::string(key) + " must contain only numbers");
            }
        }
        return out;
    }

    [[nodiscard]] std::optional<std::vector<int>> integers(std::string_view key) const {
        const toml::node* n = find(key);
        if (!n) return std::nullopt;
        const toml::array* arr = n->as_array();
        if (!arr) fail(*n, name_ + "." + std::string(key) + " must be an array of integers");
        std::vector<int> out;
        for (const auto& e : *arr) {
            auto v = e.value_exact<int64_t>();
            if (!v) fail(e, name_ + "." + std::string(key) + " must contain only integers");
            out.push_back(static_cast<int>(*v));
        }
        return out;
    }

    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    [[nodiscard]] const std::string& source() const noexcept { return source_; }

private:
    const toml::table& table_;
    std::string name_;
    const std::string& source_;
};

StressLaw parse_law(const Section& s) {
    const std::string law = s.string("law").value_or("exponential");
    const double K = s.number("K").value_or(1.0);
    if (law == "exponential") return Exponential{K};
    if (law == "linear") return Linear{K};
    if (law == "power") return PowerLaw{K, s.number("gamma").value_or(1.4)};
    if (law == "cubic") return Cubic{K, s.number("beta").value_or(0.0)};
    s.fail(*s.find("law"), "unknown stress law '" + law + "' (exponential, linear, power, cubic)");
}

Medium parse_medium(const Section& s) {
    s.allow({"period", "layers", "rho_b", "k_b"});
    const double period = s.number("period").value_or(1.0);
    try {
        if (const toml::node* n = s.find("layers")) {
            if (s.find("rho_b") || s.find("k_b")) s.fail(*n, "medium.layers excludes rho_b and k_b");
            const toml::array* arr = n->as_array();
            if (!arr) s.fail(*n, "medium.layers must be an array of tables");
            std::vector<Layer> layers;
            for (const auto& e : *arr) {
                const toml::table* t = e.as_table();
                if (!t) s.fail(e, "medium.layers entries must be tables");
                const Section layer(*t, "medium.layers", s.source());
                layer.allow({"width", "rho", "law", "K", "gamma", "beta"});
                const auto width = layer.number("width");
                if (!width) layer.fail(e, "layer requires 'width' (share of the period)");
                layers.push_back({*width, Material(layer.number("rho").value_or(1.0), parse_law(layer))});
            }
            return Medium(period, std::move(layers));
        }
        const double rho_b = s.number("rho_b").value_or(1.0);
        const double k_b = s.number("k_b").value_or(rho_b);
        return Medium::alternating(Material(1.0, Exponential{1.0}), Material(rho_b, Exponential{k_b}), period);
    } catch (const ConfigError&) {
        throw;
    } catch (const Error& e) {
        s.fail(std::string("invalid medium: ") + e.what());
    }
}

void parse_scheme(const Section& s, RunConfig& c) {
    s.allow({"name", "limiter", "cfl"});
    if (auto name = s.string("name")) {
        auto scheme = SchemeConfig::from_name(*name);
        if (!scheme) s.fail(*s.find("name"), "unknown scheme '" + *name + "'");
        c.scheme = *scheme;
    }
    if (auto lim = s.string("limiter")) {
        auto l = parse_limiter(*lim);
        if (!l) s.fail(*s.find("limiter"), "unknown limiter '" + *lim + "'");
        c.scheme.wave.limiter = *l;
    }
    if (auto cfl = s.number("cfl")) {
        if (c.scheme.kind == SchemeKind::WavePropagation) {
            c.scheme.wave.cfl_target = *cfl;
        } else {
            c.scheme.high.cfl = *cfl;
        }
    }
}

void parse_scenario(const Section& s, ScenarioParams& p) {
    s.allow({"kind", "amplitude", "width", "center", "sigma_l", "sigma_r", "transition_width", "x_jump", "eps0",
             "tau", "x0", "t_end", "reversal_time"});
    if (auto kind = s.string("kind")) {
        auto k = parse_scenario_kind(*kind);
        if (!k) s.fail(*s.find("kind"), "unknown scenario kind '" + *kind + "'");
        p.kind = *k;
    }
    auto set = [&](std::string_view key, double& field) {
        if (auto v = s.number(key)) field = *v;
    };
    set("amplitude", p.amplitude);
    set("width", p.width);
    set("center", p.center);
    set("sigma_l", p.sigma_l);
    set("sigma_r", p.sigma_r);
    set("transition_width", p.transition_width);
    set("x_jump", p.x_jump);
    set("eps0", p.eps0);
    set("tau", p.tau);
    set("x0", p.x0);
    if (auto v = s.number("t_end")) p.t_end = *v;
    if (auto v = s.number("reversal_time")) p.reversal_time = *v;
}

std::string list(const std::vector<double>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + format_double(v[i]);
    return out + "]";
}

std::string quoted(std::string_view s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out + "\"";
}

}  // namespace

std::string_view to_string(ScenarioKind kind) noexcept {
    for (const auto& [k, name] : kScenarioNames) {
        if (k == kind) return name;
    }
    return "gaussian";
}

std::optional<ScenarioKind> parse_scenario_kind(std::string_view name) noexcept {
    for (const auto& [k, n] : kScenarioNames) {
        if (n == name) return k;
    }
    return std::nullopt;
}

void RunConfig::validate() const {
    if (cells_per_layer < 1) throw ConfigError("grid.cells_per_layer must be positive");
    scheme.wave.validate();
    scheme.high.validate();
    if (!(snapshot_interval >= 0.0)) throw ConfigError("output.snapshot_interval must be non-negative");
    if (converge_cells.empty()) throw ConfigError("converge.cells_per_layer must not be empty");
    for (std::size_t i = 0; i < converge_cells.size(); ++i) {
        if (converge_cells[i] < 1) throw ConfigError("converge.cells_per_layer values must be positive");
        if (i > 0 && converge_cells[i] != 2 * converge_cells[i - 1]) {
            throw ConfigError("converge.cells_per_layer must double from one entry to the next");
        }
    }
    if (scenario.reversal_time && !(*scenario.reversal_time > 0.0)) {
        throw ConfigError("scenario.reversal_time must be positive");
    }
    sweep.validate();
}

Scenario RunConfig::build_scenario() const {
    const ScenarioParams& p = scenario;
    Scenario s;
    try {
        switch (p.kind) {
            case ScenarioKind::Gaussian:
                s = gaussian_pulse_scenario(medium, p.amplitude, p.width, p.center);
                break;
            case ScenarioKind::Ly:
                s = ly_stegoton_scenario(1.0, cells_per_layer);
                s.medium = medium;
                break;
            case ScenarioKind::SmoothRiemann:
                s = smooth_riemann_scenario(medium, p.sigma_l, p.sigma_r, p.transition_width);
                break;
            case ScenarioKind::EffectiveShock:
                s = effective_shock_scenario(medium, p.sigma_l, p.x_jump);
                break;
            case ScenarioKind::Rarefaction:
                s = rarefaction_reversal_scenario(medium, p.eps0, p.tau, p.x0, x_lo.value_or(0.0),
                                                  x_hi.value_or(50.0));
                break;
        }
    } catch (const Error& e) {
        throw ConfigError(std::string("scenario: ") + e.what());
    }
    s.cells_per_layer = cells_per_layer;
    if (x_lo) s.x_lo = *x_lo;
    if (x_hi) s.x_hi = *x_hi;
    if (!(s.x_hi > s.x_lo)) throw ConfigError("grid.x_hi must exceed grid.x_lo");
    if (p.t_end) {
        if (!(*p.t_end >= s.t_start())) throw ConfigError("scenario.t_end precedes the scenario start");
        s.t_end = *p.t_end;
    }
    if (snapshot_interval > 0.0) s.snapshot_interval = snapshot_interval;
    return s;
}

double RunConfig::reversal_time() const {
    if (scenario.reversal_time) return *scenario.reversal_time;
    switch (scenario.kind) {
        case ScenarioKind::Gaussian:
            return 60.0;
        case ScenarioKind::Ly:
            return 600.0;
        case ScenarioKind::SmoothRiemann:
            return 100.0;
        case ScenarioKind::EffectiveShock:
            return 50.0;
        case ScenarioKind::Rarefaction:
            return scenario.tau;
    }
    return 60.0;
}

RunConfig parse_config(std::string_view text, const std::string& source) {
    toml::table root;
    try {
        root = toml::parse(text, source);
    } catch (const toml::parse_error& e) {
        throw ConfigError(location(source, e.source()) + ": " + std::string(e.description()));
    }
    const Section top(root, "config", source);
    top.allow({"medium", "grid", "scheme", "scenario", "output", "sweep", "converge"});

    RunConfig c;
    auto section = [&](std::string_view name) -> std::optional<Section> {
        const toml::node* n = root.get(name);
        if (!n) return std::nullopt;
        const toml::table* t = n->as_table();
        if (!t) top.fail(*n, "[" + std::string(name) + "] must be a table");
        return Section(*t, std::string(name), source);
    };

    if (auto s = section("medium")) c.medium = parse_medium(*s);
    if (auto s = section("grid")) {
        s->allow({"cells_per_layer", "x_lo", "x_hi"});
        if (auto v = s->integer("cells_per_layer")) c.cells_per_layer = *v;
        c.x_lo = s->number("x_lo");
        c.x_hi = s->number("x_hi");
    }
    if (auto s = section("scheme")) parse_scheme(*s, c);
    if (auto s = section("scenario")) parse_scenario(*s, c.scenario);
    if (auto s = section("output")) {
        s->allow({"dir", "snapshot_interval", "snapshots"});
        if (auto v = s->string("dir")) c.out_dir = *v;
        if (auto v = s->number("snapshot_interval")) c.snapshot_interval = *v;
        if (auto v = s->boolean("snapshots")) c.snapshots = *v;
    }
    if (auto s = section("sweep")) {
        s->allow({"rho_b", "k_b", "sigma_l", "paired", "cells_per_layer", "reversal_time", "tol"});
        if (auto v = s->numbers("rho_b")) c.sweep.rho_b = *v;
        if (auto v = s->numbers("k_b")) c.sweep.k_b = *v;
        if (auto v = s->numbers("sigma_l")) c.sweep.sigma_l = *v;
        if (auto v = s->boolean("paired")) c.sweep.paired = *v;
        if (auto v = s->integer("cells_per_layer")) c.sweep.cells_per_layer = *v;
        if (auto v = s->number("reversal_time")) c.sweep.reversal_time = *v;
        if (auto v = s->number("tol")) c.sweep.tol = *v;
    }
    if (auto s = section("converge")) {
        s->allow({"cells_per_layer"});
        if (auto v = s->integers("cells_per_layer")) c.converge_cells = *v;
    }
    try {
        c.validate();
    } catch (const Error& e) {
        throw ConfigError(source + ": " + e.what());
    }
    return c;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read config file " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str(), path.string());
}

std::string emit_config(const RunConfig& c) {
    std::ostringstream os;
    os << "[medium]\nperiod = " << format_double(c.medium.period()) << "\nlayers = [\n";
    for (const auto& layer : c.medium.layers()) {
        const StressLaw& law = layer.material.law;
        os << "  { width = " << format_double(layer.width_fraction) << ", rho = " << format_double(layer.material.rho)
           << ", law = " << quoted(law.name()) << ", K = " << format_double(law.modulus_parameter());
        if (const auto* p = std::get_if<PowerLaw>(&law.variant())) os << ", gamma = " << format_double(p->gamma);
        if (const auto* q = std::get_if<Cubic>(&law.variant())) os << ", beta = " << format_double(q->beta);
        os << " },\n";
    }
    os << "]\n\n[grid]\ncells_per_layer = " << c.cells_per_layer << '\n';
    if (c.x_lo) os << "x_lo = " << format_double(*c.x_lo) << '\n';
    if (c.x_hi) os << "x_hi = " << format_double(*c.x_hi) << '\n';

    const bool wave = c.scheme.kind == SchemeKind::WavePropagation;
    os << "\n[scheme]\nname = " << quoted(c.scheme.name()) << "\nlimiter = " << quoted(to_string(c.scheme.wave.limiter))
       << "\ncfl = " << format_double(wave ? c.scheme.wave.cfl_target : c.scheme.high.cfl) << '\n';

    const ScenarioParams& p = c.scenario;
    os << "\n[scenario]\nkind = " << quoted(to_string(p.kind)) << "\namplitude = " << format_double(p.amplitude)
       << "\nwidth = " << format_double(p.width) << "\ncenter = " << format_double(p.center)
       << "\nsigma_l = " << format_double(p.sigma_l) << "\nsigma_r = " << format_double(p.sigma_r)
       << "\ntransition_width = " << format_double(p.transition_width) << "\nx_jump = " << format_double(p.x_jump)
       << "\neps0 = " << format_double(p.eps0) << "\ntau = " << format_double(p.tau)
       << "\nx0 = " << format_double(p.x0) << '\n';
    if (p.t_end) os << "t_end = " << format_double(*p.t_end) << '\n';
    os << "reversal_time = " << format_double(c.reversal_time()) << '\n';

    os << "\n[output]\n";
    if (!c.out_dir.empty()) os << "dir = " << quoted(c.out_dir) << '\n';
    os << "snapshot_interval = " << format_double(c.snapshot_interval)
       << "\nsnapshots = " << (c.snapshots ? "true" : "false") << '\n';

    os << "\n[sweep]\nrho_b = " << list(c.sweep.rho_b) << "\nk_b = " << list(c.sweep.k_b)
       << "\nsigma_l = " << list(c.sweep.sigma_l) << "\npaired = " << (c.sweep.paired ? "true" : "false")
       << "\ncells_per_layer = " << c.sweep.cells_per_layer
       << "\nreversal_time = " << format_double(c.sweep.reversal_time) << "\ntol = " << format_double(c.sweep.tol)
       << '\n';

    os << "\n[converge]\ncells_per_layer = [";
    for (std::size_t i = 0; i < c.converge_cells.size(); ++i) os << (i ? ", " : "") << c.converge_cells[i];
    os << "]\n";
    return os.str();
}

}  // namespace layershock
