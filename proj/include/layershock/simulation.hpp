#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "layershock/boundary.hpp"
#include "layershock/method_of_lines.hpp"
#include "layershock/wave_propagation.hpp"

namespace layershock {

enum class SchemeKind { WavePropagation, MethodOfLines };

/// Time-stepping scheme selection. Names: "wave-prop-2" (default),
/// "wave-prop-1", "weno5-ssprk4", "weno5-rk4".
struct SchemeConfig {
    SchemeKind kind = SchemeKind::WavePropagation;
    SolverConfig wave;
    HighOrderConfig high;

    [[nodiscard]] std::string name() const;
    static std::optional<SchemeConfig> from_name(std::string_view name);
};

/// Common stepping interface over both discretizations.
class Integrator {
public:
    virtual ~Integrator() = default;
    /// One step of at most dt_max; returns the step taken.
    virtual double step(SimState& state, double dt_max) = 0;
    [[nodiscard]] virtual const Grid& grid() const = 0;
    [[nodiscard]] virtual const BoundaryCondition& boundary() const = 0;
};

std::unique_ptr<Integrator> make_integrator(const Grid& grid, const BoundaryCondition& bc,
                                            const SchemeConfig& scheme);

/// Callback invoked at sample times with the state and the accumulated
/// boundary work ∫[(σu)_right − (σu)_left] dt since the start of evolve().
using SampleCallback = std::function<void(const SimState&, double boundary_work)>;

struct EvolveResult {
    std::size_t steps = 0;
    double boundary_work = 0.0;
};

/// Advances `state` to t_end. When `interval` > 0, `on_sample` runs at every
/// start + k·interval (hit exactly) and always at t_end.
EvolveResult evolve(SimState& state, Integrator& integrator, double t_end, double interval = 0.0,
                    const SampleCallback& on_sample = {}, double initial_work = 0.0);

}  // namespace layershock
