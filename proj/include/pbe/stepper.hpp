#pragma once

#include <optional>
#include <vector>

#include "pbe/config.hpp"
#include "pbe/coagulation.hpp"
#include "pbe/grid.hpp"
#include "pbe/kernels.hpp"
#include "pbe/params.hpp"
#include "pbe/ripening.hpp"

namespace pbe {

struct TimeSpec {
    double T = 0.0;
    long M_tau = 1;
    std::vector<double> snapshot_times;
    double h_tau() const { return M_tau > 0 ? T / static_cast<double>(M_tau) : 0.0; }
};

struct SimState {
    double tau = 0.0;
    GridFunction phi;
    double delta = 0.0;
    double n = 0.0;
    double V = 0.0;
    long step_index = 0;
};

enum class Backend { fast, naive };

struct CflReport {
    bool ok = true;
    double h_tau = 0.0;
    double diffusion_bound = 0.0; // h_xi^2 / (2 chi delta_max^gamma)
    double advection_bound = 0.0; // h_xi / (kappa delta_max^gamma)
};

// Explicit-scheme step bounds; a warn outcome does not abort a run.
CflReport check_cfl(const PhysParams& params, const GridSpec& grid, double h_tau,
                    double delta_max);

// One simulation: owns its grid, kernel, parameters (with mass_const
// resolved from the initial state) and FFT workspace. Strictly
// sequential in tau; independent Steppers may run concurrently.
class Stepper {
public:
    Stepper(GridSpec grid, LowRankKernel kernel, PhysParams params, double absorber_d,
            Backend backend);

    // State at tau = 0 from an initial profile. Resolves mass_const as
    // V(0) + c_s * delta0 so the mass balance holds exactly at start.
    SimState init_state(GridFunction phi0);

    // Phi += h_tau * (L1 - Phi L2 - ripening); absorb; refresh moments
    // and supersaturation. Throws numerical_error on non-finite values
    // (with node index) or exhausted supersaturation.
    void step(SimState& state, double h_tau);

    const GridSpec& grid() const { return grid_; }
    const PhysParams& params() const { return params_; }
    const LowRankKernel& kernel() const { return kernel_; }

private:
    GridSpec grid_;
    LowRankKernel kernel_;
    PhysParams params_;
    AbsorberConfig absorber_;
    Backend backend_;
    std::optional<OperatorWorkspace> ws_;
    GridFunction gain_, loss_, d1_, d2_;
};

struct SeriesPoint {
    double tau = 0.0, n = 0.0, V = 0.0, delta = 0.0;
};

struct Snapshot {
    double tau = 0.0;
    GridFunction phi;
};

struct Trajectory {
    std::vector<SeriesPoint> series;
    std::vector<Snapshot> snapshots;
    SimState final_state;
    CflReport cfl;
    double mass_const = 0.0;
    double initial_C = 0.0;
};

// Full experiment driver: grid, kernel and initial profile from the
// config, Euler loop to T, series every series_stride steps plus the
// final step, snapshots at round(s / h_tau). Deterministic for a fixed
// config and platform. target_V0 overrides the initial-condition
// normalization (used by the attractor driver).
Trajectory run_simulation(const RunConfig& cfg,
                          std::optional<double> target_V0 = std::nullopt);

} // namespace pbe
