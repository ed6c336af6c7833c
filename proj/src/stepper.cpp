#include "pbe/stepper.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "pbe/errors.hpp"
#include "pbe/initial.hpp"

namespace pbe {

CflReport check_cfl(const PhysParams& params, const GridSpec& grid, double h_tau,
                    double delta_max) {
    CflReport r;
    r.h_tau = h_tau;
    const double dpow = growth_factor(delta_max, params.gamma);
    const double inf = std::numeric_limits<double>::infinity();
    r.diffusion_bound =
        params.chi * dpow > 0.0 ? grid.h_xi * grid.h_xi / (2.0 * params.chi * dpow) : inf;
    r.advection_bound = params.kappa * dpow > 0.0 ? grid.h_xi / (params.kappa * dpow) : inf;
    r.ok = h_tau <= r.diffusion_bound && h_tau <= r.advection_bound;
    return r;
}

Stepper::Stepper(GridSpec grid, LowRankKernel kernel, PhysParams params, double absorber_d,
                 Backend backend)
    : grid_(grid), kernel_(std::move(kernel)), params_(params),
      absorber_(make_absorber(grid, absorber_d)), backend_(backend) {
    if (backend_ == Backend::fast) ws_.emplace(grid_);
}

SimState Stepper::init_state(GridFunction phi0) {
    if (static_cast<int>(phi0.size()) != grid_.num_nodes())
        throw std::invalid_argument("init_state: phi0 size does not match grid");
    SimState s;
    s.phi = std::move(phi0);
    const Moments m = moments(grid_, s.phi);
    s.n = m.n;
    s.V = m.V;
    s.delta = params_.delta0;
    params_.mass_const = m.V + params_.c_s * params_.delta0;
    return s;
}

void Stepper::step(SimState& state, double h_tau) {
    if (h_tau == 0.0) return;
    auto& phi = state.phi;

    if (backend_ == Backend::fast) {
        l1_fast(kernel_, grid_, phi, *ws_, gain_);
        l2_fast(kernel_, grid_, phi, loss_);
    } else {
        l1_naive(kernel_, grid_, phi, gain_);
        l2_naive(kernel_, grid_, phi, loss_);
    }
    first_derivative(grid_, phi, d1_);
    second_derivative(grid_, phi, d2_);

    double dpow;
    try {
        dpow = growth_factor(state.delta, params_.gamma);
    } catch (const numerical_error& e) {
        throw numerical_error(std::string(e.what()) + " at step " +
                              std::to_string(state.step_index) + ", tau = " +
                              std::to_string(state.tau));
    }

    const int n = grid_.num_nodes();
    for (int i = 0; i < n; ++i)
        phi[i] += h_tau * (gain_[i] - phi[i] * loss_[i] -
                           dpow * (params_.kappa * d1_[i] - params_.chi * d2_[i]));
    apply_absorber(phi, absorber_);

    for (int i = 0; i < n; ++i)
        if (!std::isfinite(phi[i]))
            throw numerical_error("non-finite value at node " + std::to_string(i) + " (xi = " +
                                  std::to_string(grid_.xi(i)) + ") after step " +
                                  std::to_string(state.step_index + 1) + ", tau = " +
                                  std::to_string(state.tau + h_tau));

    const Moments m = moments(grid_, phi);
    state.n = m.n;
    state.V = m.V;
    state.delta = update_supersaturation(m.V, params_);
    state.tau += h_tau;
    ++state.step_index;
}

Trajectory run_simulation(const RunConfig& cfg, std::optional<double> target_V0) {
    validate(cfg);
    const GridSpec grid = grid_from(cfg);
    const PhysParams phys = phys_from(cfg);
    LowRankKernel kernel = kernel_by_name(cfg.kernel, grid, cfg.A0, cfg.eps);
    const Backend backend = cfg.backend == "fast" ? Backend::fast : Backend::naive;

    InitialCondition ic =
        make_initial(initial_kind_from_name(cfg.initial), grid, phys, target_V0);

    Stepper stepper(grid, std::move(kernel), phys, cfg.d, backend);
    SimState state = stepper.init_state(std::move(ic.phi));

    const double h_tau = cfg.T > 0.0 ? cfg.T / static_cast<double>(cfg.Mtau) : 0.0;
    const long n_steps = cfg.T > 0.0 ? cfg.Mtau : 0;

    Trajectory out;
    out.mass_const = stepper.params().mass_const;
    out.initial_C = ic.C;
    out.cfl = check_cfl(stepper.params(), grid, h_tau, phys.delta0);

    // Snapshot requested at time s is taken at step round(s / h_tau).
    std::unordered_map<long, double> snap_at;
    for (double s : cfg.snapshots) {
        const long j = h_tau > 0.0 ? std::lround(s / h_tau) : 0;
        snap_at[std::clamp(j, 0L, n_steps)] = s;
    }

    auto record_series = [&out, &state]() {
        out.series.push_back({state.tau, state.n, state.V, state.delta});
    };
    record_series();
    if (auto it = snap_at.find(0); it != snap_at.end())
        out.snapshots.push_back({state.tau, state.phi});

    for (long j = 1; j <= n_steps; ++j) {
        stepper.step(state, h_tau);
        if (j % cfg.series_stride == 0 || j == n_steps) record_series();
        if (auto it = snap_at.find(j); it != snap_at.end())
            out.snapshots.push_back({state.tau, state.phi});
    }
    out.final_state = std::move(state);
    return out;
}

} // namespace pbe
