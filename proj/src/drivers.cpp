#include "pbe/drivers.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <random>

#include "pbe/csv.hpp"
#include "pbe/errors.hpp"

namespace pbe {

namespace {

namespace fs = std::filesystem;

std::string out_path(const RunConfig& cfg, const std::string& name) {
    fs::create_directories(cfg.out_dir);
    return (fs::path(cfg.out_dir) / name).string();
}

std::string tau_tag(double tau) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", tau);
    std::string s(buf);
    std::replace(s.begin(), s.end(), '.', 'p');
    std::replace(s.begin(), s.end(), '-', 'm');
    return s;
}

void require_constant_kernel(const RunConfig& cfg, const char* who) {
    if (cfg.kernel != "constant")
        throw config_error(std::string(who) +
                           ": the exact parametric solution only exists for the constant "
                           "kernel; got kernel = " +
                           cfg.kernel);
}

struct RelErrors {
    double l2 = 0.0;
    double linf = 0.0;
};

// Relative errors over nodes [0, upper]; L_inf normalized by the peak
// of the reference so near-zero tails do not dominate.
RelErrors rel_errors(const GridFunction& num, const GridFunction& exact, int upper,
                     const GridFunction* weight = nullptr) {
    double diff2 = 0.0, ref2 = 0.0, dmax = 0.0, rmax = 0.0;
    for (int i = 0; i <= upper; ++i) {
        const double w = weight ? (*weight)[i] : 1.0;
        const double d = w * (num[i] - exact[i]);
        const double r = w * exact[i];
        diff2 += d * d;
        ref2 += r * r;
        dmax = std::max(dmax, std::abs(d));
        rmax = std::max(rmax, std::abs(r));
    }
    RelErrors e;
    e.l2 = ref2 > 0.0 ? std::sqrt(diff2 / ref2) : std::sqrt(diff2);
    e.linf = rmax > 0.0 ? dmax / rmax : dmax;
    return e;
}

double tail_deviation(const GridSpec& grid, const GridFunction& num, const GridFunction& exact,
                      double xi_lo, double xi_hi) {
    double worst = 0.0;
    for (int i = 0; i <= grid.M; ++i) {
        const double x = grid.xi(i);
        if (x < xi_lo || x > xi_hi) continue;
        worst = std::max(worst, std::abs(num[i] - exact[i]) / exact[i]);
    }
    return worst;
}

} // namespace

VerifyReport cmd_verify(const RunConfig& cfg, std::ostream& out) {
    validate(cfg);
    require_constant_kernel(cfg, "verify");

    const GridSpec grid = grid_from(cfg);
    const ParametricSolution oracle(phys_from(cfg));
    const Trajectory tr = run_simulation(cfg);
    const ExactState ex = oracle.exact_state(cfg.T, grid);

    const GridFunction& num = tr.final_state.phi;
    GridFunction xi_w(grid.num_nodes());
    for (int i = 0; i < grid.num_nodes(); ++i) xi_w[i] = grid.xi(i);

    VerifyReport rep;
    rep.b = ex.b;
    const RelErrors ephi = rel_errors(num, ex.phi, grid.M);
    const RelErrors exphi = rel_errors(num, ex.phi, grid.M, &xi_w);
    rep.l2_rel_phi = ephi.l2;
    rep.linf_rel_phi = ephi.linf;
    rep.l2_rel_xiphi = exphi.l2;
    rep.linf_rel_xiphi = exphi.linf;

    write_profile_csv(out_path(cfg, "verify_phi_num.csv"), grid, num, grid.M);
    write_profile_csv(out_path(cfg, "verify_phi_exact.csv"), grid, ex.phi, grid.M);
    write_diff_csv(out_path(cfg, "verify_diff.csv"), grid, num, ex.phi, grid.M);
    write_series_csv(out_path(cfg, "verify_series.csv"), tr.series);

    if (!tr.cfl.ok)
        out << "warning: h_tau = " << tr.cfl.h_tau << " exceeds the explicit-scheme bounds ("
            << "diffusion " << tr.cfl.diffusion_bound << ", advection " << tr.cfl.advection_bound
            << ")\n";
    out << "verify: T = " << cfg.T << ", b = " << rep.b << '\n'
        << "  phi    rel L2 = " << rep.l2_rel_phi << ", rel Linf = " << rep.linf_rel_phi << '\n'
        << "  xi*phi rel L2 = " << rep.l2_rel_xiphi << ", rel Linf = " << rep.linf_rel_xiphi
        << '\n';
    return rep;
}

AttractorReport cmd_attractor(const RunConfig& cfg, std::ostream& out) {
    validate(cfg);
    require_constant_kernel(cfg, "attractor");
    if (cfg.H <= 24.0)
        throw config_error("attractor: needs H > 24 so the tail window [10, min(50, H/2)] "
                           "is meaningful");

    const GridSpec grid = grid_from(cfg);
    const PhysParams phys = phys_from(cfg);
    const ParametricSolution oracle(phys);

    AttractorReport rep;
    rep.xi_lo = 10.0;
    rep.xi_hi = std::min(50.0, 0.5 * cfg.H);

    // Shared normalization: the discrete V(0) of the exp case.
    const InitialCondition ref = make_initial(InitialKind::Exp, grid, phys);
    const double target_V0 = ref.V0;

    std::vector<double> times = cfg.snapshots;
    if (std::find(times.begin(), times.end(), cfg.T) == times.end()) times.push_back(cfg.T);
    std::sort(times.begin(), times.end());

    // Oracle profiles once per time.
    std::map<double, ExactState> exact;
    for (double t : times) exact.emplace(t, oracle.exact_state(t, grid));
    for (const auto& [t, ex] : exact)
        write_profile_csv(out_path(cfg, "attractor_exact_tau" + tau_tag(t) + ".csv"), grid,
                          ex.phi, grid.M);

    for (const InitialKind kind :
         {InitialKind::Exp, InitialKind::PertExp, InitialKind::Gaus, InitialKind::Gaus2}) {
        RunConfig rc = cfg;
        rc.initial = to_string(kind);
        rc.snapshots = times;
        const Trajectory tr = run_simulation(rc, kind == InitialKind::Exp
                                                     ? std::optional<double>{}
                                                     : std::optional<double>{target_V0});
        AttractorEntry entry;
        entry.kind = kind;
        entry.C = tr.initial_C;
        entry.V0 = tr.series.front().V;

        for (const Snapshot& snap : tr.snapshots) {
            // Snapshot tau is the step-aligned time; match the request.
            double t_req = times.front();
            double best = std::abs(snap.tau - t_req);
            for (double t : times)
                if (std::abs(snap.tau - t) < best) {
                    best = std::abs(snap.tau - t);
                    t_req = t;
                }
            const ExactState& ex = exact.at(t_req);
            entry.tail_dev[t_req] =
                tail_deviation(grid, snap.phi, ex.phi, rep.xi_lo, rep.xi_hi);

            const std::string stem =
                std::string("attractor_") + to_string(kind) + "_tau" + tau_tag(t_req);
            write_profile_csv(out_path(cfg, stem + ".csv"), grid, snap.phi, grid.M);
            GridFunction xiphi(snap.phi.size());
            for (int i = 0; i < grid.num_nodes(); ++i) xiphi[i] = grid.xi(i) * snap.phi[i];
            write_profile_csv(out_path(cfg, stem + "_xiphi.csv"), grid, xiphi, grid.M, "xiphi");
        }
        write_series_csv(out_path(cfg, std::string("attractor_") + to_string(kind) +
                                           "_series.csv"),
                         tr.series);
        rep.entries.push_back(std::move(entry));
    }

    out << "attractor: tail window [" << rep.xi_lo << ", " << rep.xi_hi << "]\n";
    for (const auto& e : rep.entries) {
        out << "  " << to_string(e.kind) << " (C = " << e.C << ", V0 = " << e.V0 << "):";
        for (const auto& [t, dev] : e.tail_dev) out << "  dev(tau=" << t << ") = " << dev;
        out << '\n';
    }
    return rep;
}

std::vector<BenchRow> cmd_bench(const RunConfig& cfg, const std::vector<int>& sizes,
                                std::ostream& out, int naive_cap) {
    validate(cfg);
    if (!std::is_sorted(sizes.begin(), sizes.end()))
        throw config_error("bench: sizes must be ascending");
    if (sizes.empty()) throw config_error("bench: no sizes given");

    using clock = std::chrono::steady_clock;
    std::vector<BenchRow> rows;
    std::mt19937 rng(0xbe9cu);
    std::uniform_real_distribution<double> uni(0.0, 1.0);

    for (int M : sizes) {
        const GridSpec grid = build_grid(cfg.H, M, M);
        const LowRankKernel kernel = kernel_by_name(cfg.kernel, grid, cfg.A0, cfg.eps);
        OperatorWorkspace ws(grid);
        GridFunction phi(grid.num_nodes());
        for (double& x : phi) x = uni(rng);
        GridFunction g1, g2;

        auto time_ms = [](auto&& fn, int reps) {
            std::vector<double> t(reps);
            for (int r = 0; r < reps; ++r) {
                const auto t0 = clock::now();
                fn();
                t[r] = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
            }
            std::nth_element(t.begin(), t.begin() + reps / 2, t.end());
            return t[reps / 2];
        };

        BenchRow row;
        row.M = M;
        l1_fast(kernel, grid, phi, ws, g1); // warm-up (plan touch, page faults)
        row.t_fast_ms = time_ms(
            [&] {
                l1_fast(kernel, grid, phi, ws, g1);
                l2_fast(kernel, grid, phi, g2);
            },
            9);

        if (M <= naive_cap) {
            GridFunction n1, n2;
            row.t_naive_ms = time_ms(
                [&] {
                    l1_naive(kernel, grid, phi, n1);
                    l2_naive(kernel, grid, phi, n2);
                },
                3);
            double dev = 0.0, scale = 0.0;
            for (int i = 0; i < grid.num_nodes(); ++i) {
                dev = std::max({dev, std::abs(g1[i] - n1[i]), std::abs(g2[i] - n2[i])});
                scale = std::max({scale, std::abs(n1[i]), std::abs(n2[i])});
            }
            out << "  M = " << M << ": fast " << row.t_fast_ms << " ms, naive "
                << row.t_naive_ms << " ms, fast/naive max dev " << dev / scale << '\n';
        } else {
            out << "  M = " << M << ": fast " << row.t_fast_ms << " ms (naive skipped)\n";
        }
        rows.push_back(row);
    }

    std::ofstream csv(out_path(cfg, "bench.csv"));
    csv << "M,t_fast_ms,t_naive_ms\n";
    for (const auto& r : rows) {
        csv << r.M << ',' << format_full(r.t_fast_ms) << ',';
        if (r.t_naive_ms >= 0.0) csv << format_full(r.t_naive_ms);
        csv << '\n';
    }
    return rows;
}

std::vector<SeriesPoint> cmd_moments(const RunConfig& cfg, std::ostream& out) {
    const Trajectory tr = run_simulation(cfg);
    write_series_csv(out_path(cfg, "moments.csv"), tr.series);
    const auto& last = tr.series.back();
    out << "moments: " << tr.series.size() << " rows, final tau = " << last.tau
        << ", n = " << last.n << ", V = " << last.V << ", delta = " << last.delta << '\n';
    return tr.series;
}

void cmd_analytic(const RunConfig& cfg, std::ostream& out) {
    validate(cfg);
    require_constant_kernel(cfg, "analytic");
    const GridSpec grid = grid_from(cfg);
    const ParametricSolution oracle(phys_from(cfg));

    {
        std::ofstream csv(out_path(cfg, "analytic_table.csv"));
        csv << "b,tau,delta,n,V\n";
        const auto& b = oracle.b_grid();
        const auto& d = oracle.delta_table();
        const auto& h = oracle.h_table();
        const auto& t = oracle.tau_table();
        for (std::size_t k = 0; k < b.size(); ++k) {
            const double n = -2.0 * h[k] / b[k];
            const double V = -2.0 * h[k] / (b[k] * b[k]);
            csv << format_full(b[k]) << ',' << format_full(t[k]) << ',' << format_full(d[k])
                << ',' << format_full(n) << ',' << format_full(V) << '\n';
        }
    }

    std::vector<double> times = cfg.snapshots;
    if (times.empty()) times.push_back(cfg.T);
    for (double t : times) {
        const ExactState ex = oracle.exact_state(t, grid);
        write_profile_csv(out_path(cfg, "analytic_phi_tau" + tau_tag(t) + ".csv"), grid, ex.phi,
                          grid.M);
        out << "analytic: tau = " << t << ", b = " << ex.b << ", n = " << ex.n
            << ", V = " << ex.V << ", delta = " << ex.delta << '\n';
    }
    out << "analytic: horizon tau_max = " << oracle.tau_max() << " at b_min = " << oracle.b_min()
        << '\n';
}

Trajectory cmd_run(const RunConfig& cfg, std::ostream& out) {
    Trajectory tr = run_simulation(cfg);
    write_series_csv(out_path(cfg, "series.csv"), tr.series);
    const GridSpec grid = grid_from(cfg);
    for (const Snapshot& s : tr.snapshots)
        write_profile_csv(out_path(cfg, "phi_tau" + tau_tag(s.tau) + ".csv"), grid, s.phi,
                          grid.M_xi);
    write_profile_csv(out_path(cfg, "phi_final.csv"), grid, tr.final_state.phi, grid.M_xi);
    if (!tr.cfl.ok)
        out << "warning: h_tau = " << tr.cfl.h_tau << " exceeds the explicit-scheme bounds\n";
    out << "run: " << tr.final_state.step_index << " steps to tau = " << tr.final_state.tau
        << ", n = " << tr.final_state.n << ", V = " << tr.final_state.V
        << ", delta = " << tr.final_state.delta << ", mass_const = " << tr.mass_const << '\n';
    return tr;
}

} // namespace pbe
