#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "pbe/analytic.hpp"
#include "pbe/config.hpp"
#include "pbe/initial.hpp"
#include "pbe/stepper.hpp"

namespace pbe {

// Experiment drivers behind the CLI subcommands. Each writes its CSVs
// under cfg.out_dir and prints a short report to `out`.

struct VerifyReport {
    double b = 0.0;              // oracle parameter at T
    double l2_rel_phi = 0.0;     // ||num - exact||_2 / ||exact||_2 over [0, H]
    double linf_rel_phi = 0.0;   // max |diff| / max |exact|
    double l2_rel_xiphi = 0.0;
    double linf_rel_xiphi = 0.0;
};

// Solver vs exact parametric solution at time T (constant kernel only).
VerifyReport cmd_verify(const RunConfig& cfg, std::ostream& out);

struct AttractorEntry {
    InitialKind kind = InitialKind::Exp;
    double C = 0.0;
    double V0 = 0.0;
    std::map<double, double> tail_dev; // tau -> max rel deviation on the tail window
};

struct AttractorReport {
    double xi_lo = 0.0, xi_hi = 0.0; // tail window
    std::vector<AttractorEntry> entries;
};

// All four initial distributions against the universal profile at the
// snapshot times and at T.
AttractorReport cmd_attractor(const RunConfig& cfg, std::ostream& out);

struct BenchRow {
    int M = 0;
    double t_fast_ms = 0.0;
    double t_naive_ms = -1.0; // < 0 when skipped (above naive_cap)
};

std::vector<BenchRow> cmd_bench(const RunConfig& cfg, const std::vector<int>& sizes,
                                std::ostream& out, int naive_cap = 8192);

// Time series (tau, n, V, delta) of a run.
std::vector<SeriesPoint> cmd_moments(const RunConfig& cfg, std::ostream& out);

// Tabulated parametric solution plus exact profiles at snapshot times.
void cmd_analytic(const RunConfig& cfg, std::ostream& out);

// Plain run: series plus snapshot and final profiles.
Trajectory cmd_run(const RunConfig& cfg, std::ostream& out);

} // namespace pbe
