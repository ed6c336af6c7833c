#pragma once

#include <string>
#include <vector>

#include "pbe/grid.hpp"
#include "pbe/params.hpp"

namespace pbe {

// Full run configuration. Defaults reproduce the gamma = 1 verification
// setup. Text form is line-oriented `key = value` with `#` comments;
// unknown keys are rejected.
struct RunConfig {
    double gamma = 1.0;
    double kappa = 0.2;
    double chi = 0.01;
    double cs = 10.0;
    double delta0 = 0.2;
    double phi00 = 1.0;
    double b0 = 1.0;

    double H = 20.0;
    long M = 4000;
    long Mxi = 4000;
    double T = 0.5;
    long Mtau = 20000;
    double d = 5.0;

    std::string kernel = "constant"; // constant | diffusion | ballistic
    double A0 = 1.0;
    double eps = 1e-6;               // ballistic factorization tolerance
    std::string backend = "fast";    // fast | naive
    std::string initial = "exp";     // exp | pert_exp | gaus | gaus2

    std::vector<double> snapshots;   // tau values to record
    std::string out_dir = "out";
    long series_stride = 1;

    bool operator==(const RunConfig&) const = default;
};

RunConfig parse_config(const std::string& text);
RunConfig load_config_file(const std::string& path);
std::string serialize_config(const RunConfig& cfg);
void validate(const RunConfig& cfg);

GridSpec grid_from(const RunConfig& cfg);
PhysParams phys_from(const RunConfig& cfg); // mass_const left 0, resolved per run

} // namespace pbe
