#include "pbe/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace pbe {

void validate(const PhysParams& p) {
    auto req = [](bool ok, const char* what) {
        if (!ok) throw std::invalid_argument(std::string("PhysParams: ") + what);
    };
    req(p.gamma > 0.0, "gamma must be positive");
    req(p.kappa >= 0.0, "kappa must be nonnegative");
    req(p.chi >= 0.0, "chi must be nonnegative");
    req(p.c_s > 0.0, "c_s must be positive");
    req(p.delta0 > 0.0, "delta0 must be positive");
    req(p.phi00 > 0.0, "phi00 must be positive");
    req(p.b0 > 0.0, "b0 must be positive");
}

PhysParams nondimensionalize(const DimensionalParams& dp) {
    auto req = [](bool ok, const char* what) {
        if (!ok) throw std::invalid_argument(std::string("DimensionalParams: ") + what);
    };
    req(dp.A0 > 0.0, "A0 must be positive");
    req(dp.k_g > 0.0, "k_g must be positive");
    req(dp.d_o >= 0.0, "d_o must be nonnegative");
    req(dp.c_s > 0.0, "c_s must be positive");
    req(dp.c_i > 0.0, "c_i must be positive");
    req(dp.Q >= 0.0, "Q must be nonnegative");
    req(dp.N0 > 0.0, "N0 must be positive");
    req(dp.gamma > 0.0, "gamma must be positive");
    req(dp.V0 >= 0.0, "V0 must be nonnegative");
    req(dp.phi00 > 0.0, "phi00 must be positive");
    req(dp.b0 > 0.0, "b0 must be positive");

    PhysParams p;
    p.gamma = dp.gamma;
    p.kappa = dp.k_g * std::pow(dp.c_s, dp.gamma) / dp.A0;
    if (!(p.kappa > 0.0) || !std::isfinite(p.kappa))
        throw std::invalid_argument("nondimensionalize: derived kappa is not positive");
    p.chi = dp.d_o * p.kappa * dp.N0;
    p.c_s = dp.c_s;
    p.mass_const = dp.Q + dp.c_i - dp.c_s;
    // c(0) from the mass balance at t = 0.
    p.delta0 = (p.mass_const - dp.V0) / dp.c_s;
    p.phi00 = dp.phi00 / (dp.N0 * dp.N0);
    p.b0 = dp.b0 / dp.N0;
    validate(p);
    return p;
}

double update_supersaturation(double V, const PhysParams& params) {
    return (params.mass_const - V) / params.c_s;
}

} // namespace pbe
