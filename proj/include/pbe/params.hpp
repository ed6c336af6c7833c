#pragma once

namespace pbe {

// Dimensionless model constants of the coupled coagulation-ripening
// system. mass_const is the conserved combination V + c_s*Delta; a run
// resolves it from the initial state as V(0) + c_s*delta0.
struct PhysParams {
    double gamma = 1.0;   // growth-law exponent
    double kappa = 0.2;   // migration coefficient
    double chi = 0.01;    // volume-diffusion coefficient
    double c_s = 10.0;    // saturation concentration
    double delta0 = 0.2;  // initial supersaturation
    double mass_const = 0.0;
    double phi00 = 1.0;   // Phi(0,0)
    double b0 = 1.0;      // initial exponential rate

    bool operator==(const PhysParams&) const = default;
};

void validate(const PhysParams& p);

// Dimensional inputs; only the combinations below survive the
// transformation to PhysParams.
struct DimensionalParams {
    double A0 = 1.0;     // coagulation kernel constant
    double k_g = 1.0;    // growth-rate constant
    double d_o = 0.0;    // volume-diffusion intensity
    double c_s = 1.0;    // saturation concentration
    double c_i = 1.0;    // concentration at a planar boundary
    double Q = 0.0;      // initial saturation
    double N0 = 1.0;     // initial particle number density
    double gamma = 1.0;  // growth-law exponent
    double V0 = 1.0;     // initial condensed-phase volume (first moment)
    double phi00 = 1.0;  // dimensional distribution at v = 0, t = 0
    double b0 = 1.0;     // dimensional initial exponential rate
};

// kappa = k_g c_s^gamma / A0, chi = d_o kappa N0,
// delta0 = (Q + c_i - c_s - V0) / c_s, mass_const = Q + c_i - c_s.
PhysParams nondimensionalize(const DimensionalParams& dp);

// Mass balance: Delta = (mass_const - V) / c_s. May return a negative
// value (supersaturation exhausted); the caller decides whether that is
// fatal (it is for fractional gamma).
double update_supersaturation(double V, const PhysParams& params);

} // namespace pbe
