#pragma once

#include <vector>

#include "pbe/grid.hpp"
#include "pbe/params.hpp"

namespace pbe {

// Second-order finite differences on the uniform grid: one-sided
// 3-point (first derivative) and 4-point (second derivative) stencils
// at the ends, central stencils inside.
void first_derivative(const GridSpec& grid, const GridFunction& phi, GridFunction& out);
void second_derivative(const GridSpec& grid, const GridFunction& phi, GridFunction& out);
GridFunction first_derivative(const GridSpec& grid, const GridFunction& phi);
GridFunction second_derivative(const GridSpec& grid, const GridFunction& phi);

// delta^gamma with the exhaustion guard: a negative supersaturation
// with non-integer gamma has no real power and must stop the run.
double growth_factor(double delta, double gamma);

// Transport term delta^gamma * (kappa dPhi/dxi - chi d2Phi/dxi2).
void ripening_term(const GridSpec& grid, const GridFunction& phi, double delta,
                   const PhysParams& params, GridFunction& out);
GridFunction ripening_term(const GridSpec& grid, const GridFunction& phi, double delta,
                           const PhysParams& params);

// Exponential absorbing layer: node i > M is scaled by
// exp(-d*(i-M)*h_xi) after every step; nodes 0..M are untouched.
struct AbsorberConfig {
    double d = 0.0;
    int start = 0;                // = grid.M
    std::vector<double> factors;  // one factor per layer node, empty when M_xi == M
};

AbsorberConfig make_absorber(const GridSpec& grid, double d);
void apply_absorber(GridFunction& phi, const AbsorberConfig& cfg);

} // namespace pbe
