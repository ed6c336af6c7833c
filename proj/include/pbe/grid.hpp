#pragma once

#include <vector>

namespace pbe {

// Uniform grid over the particle-volume axis. Nodes xi_i = i*h_xi for
// i = 0..M_xi; indices 0..M cover the physical region [0, H], indices
// M+1..M_xi form the optional absorbing extension.
struct GridSpec {
    double H = 0.0;
    int M = 0;
    int M_xi = 0;
    double h_xi = 0.0;

    int num_nodes() const { return M_xi + 1; }
    double xi(int i) const { return i * h_xi; }

    bool operator==(const GridSpec&) const = default;
};

GridSpec build_grid(double H, int M, int M_xi);

// Node values of a function sampled on a GridSpec, length M_xi + 1.
using GridFunction = std::vector<double>;

// Trapezoid quadrature of f over node range [i_lo, i_hi].
// Compensated summation; returns 0 when i_lo == i_hi.
double trapezoid(const GridSpec& grid, const GridFunction& f, int i_lo, int i_hi);

struct Moments {
    double n = 0.0; // zeroth moment: particle count
    double V = 0.0; // first moment: condensed-phase volume
};

// Moments of phi over [0, xi_upper]; upper < 0 selects the physical
// region [0, H] (upper = M).
Moments moments(const GridSpec& grid, const GridFunction& phi, int upper = -1);

} // namespace pbe
