#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pbe/grid.hpp"

namespace pbe {

// Coagulation kernel in separated (low-rank) form:
//   A(xi_i, xi_j) = sum_a u[a][i] * v[a][j].
// Factors are sampled on the grid nodes, one array of length M_xi+1
// per rank term.
struct LowRankKernel {
    int rank = 0;
    std::vector<std::vector<double>> u;
    std::vector<std::vector<double>> v;
    std::string label;
    // true when every factor is a constant array; L1 then reduces to a
    // plain self-convolution of phi and needs one forward FFT instead
    // of two per rank.
    bool all_factors_constant = false;

    double reconstruct(int i, int j) const {
        double s = 0.0;
        for (int a = 0; a < rank; ++a) s += u[a][i] * v[a][j];
        return s;
    }
    double constant_value() const; // valid when all_factors_constant
};

// Singular kernels are sampled with xi clamped to max(xi, h_xi/2);
// the kernels are never evaluated below the first positive node in the
// coupled runs, the clamp only keeps node 0 finite.
double clamped_xi(const GridSpec& grid, int i);

// A(xi, eta) = (xi/eta)^(1/3) + (eta/xi)^(1/3) + 2 (exact rank 3).
double diffusion_kernel(double xi, double eta);
// A(xi, eta) = (xi^(1/3) + eta^(1/3))^2 * sqrt(1/xi + 1/eta).
double ballistic_kernel(double xi, double eta);

LowRankKernel kernel_constant(double A0, const GridSpec& grid);
LowRankKernel kernel_diffusion(const GridSpec& grid);
LowRankKernel kernel_ballistic(const GridSpec& grid, double eps, int rank_cap = 64);

// Adaptive-cross factorization of an arbitrary kernel function given in
// grid coordinates. Pivots are searched on a coarse subsample of the
// grid (every 16th node); stops once the max relative residual on 1000
// fixed-seed sample pairs drops below eps, or throws when rank_cap is
// exhausted.
LowRankKernel cross_approximate(const std::function<double(double, double)>& kernel_fn,
                                const GridSpec& grid, double eps, int rank_cap,
                                std::string label = "cross");

LowRankKernel kernel_by_name(const std::string& name, const GridSpec& grid, double A0,
                             double eps);

} // namespace pbe
