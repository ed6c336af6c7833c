#pragma once

#include <vector>

#include "pbe/grid.hpp"
#include "pbe/params.hpp"

namespace pbe {

struct ExactState {
    GridFunction phi;
    double n = 0.0;
    double V = 0.0;
    double delta = 0.0;
    double b = 0.0;
};

// Closed-form supersaturation Delta(b); throws oracle_domain_error when
// the gamma != 1 branch leaves its real domain, reporting the critical b.
double delta_param(double b, const PhysParams& p);

// Exact parametric solution of the constant-kernel system, tabulated on
// a uniform descending b-grid from b0 to b0*b_min_factor. h(b) collects
// the profile amplitude, tau(b) the elapsed time; both are cumulative
// quadratures along the grid. Immutable after construction.
class ParametricSolution {
public:
    explicit ParametricSolution(const PhysParams& params, int n_b = 40000,
                                double b_min_factor = 1e-4);

    double delta_of_b(double b) const; // closed form, domain-checked
    double h_of_b(double b) const;     // tabulated prefix + in-segment quadrature
    double tau_of_b(double b) const;   // 0 at b0, strictly increasing as b falls
    double invert_tau(double T) const; // bisection to relative 1e-10 in b

    ExactState exact_state(double T, const GridSpec& grid) const;

    double tau_max() const { return tau_.back(); }
    double b_min() const { return b_.back(); }
    const std::vector<double>& b_grid() const { return b_; }
    const std::vector<double>& delta_table() const { return delta_; }
    const std::vector<double>& h_table() const { return h_; }
    const std::vector<double>& tau_table() const { return tau_; }
    const PhysParams& params() const { return params_; }

private:
    double integrand(double beta) const; // Delta^gamma (kappa + chi beta) / beta
    int segment_of_b(double b) const;    // k with b_[k] >= b >= b_[k+1]

    PhysParams params_;
    std::vector<double> b_;     // descending
    std::vector<double> delta_; // Delta(b_k)
    std::vector<double> h_;     // h(b_k), strictly negative
    std::vector<double> tau_;   // tau(b_k), strictly increasing
};

} // namespace pbe
