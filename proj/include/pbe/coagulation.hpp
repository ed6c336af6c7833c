#pragma once

#include <complex>
#include <cstddef>
#include <functional>

#include "pbe/grid.hpp"
#include "pbe/kernels.hpp"

namespace pbe {

// FFT buffers and plans for the fast gain operator, bound to one grid.
// Transform length is the next power of two >= 2*(M_xi+1) so the
// circular convolution never wraps around. Not safe for concurrent use
// by simultaneous evaluations; independent workspaces are.
class OperatorWorkspace {
public:
    explicit OperatorWorkspace(const GridSpec& grid);
    ~OperatorWorkspace();

    OperatorWorkspace(OperatorWorkspace&&) noexcept;
    OperatorWorkspace& operator=(OperatorWorkspace&&) noexcept;
    OperatorWorkspace(const OperatorWorkspace&) = delete;
    OperatorWorkspace& operator=(const OperatorWorkspace&) = delete;

    const GridSpec& grid() const { return grid_; }
    std::size_t fft_size() const { return nfft_; }

private:
    friend void l1_fast(const LowRankKernel&, const GridSpec&, const GridFunction&,
                        OperatorWorkspace&, GridFunction&);
    GridSpec grid_;
    std::size_t nfft_ = 0;
    // Forward inputs keep their zero padding across calls (only the
    // first M_xi+1 entries are rewritten); the inverse transform lands
    // in its own buffer.
    double* real_a_ = nullptr;          // nfft
    double* real_b_ = nullptr;          // nfft
    double* real_out_ = nullptr;        // nfft
    std::complex<double>* spec_a_ = nullptr; // nfft/2 + 1
    std::complex<double>* spec_b_ = nullptr;
    std::complex<double>* spec_acc_ = nullptr;
    void* plan_fwd_a_ = nullptr;
    void* plan_fwd_b_ = nullptr;
    void* plan_inv_acc_ = nullptr;      // spec_acc -> real_out
    void* plan_inv_a_ = nullptr;        // spec_a -> real_out (rank-1 constant path)
    std::vector<double> corr_; // trapezoid end-weight corrections, M_xi+1
};

// Gain operator L1: (1/2) integral over eta in [0, xi] of
// A(eta, xi - eta) phi(eta) phi(xi - eta), trapezoid-discretized with
// L1(0) = 0. Loss operator L2: trapezoid over the whole grid of
// A(xi, eta) phi(eta).
//
// The naive forms are O(M^2) references; the fast forms use the
// separated kernel (FFT convolution for L1, factor reductions for L2)
// and agree with the naive forms up to floating-point reassociation.

void l1_naive(const LowRankKernel& kernel, const GridSpec& grid, const GridFunction& phi,
              GridFunction& out);
void l1_naive(const std::function<double(double, double)>& kernel_fn, const GridSpec& grid,
              const GridFunction& phi, GridFunction& out);
void l2_naive(const LowRankKernel& kernel, const GridSpec& grid, const GridFunction& phi,
              GridFunction& out);
void l2_naive(const std::function<double(double, double)>& kernel_fn, const GridSpec& grid,
              const GridFunction& phi, GridFunction& out);

void l1_fast(const LowRankKernel& kernel, const GridSpec& grid, const GridFunction& phi,
             OperatorWorkspace& ws, GridFunction& out);
void l2_fast(const LowRankKernel& kernel, const GridSpec& grid, const GridFunction& phi,
             GridFunction& out);

// Value-returning conveniences.
GridFunction l1_naive(const LowRankKernel& k, const GridSpec& g, const GridFunction& phi);
GridFunction l2_naive(const LowRankKernel& k, const GridSpec& g, const GridFunction& phi);
GridFunction l1_fast(const LowRankKernel& k, const GridSpec& g, const GridFunction& phi,
                     OperatorWorkspace& ws);
GridFunction l2_fast(const LowRankKernel& k, const GridSpec& g, const GridFunction& phi);

} // namespace pbe
