#include "pbe/coagulation.hpp"

#include <fftw3.h>

#include <cmath>
#include <stdexcept>
#include <string>

namespace pbe {

namespace {

// Smallest 5-smooth length >= n. FFTW runs radix-2/3/5 sizes at close
// to power-of-two speed, and the tighter padding (<= ~1.35x instead of
// up to 2x) matters once the buffers outgrow the cache.
std::size_t next_fft_length(std::size_t n) {
    std::size_t best = std::size_t(1) << 62;
    for (std::size_t f5 = 1; f5 < 8 * n; f5 *= 5)
        for (std::size_t f35 = f5; f35 < 8 * n; f35 *= 3) {
            std::size_t len = f35;
            while (len < n) len *= 2;
            best = std::min(best, len);
        }
    return best;
}

void check_sizes(const LowRankKernel& k, const GridSpec& g, const GridFunction& phi) {
    const int n = g.num_nodes();
    if (static_cast<int>(phi.size()) != n)
        throw std::invalid_argument("coagulation: phi size " + std::to_string(phi.size()) +
                                    " does not match grid (" + std::to_string(n) + " nodes)");
    if (k.rank < 1 || static_cast<int>(k.u.size()) != k.rank ||
        static_cast<int>(k.v.size()) != k.rank)
        throw std::invalid_argument("coagulation: malformed low-rank kernel");
    for (int a = 0; a < k.rank; ++a)
        if (static_cast<int>(k.u[a].size()) != n || static_cast<int>(k.v[a].size()) != n)
            throw std::invalid_argument("coagulation: kernel factors sampled on another grid");
}

} // namespace

OperatorWorkspace::OperatorWorkspace(const GridSpec& grid) : grid_(grid) {
    const std::size_t n = static_cast<std::size_t>(grid.num_nodes());
    nfft_ = next_fft_length(2 * n);
    const std::size_t nspec = nfft_ / 2 + 1;
    real_a_ = fftw_alloc_real(nfft_);
    real_b_ = fftw_alloc_real(nfft_);
    real_out_ = fftw_alloc_real(nfft_);
    spec_a_ = reinterpret_cast<std::complex<double>*>(fftw_alloc_complex(nspec));
    spec_b_ = reinterpret_cast<std::complex<double>*>(fftw_alloc_complex(nspec));
    spec_acc_ = reinterpret_cast<std::complex<double>*>(fftw_alloc_complex(nspec));
    plan_fwd_a_ = fftw_plan_dft_r2c_1d(static_cast<int>(nfft_), real_a_,
                                       reinterpret_cast<fftw_complex*>(spec_a_), FFTW_ESTIMATE);
    plan_fwd_b_ = fftw_plan_dft_r2c_1d(static_cast<int>(nfft_), real_b_,
                                       reinterpret_cast<fftw_complex*>(spec_b_), FFTW_ESTIMATE);
    plan_inv_acc_ = fftw_plan_dft_c2r_1d(static_cast<int>(nfft_),
                                         reinterpret_cast<fftw_complex*>(spec_acc_), real_out_,
                                         FFTW_ESTIMATE);
    plan_inv_a_ = fftw_plan_dft_c2r_1d(static_cast<int>(nfft_),
                                       reinterpret_cast<fftw_complex*>(spec_a_), real_out_,
                                       FFTW_ESTIMATE);
    // after planning: MEASURE-class flags would scribble over the arrays
    for (std::size_t i = 0; i < nfft_; ++i) real_a_[i] = real_b_[i] = 0.0;
    corr_.resize(n);
}

OperatorWorkspace::~OperatorWorkspace() {
    if (plan_fwd_a_) fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_a_));
    if (plan_fwd_b_) fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_b_));
    if (plan_inv_acc_) fftw_destroy_plan(static_cast<fftw_plan>(plan_inv_acc_));
    if (plan_inv_a_) fftw_destroy_plan(static_cast<fftw_plan>(plan_inv_a_));
    fftw_free(real_a_);
    fftw_free(real_b_);
    fftw_free(real_out_);
    fftw_free(spec_a_);
    fftw_free(spec_b_);
    fftw_free(spec_acc_);
}

OperatorWorkspace::OperatorWorkspace(OperatorWorkspace&& o) noexcept
    : grid_(o.grid_), nfft_(o.nfft_), real_a_(o.real_a_), real_b_(o.real_b_),
      real_out_(o.real_out_), spec_a_(o.spec_a_), spec_b_(o.spec_b_), spec_acc_(o.spec_acc_),
      plan_fwd_a_(o.plan_fwd_a_), plan_fwd_b_(o.plan_fwd_b_), plan_inv_acc_(o.plan_inv_acc_),
      plan_inv_a_(o.plan_inv_a_), corr_(std::move(o.corr_)) {
    o.real_a_ = o.real_b_ = o.real_out_ = nullptr;
    o.spec_a_ = o.spec_b_ = o.spec_acc_ = nullptr;
    o.plan_fwd_a_ = o.plan_fwd_b_ = o.plan_inv_acc_ = o.plan_inv_a_ = nullptr;
}

OperatorWorkspace& OperatorWorkspace::operator=(OperatorWorkspace&& o) noexcept {
    if (this != &o) {
        this->~OperatorWorkspace();
        new (this) OperatorWorkspace(std::move(o));
    }
    return *this;
}

void l1_naive(const LowRankKernel& kernel, const GridSpec& grid, const GridFunction& phi,
              GridFunction& out) {
    check_sizes(kernel, grid, phi);
    const int n = grid.num_nodes();
    out.assign(n, 0.0);
    for (int i = 1; i < n; ++i) {
        const double f0 = kernel.reconstruct(0, i) * phi[0] * phi[i];
        const double fi = kernel.reconstruct(i, 0) * phi[i] * phi[0];
        double s = 0.5 * (f0 + fi);
        for (int k = 1; k < i; ++k)
            s += kernel.reconstruct(k, i - k) * phi[k] * phi[i - k];
        out[i] = 0.5 * grid.h_xi * s;
    }
}

void l1_naive(const std::function<double(double, double)>& kernel_fn, const GridSpec& grid,
              const GridFunction& phi, GridFunction& out) {
    const int n = grid.num_nodes();
    if (static_cast<int>(phi.size()) != n)
        throw std::invalid_argument("l1_naive: phi size does not match grid");
    out.assign(n, 0.0);
    for (int i = 1; i < n; ++i) {
        const double xi = grid.xi(i);
        double s = 0.5 * (kernel_fn(0.0, xi) + kernel_fn(xi, 0.0)) * phi[0] * phi[i];
        for (int k = 1; k < i; ++k)
            s += kernel_fn(grid.xi(k), grid.xi(i - k)) * phi[k] * phi[i - k];
        out[i] = 0.5 * grid.h_xi * s;
    }
}

void l2_naive(const LowRankKernel& kernel, const GridSpec& grid, const GridFunction& phi,
              GridFunction& out) {
    check_sizes(kernel, grid, phi);
    const int n = grid.num_nodes();
    const int last = n - 1;
    out.assign(n, 0.0);
    for (int i = 0; i < n; ++i) {
        double s = 0.5 * (kernel.reconstruct(i, 0) * phi[0] +
                          kernel.reconstruct(i, last) * phi[last]);
        for (int j = 1; j < last; ++j) s += kernel.reconstruct(i, j) * phi[j];
        out[i] = grid.h_xi * s;
    }
}

void l2_naive(const std::function<double(double, double)>& kernel_fn, const GridSpec& grid,
              const GridFunction& phi, GridFunction& out) {
    const int n = grid.num_nodes();
    if (static_cast<int>(phi.size()) != n)
        throw std::invalid_argument("l2_naive: phi size does not match grid");
    const int last = n - 1;
    out.assign(n, 0.0);
    for (int i = 0; i < n; ++i) {
        const double xi = grid.xi(i);
        double s = 0.5 * (kernel_fn(xi, 0.0) * phi[0] + kernel_fn(xi, grid.xi(last)) * phi[last]);
        for (int j = 1; j < last; ++j) s += kernel_fn(xi, grid.xi(j)) * phi[j];
        out[i] = grid.h_xi * s;
    }
}

void l1_fast(const LowRankKernel& kernel, const GridSpec& grid, const GridFunction& phi,
             OperatorWorkspace& ws, GridFunction& out) {
    check_sizes(kernel, grid, phi);
    if (!(ws.grid_ == grid))
        throw std::invalid_argument("l1_fast: workspace bound to a different grid");

    const int n = grid.num_nodes();
    const std::size_t nspec = ws.nfft_ / 2 + 1;
    out.assign(n, 0.0);
    const double inv_nfft = 1.0 / static_cast<double>(ws.nfft_);
    const double half_h = 0.5 * grid.h_xi;

    if (kernel.all_factors_constant) {
        // A(xi,eta) = A0: the rank sum collapses to A0 * (phi (*) phi),
        // squared in place to skip the accumulator round trip.
        const double A0 = kernel.constant_value();
        for (int i = 0; i < n; ++i) ws.real_a_[i] = phi[i];
        fftw_execute(static_cast<fftw_plan>(ws.plan_fwd_a_));
        for (std::size_t s = 0; s < nspec; ++s) ws.spec_a_[s] *= ws.spec_a_[s];
        fftw_execute(static_cast<fftw_plan>(ws.plan_inv_a_));
        const double c0 = A0 * phi[0];
        for (int i = 1; i < n; ++i)
            out[i] = half_h * (A0 * ws.real_out_[i] * inv_nfft - c0 * phi[i]);
        out[0] = 0.0;
        return;
    }

    auto& corr = ws.corr_;
    for (std::size_t s = 0; s < nspec; ++s) ws.spec_acc_[s] = 0.0;
    for (int i = 0; i < n; ++i) corr[i] = 0.0;
    for (int a = 0; a < kernel.rank; ++a) {
        const auto& u = kernel.u[a];
        const auto& v = kernel.v[a];
        for (int i = 0; i < n; ++i) {
            ws.real_a_[i] = u[i] * phi[i];
            ws.real_b_[i] = v[i] * phi[i];
        }
        fftw_execute(static_cast<fftw_plan>(ws.plan_fwd_a_));
        fftw_execute(static_cast<fftw_plan>(ws.plan_fwd_b_));
        for (std::size_t s = 0; s < nspec; ++s)
            ws.spec_acc_[s] += ws.spec_a_[s] * ws.spec_b_[s];
        const double a0 = u[0] * phi[0];
        const double b0 = v[0] * phi[0];
        for (int i = 0; i < n; ++i) corr[i] += a0 * v[i] * phi[i] + b0 * u[i] * phi[i];
    }

    fftw_execute(static_cast<fftw_plan>(ws.plan_inv_acc_));
    for (int i = 1; i < n; ++i)
        out[i] = half_h * (ws.real_out_[i] * inv_nfft - 0.5 * corr[i]);
    out[0] = 0.0;
}

void l2_fast(const LowRankKernel& kernel, const GridSpec& grid, const GridFunction& phi,
             GridFunction& out) {
    check_sizes(kernel, grid, phi);
    const int n = grid.num_nodes();
    const int last = n - 1;
    out.assign(n, 0.0);
    for (int a = 0; a < kernel.rank; ++a) {
        const auto& v = kernel.v[a];
        double sum = 0.5 * (v[0] * phi[0] + v[last] * phi[last]);
        double c = 0.0;
        for (int j = 1; j < last; ++j) {
            const double y = v[j] * phi[j] - c;
            const double t = sum + y;
            c = (t - sum) - y;
            sum = t;
        }
        const double s_a = grid.h_xi * sum;
        const auto& u = kernel.u[a];
        for (int i = 0; i < n; ++i) out[i] += u[i] * s_a;
    }
}

GridFunction l1_naive(const LowRankKernel& k, const GridSpec& g, const GridFunction& phi) {
    GridFunction out;
    l1_naive(k, g, phi, out);
    return out;
}
GridFunction l2_naive(const LowRankKernel& k, const GridSpec& g, const GridFunction& phi) {
    GridFunction out;
    l2_naive(k, g, phi, out);
    return out;
}
GridFunction l1_fast(const LowRankKernel& k, const GridSpec& g, const GridFunction& phi,
                     OperatorWorkspace& ws) {
    GridFunction out;
    l1_fast(k, g, phi, ws, out);
    return out;
}
GridFunction l2_fast(const LowRankKernel& k, const GridSpec& g, const GridFunction& phi) {
    GridFunction out;
    l2_fast(k, g, phi, out);
    return out;
}

} // namespace pbe
