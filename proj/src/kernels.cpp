#include "pbe/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>

#include "pbe/errors.hpp"

namespace pbe {

namespace {

bool is_constant_array(const std::vector<double>& a) {
    for (double x : a)
        if (x != a.front()) return false;
    return true;
}

void mark_constant_factors(LowRankKernel& k) {
    k.all_factors_constant = true;
    for (int a = 0; a < k.rank; ++a) {
        if (!is_constant_array(k.u[a]) || !is_constant_array(k.v[a])) {
            k.all_factors_constant = false;
            return;
        }
    }
}

} // namespace

double LowRankKernel::constant_value() const {
    double s = 0.0;
    for (int a = 0; a < rank; ++a) s += u[a].front() * v[a].front();
    return s;
}

double clamped_xi(const GridSpec& grid, int i) {
    return std::max(grid.xi(i), 0.5 * grid.h_xi);
}

double diffusion_kernel(double xi, double eta) {
    return std::cbrt(xi / eta) + std::cbrt(eta / xi) + 2.0;
}

double ballistic_kernel(double xi, double eta) {
    const double r = std::cbrt(xi) + std::cbrt(eta);
    return r * r * std::sqrt(1.0 / xi + 1.0 / eta);
}

LowRankKernel kernel_constant(double A0, const GridSpec& grid) {
    if (A0 < 0.0 || !std::isfinite(A0))
        throw std::invalid_argument("kernel_constant: A0 must be nonnegative");
    LowRankKernel k;
    k.rank = 1;
    k.u.assign(1, std::vector<double>(grid.num_nodes(), A0));
    k.v.assign(1, std::vector<double>(grid.num_nodes(), 1.0));
    k.label = "constant";
    k.all_factors_constant = true;
    return k;
}

LowRankKernel kernel_diffusion(const GridSpec& grid) {
    const int n = grid.num_nodes();
    LowRankKernel k;
    k.rank = 3;
    k.u.assign(3, std::vector<double>(n));
    k.v.assign(3, std::vector<double>(n));
    for (int i = 0; i < n; ++i) {
        const double x = clamped_xi(grid, i);
        const double c = std::cbrt(x);
        k.u[0][i] = c;
        k.v[0][i] = 1.0 / c;
        k.u[1][i] = 1.0 / c;
        k.v[1][i] = c;
        k.u[2][i] = 1.0;
        k.v[2][i] = 2.0;
    }
    k.label = "diffusion";
    return k;
}

LowRankKernel kernel_ballistic(const GridSpec& grid, double eps, int rank_cap) {
    auto fn = [&grid](double xi, double eta) {
        const double floor = 0.5 * grid.h_xi;
        return ballistic_kernel(std::max(xi, floor), std::max(eta, floor));
    };
    return cross_approximate(fn, grid, eps, rank_cap, "ballistic");
}

LowRankKernel cross_approximate(const std::function<double(double, double)>& kernel_fn,
                                const GridSpec& grid, double eps, int rank_cap,
                                std::string label) {
    if (!(eps > 0.0) || !(eps < 1.0))
        throw std::invalid_argument("cross_approximate: eps must lie in (0, 1)");
    if (rank_cap < 1)
        throw std::invalid_argument("cross_approximate: rank_cap must be >= 1");

    const int n = grid.num_nodes();
    auto eval = [&](int i, int j) {
        const double a = kernel_fn(grid.xi(i), grid.xi(j));
        if (!std::isfinite(a))
            throw numerical_error("cross_approximate: kernel sample not finite at (xi=" +
                                  std::to_string(grid.xi(i)) + ", eta=" +
                                  std::to_string(grid.xi(j)) + ")");
        return a;
    };

    // Coarse subsample for the full-pivot search: a uniform stride
    // (adapted so the candidate set always exceeds the rank cap) plus
    // the leading nodes and a geometric ladder. Kernels with a
    // singularity toward xi = 0 concentrate their residual in the
    // low-index corner, which a plain stride misses.
    std::vector<int> coarse;
    const int stride = std::clamp(n / 64, 1, 16);
    for (int i = 0; i < n; i += stride) coarse.push_back(i);
    for (int i = 0; i < std::min(16, n); ++i) coarse.push_back(i);
    for (int i = 1; i < n; i *= 2) coarse.push_back(i);
    coarse.push_back(n - 1);
    std::sort(coarse.begin(), coarse.end());
    coarse.erase(std::unique(coarse.begin(), coarse.end()), coarse.end());
    const int nc = static_cast<int>(coarse.size());

    std::vector<double> rc(static_cast<std::size_t>(nc) * nc);
    std::vector<double> ac(static_cast<std::size_t>(nc) * nc); // unmodified values
    double scale = 0.0;
    for (int ci = 0; ci < nc; ++ci)
        for (int cj = 0; cj < nc; ++cj) {
            const double a = eval(coarse[ci], coarse[cj]);
            rc[static_cast<std::size_t>(ci) * nc + cj] = a;
            ac[static_cast<std::size_t>(ci) * nc + cj] = a;
            scale = std::max(scale, std::abs(a));
        }

    // Fixed sample pairs for the stopping estimate (xi > 0 region).
    std::mt19937 rng(0x5eedu);
    std::uniform_int_distribution<int> pick(std::min(1, n - 1), n - 1);
    struct Sample {
        int i, j;
        double a;
    };
    std::vector<Sample> samples(1000);
    for (auto& s : samples) {
        s.i = pick(rng);
        s.j = pick(rng);
        s.a = eval(s.i, s.j);
        scale = std::max(scale, std::abs(s.a));
    }
    const double denom_floor = std::max(1e-14 * scale, 1e-300);

    LowRankKernel k;
    k.label = std::move(label);

    auto sample_error = [&]() {
        double worst = 0.0;
        for (const auto& s : samples) {
            double recon = 0.0;
            for (int a = 0; a < k.rank; ++a) recon += k.u[a][s.i] * k.v[a][s.j];
            const double rel = std::abs(s.a - recon) / std::max(std::abs(s.a), denom_floor);
            worst = std::max(worst, rel);
        }
        return worst;
    };
    auto coarse_error = [&]() {
        double worst = 0.0;
        for (std::size_t e = 0; e < rc.size(); ++e)
            worst = std::max(worst, std::abs(rc[e]) / std::max(std::abs(ac[e]), denom_floor));
        return worst;
    };

    auto residual_at = [&](int i, int j, double aij) {
        double r = aij;
        for (int a = 0; a < k.rank; ++a) r -= k.u[a][i] * k.v[a][j];
        return r;
    };

    while (k.rank < rank_cap) {
        // Full-pivot search on the coarse residual.
        int pci = 0, pcj = 0;
        double pmax = 0.0;
        for (int ci = 0; ci < nc; ++ci)
            for (int cj = 0; cj < nc; ++cj) {
                const double r = std::abs(rc[static_cast<std::size_t>(ci) * nc + cj]);
                if (r > pmax) {
                    pmax = r;
                    pci = ci;
                    pcj = cj;
                }
            }
        int pi = coarse[pci];
        int pj = coarse[pcj];

        if (pmax <= 1e-15 * std::max(scale, 1e-300)) {
            // Coarse residual exhausted; promote the worst sample pair
            // to pivot if the sampled error still exceeds eps.
            double worst = 0.0;
            for (const auto& s : samples) {
                const double r = std::abs(residual_at(s.i, s.j, s.a)) /
                                 std::max(std::abs(s.a), denom_floor);
                if (r > worst) {
                    worst = r;
                    pi = s.i;
                    pj = s.j;
                }
            }
            if (worst <= eps) break;
        }

        // Residual column at pivot column pj (unnormalized u factor)
        // and residual row at pivot row pi (normalized v factor).
        std::vector<double> nu(n), nv(n);
        for (int i = 0; i < n; ++i) {
            double r = eval(i, pj);
            for (int a = 0; a < k.rank; ++a) r -= k.u[a][i] * k.v[a][pj];
            nu[i] = r;
        }
        const double pivot = nu[pi];
        if (pivot == 0.0) break;
        for (int j = 0; j < n; ++j) {
            double r = eval(pi, j);
            for (int a = 0; a < k.rank; ++a) r -= k.u[a][pi] * k.v[a][j];
            nv[j] = r / pivot;
        }

        for (int ci = 0; ci < nc; ++ci) {
            const double ui = nu[coarse[ci]];
            double* row = &rc[static_cast<std::size_t>(ci) * nc];
            for (int cj = 0; cj < nc; ++cj) row[cj] -= ui * nv[coarse[cj]];
        }

        k.u.push_back(std::move(nu));
        k.v.push_back(std::move(nv));
        ++k.rank;

        if (sample_error() <= eps && coarse_error() <= eps) {
            mark_constant_factors(k);
            return k;
        }
    }

    if (k.rank == 0 || sample_error() <= eps) {
        // Zero (or numerically zero) kernel factorizes as one zero term.
        if (k.rank == 0) {
            k.rank = 1;
            k.u.assign(1, std::vector<double>(n, 0.0));
            k.v.assign(1, std::vector<double>(n, 0.0));
        }
        mark_constant_factors(k);
        return k;
    }
    char epstr[32];
    std::snprintf(epstr, sizeof epstr, "%g", eps);
    throw numerical_error("cross_approximate('" + k.label + "'): rank cap " +
                          std::to_string(rank_cap) + " exhausted before reaching eps = " +
                          epstr);
}

LowRankKernel kernel_by_name(const std::string& name, const GridSpec& grid, double A0,
                             double eps) {
    if (name == "constant") return kernel_constant(A0, grid);
    if (name == "diffusion") return kernel_diffusion(grid);
    if (name == "ballistic") return kernel_ballistic(grid, eps);
    throw config_error("unknown kernel '" + name + "'");
}

} // namespace pbe
