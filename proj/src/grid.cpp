#include "pbe/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace pbe {

GridSpec build_grid(double H, int M, int M_xi) {
    if (!(H > 0.0) || !std::isfinite(H))
        throw std::invalid_argument("build_grid: H must be positive, got " + std::to_string(H));
    if (M < 2)
        throw std::invalid_argument("build_grid: M must be >= 2, got " + std::to_string(M));
    if (M_xi < M)
        throw std::invalid_argument("build_grid: M_xi must be >= M, got " + std::to_string(M_xi));
    GridSpec g;
    g.H = H;
    g.M = M;
    g.M_xi = M_xi;
    g.h_xi = H / M;
    return g;
}

double trapezoid(const GridSpec& grid, const GridFunction& f, int i_lo, int i_hi) {
    if (static_cast<int>(f.size()) != grid.num_nodes())
        throw std::invalid_argument("trapezoid: grid function has " + std::to_string(f.size()) +
                                    " nodes, grid expects " + std::to_string(grid.num_nodes()));
    if (i_lo < 0 || i_hi > grid.M_xi || i_lo > i_hi)
        throw std::invalid_argument("trapezoid: bad node range [" + std::to_string(i_lo) + ", " +
                                    std::to_string(i_hi) + "]");
    if (i_lo == i_hi) return 0.0;

    // Kahan summation; the long sums at M ~ 4e4 lose digits otherwise.
    double sum = 0.5 * (f[i_lo] + f[i_hi]);
    double c = 0.0;
    for (int i = i_lo + 1; i < i_hi; ++i) {
        const double y = f[i] - c;
        const double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
    return grid.h_xi * sum;
}

Moments moments(const GridSpec& grid, const GridFunction& phi, int upper) {
    if (upper < 0) upper = grid.M;
    if (upper > grid.M_xi)
        throw std::invalid_argument("moments: upper index " + std::to_string(upper) +
                                    " beyond last node " + std::to_string(grid.M_xi));
    if (static_cast<int>(phi.size()) != grid.num_nodes())
        throw std::invalid_argument("moments: grid function size mismatch");

    Moments m;
    m.n = trapezoid(grid, phi, 0, upper);

    if (upper == 0) return m;
    double sum = 0.5 * grid.xi(upper) * phi[upper]; // xi_0 * phi_0 = 0
    double c = 0.0;
    for (int i = 1; i < upper; ++i) {
        const double y = grid.xi(i) * phi[i] - c;
        const double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
    m.V = grid.h_xi * sum;
    return m;
}

} // namespace pbe
