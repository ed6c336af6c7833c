#include "pbe/ripening.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "pbe/errors.hpp"

namespace pbe {

namespace {

void check(const GridSpec& grid, const GridFunction& phi, int min_nodes, const char* who) {
    if (static_cast<int>(phi.size()) != grid.num_nodes())
        throw std::invalid_argument(std::string(who) + ": phi size does not match grid");
    if (grid.num_nodes() < min_nodes)
        throw std::invalid_argument(std::string(who) + ": grid needs at least " +
                                    std::to_string(min_nodes) + " nodes");
}

} // namespace

void first_derivative(const GridSpec& grid, const GridFunction& phi, GridFunction& out) {
    check(grid, phi, 3, "first_derivative");
    const int last = grid.M_xi;
    const double inv2h = 1.0 / (2.0 * grid.h_xi);
    out.resize(phi.size());
    out[0] = (-3.0 * phi[0] + 4.0 * phi[1] - phi[2]) * inv2h;
    for (int i = 1; i < last; ++i) out[i] = (phi[i + 1] - phi[i - 1]) * inv2h;
    out[last] = (3.0 * phi[last] - 4.0 * phi[last - 1] + phi[last - 2]) * inv2h;
}

void second_derivative(const GridSpec& grid, const GridFunction& phi, GridFunction& out) {
    check(grid, phi, 4, "second_derivative");
    const int last = grid.M_xi;
    const double invh2 = 1.0 / (grid.h_xi * grid.h_xi);
    out.resize(phi.size());
    out[0] = (2.0 * phi[0] - 5.0 * phi[1] + 4.0 * phi[2] - phi[3]) * invh2;
    for (int i = 1; i < last; ++i) out[i] = (phi[i + 1] - 2.0 * phi[i] + phi[i - 1]) * invh2;
    out[last] =
        (2.0 * phi[last] - 5.0 * phi[last - 1] + 4.0 * phi[last - 2] - phi[last - 3]) * invh2;
}

GridFunction first_derivative(const GridSpec& grid, const GridFunction& phi) {
    GridFunction out;
    first_derivative(grid, phi, out);
    return out;
}

GridFunction second_derivative(const GridSpec& grid, const GridFunction& phi) {
    GridFunction out;
    second_derivative(grid, phi, out);
    return out;
}

double growth_factor(double delta, double gamma) {
    if (delta >= 0.0) return std::pow(delta, gamma);
    if (gamma == std::floor(gamma)) return std::pow(delta, gamma);
    throw numerical_error("supersaturation exhausted: delta = " + std::to_string(delta) +
                          " with fractional gamma = " + std::to_string(gamma));
}

void ripening_term(const GridSpec& grid, const GridFunction& phi, double delta,
                   const PhysParams& params, GridFunction& out) {
    const double dpow = growth_factor(delta, params.gamma);
    GridFunction d2;
    first_derivative(grid, phi, out);
    second_derivative(grid, phi, d2);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = dpow * (params.kappa * out[i] - params.chi * d2[i]);
}

GridFunction ripening_term(const GridSpec& grid, const GridFunction& phi, double delta,
                           const PhysParams& params) {
    GridFunction out;
    ripening_term(grid, phi, delta, params, out);
    return out;
}

AbsorberConfig make_absorber(const GridSpec& grid, double d) {
    if (d < 0.0) throw std::invalid_argument("absorber: d must be nonnegative");
    AbsorberConfig cfg;
    cfg.d = d;
    cfg.start = grid.M;
    cfg.factors.resize(grid.M_xi - grid.M);
    for (int i = grid.M + 1; i <= grid.M_xi; ++i)
        cfg.factors[i - grid.M - 1] = std::exp(-d * (i - grid.M) * grid.h_xi);
    return cfg;
}

void apply_absorber(GridFunction& phi, const AbsorberConfig& cfg) {
    if (cfg.start + cfg.factors.size() + 1 != phi.size())
        throw std::invalid_argument("apply_absorber: config bound to a different grid");
    for (std::size_t k = 0; k < cfg.factors.size(); ++k)
        phi[cfg.start + 1 + k] *= cfg.factors[k];
}

} // namespace pbe
