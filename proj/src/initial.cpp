#include "pbe/initial.hpp"

#include <cmath>
#include <stdexcept>

#include "pbe/errors.hpp"

namespace pbe {

namespace {

double shape(InitialKind kind, double xi, const PhysParams& p) {
    switch (kind) {
    case InitialKind::Exp: return std::exp(-p.b0 * xi);
    case InitialKind::PertExp: return std::exp(-1.6 * p.b0 * xi);
    case InitialKind::Gaus: return std::exp(-xi * xi);
    case InitialKind::Gaus2: return std::exp(-(xi - 2.0) * (xi - 2.0) / 4.0);
    }
    throw std::invalid_argument("make_initial: bad kind");
}

double first_moment(const GridSpec& grid, const GridFunction& f) {
    return moments(grid, f, grid.M).V;
}

} // namespace

InitialKind initial_kind_from_name(const std::string& name) {
    if (name == "exp") return InitialKind::Exp;
    if (name == "pert_exp") return InitialKind::PertExp;
    if (name == "gaus") return InitialKind::Gaus;
    if (name == "gaus2") return InitialKind::Gaus2;
    throw config_error("unknown initial distribution '" + name + "'");
}

const char* to_string(InitialKind kind) {
    switch (kind) {
    case InitialKind::Exp: return "exp";
    case InitialKind::PertExp: return "pert_exp";
    case InitialKind::Gaus: return "gaus";
    case InitialKind::Gaus2: return "gaus2";
    }
    return "?";
}

InitialCondition make_initial(InitialKind kind, const GridSpec& grid, const PhysParams& params,
                              std::optional<double> target_V0) {
    InitialCondition ic;
    ic.kind = kind;
    const int n = grid.num_nodes();
    ic.phi.resize(n);
    for (int i = 0; i < n; ++i) ic.phi[i] = shape(kind, grid.xi(i), params);

    if (kind == InitialKind::Exp) {
        // Amplitude fixed by Phi(0,0); V(0) is derived, not prescribed.
        ic.C = params.phi00;
        for (double& x : ic.phi) x *= ic.C;
        ic.V0 = first_moment(grid, ic.phi);
        return ic;
    }

    double target = 0.0;
    if (target_V0) {
        target = *target_V0;
    } else {
        GridFunction ref(n);
        for (int i = 0; i < n; ++i) ref[i] = params.phi00 * std::exp(-params.b0 * grid.xi(i));
        target = first_moment(grid, ref);
    }
    if (!(target > 0.0))
        throw std::invalid_argument("make_initial: target V(0) must be positive");

    const double denom = first_moment(grid, ic.phi);
    if (!(denom > 0.0))
        throw std::invalid_argument("make_initial: degenerate shape integral on this grid");
    ic.C = target / denom;
    for (double& x : ic.phi) x *= ic.C;
    ic.V0 = target;
    return ic;
}

} // namespace pbe
