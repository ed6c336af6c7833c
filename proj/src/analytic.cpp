#include "pbe/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "pbe/errors.hpp"

namespace pbe {

namespace {
// 2-point Gauss-Legendre node offset on [-1, 1].
constexpr double kGauss2 = 0.57735026918962576; // 1/sqrt(3)
} // namespace

double delta_param(double b, const PhysParams& p) {
    if (!(b > 0.0))
        throw oracle_domain_error("delta(b): b must be positive, got " + std::to_string(b));
    if (p.gamma == 1.0)
        return p.delta0 * std::pow(b / p.b0, 2.0 * p.kappa / p.c_s) *
               std::exp(2.0 * p.chi * (b - p.b0) / p.c_s);
    const double one_m_g = 1.0 - p.gamma;
    const double bracket =
        std::pow(p.delta0, one_m_g) +
        (p.kappa * one_m_g / p.c_s) *
            (std::log(b * b / (p.b0 * p.b0)) + 2.0 * p.chi * (b - p.b0) / p.kappa);
    if (bracket < 0.0)
        throw oracle_domain_error("delta(b): supersaturation leaves its real domain at b = " +
                                  std::to_string(b) + " (bracket = " + std::to_string(bracket) +
                                  ")");
    return std::pow(bracket, 1.0 / one_m_g);
}

double ParametricSolution::integrand(double beta) const {
    const double d = delta_param(beta, params_);
    return std::pow(d, params_.gamma) * (params_.kappa + params_.chi * beta) / beta;
}

ParametricSolution::ParametricSolution(const PhysParams& params, int n_b, double b_min_factor)
    : params_(params) {
    validate(params_);
    if (n_b < 2) throw std::invalid_argument("ParametricSolution: need at least 2 b-nodes");
    if (!(b_min_factor > 0.0 && b_min_factor < 1.0))
        throw std::invalid_argument("ParametricSolution: b_min_factor must lie in (0, 1)");

    const double b0 = params_.b0;
    const double b_lo = b0 * b_min_factor;
    b_.resize(n_b);
    delta_.resize(n_b);
    h_.resize(n_b);
    tau_.resize(n_b);
    const double db = (b_lo - b0) / (n_b - 1); // negative
    for (int k = 0; k < n_b; ++k) b_[k] = b0 + k * db;
    b_.back() = b_lo;

    for (int k = 0; k < n_b; ++k) delta_[k] = delta_param(b_[k], params_);

    // Cumulative integral of Delta^gamma (kappa + chi b) / b from b0
    // downwards, 2-point Gauss per interval. The integrand grows like
    // 1/b toward b_min; trapezoid on this grid would lose ~5 digits
    // there and break the mass-balance identity the oracle is checked
    // against.
    const double lead = -params_.phi00 / (2.0 * b0 * b0);
    double acc = 0.0;
    h_[0] = lead * b0 * b0;
    for (int k = 1; k < n_b; ++k) {
        const double half = 0.5 * (b_[k] - b_[k - 1]);
        const double mid = 0.5 * (b_[k] + b_[k - 1]);
        acc += half * (integrand(mid - kGauss2 * half) + integrand(mid + kGauss2 * half));
        h_[k] = b_[k] * b_[k] * (lead + acc);
    }
    for (int k = 0; k < n_b; ++k)
        if (!(h_[k] < 0.0))
            throw oracle_domain_error("ParametricSolution: h(b) reaches zero at b = " +
                                      std::to_string(b_[k]));

    tau_[0] = 0.0;
    for (int k = 1; k < n_b; ++k) {
        tau_[k] = tau_[k - 1] +
                  0.5 * (1.0 / h_[k] + 1.0 / h_[k - 1]) * (b_[k] - b_[k - 1]);
        if (!(tau_[k] > tau_[k - 1]))
            throw oracle_domain_error("ParametricSolution: tau(b) not increasing at b = " +
                                      std::to_string(b_[k]));
    }
}

int ParametricSolution::segment_of_b(double b) const {
    if (b > b_.front() || b < b_.back())
        throw oracle_domain_error("b = " + std::to_string(b) + " outside tabulated range [" +
                                  std::to_string(b_.back()) + ", " + std::to_string(b_.front()) +
                                  "]");
    // b_ is descending.
    auto it = std::lower_bound(b_.begin(), b_.end(), b, std::greater<double>());
    int k = static_cast<int>(it - b_.begin());
    if (k > 0) --k;
    if (k >= static_cast<int>(b_.size()) - 1) k = static_cast<int>(b_.size()) - 2;
    return k;
}

double ParametricSolution::delta_of_b(double b) const { return delta_param(b, params_); }

double ParametricSolution::h_of_b(double b) const {
    const int k = segment_of_b(b);
    // Reconstruct the prefix integral value at b_[k], then advance to b.
    const double b0 = params_.b0;
    const double lead = -params_.phi00 / (2.0 * b0 * b0);
    const double prefix = h_[k] / (b_[k] * b_[k]) - lead;
    const double half = 0.5 * (b - b_[k]);
    const double mid = 0.5 * (b + b_[k]);
    double acc = prefix;
    if (half != 0.0)
        acc += half * (integrand(mid - kGauss2 * half) + integrand(mid + kGauss2 * half));
    return b * b * (lead + acc);
}

double ParametricSolution::tau_of_b(double b) const {
    const int k = segment_of_b(b);
    const double hb = h_of_b(b);
    return tau_[k] + 0.5 * (1.0 / h_[k] + 1.0 / hb) * (b - b_[k]);
}

double ParametricSolution::invert_tau(double T) const {
    if (T < 0.0)
        throw oracle_domain_error("invert_tau: T must be nonnegative, got " + std::to_string(T));
    if (T > tau_.back())
        throw oracle_domain_error(
            "invert_tau: T = " + std::to_string(T) + " beyond tabulated horizon " +
            std::to_string(tau_.back()) + "; extend the b-grid toward smaller b");
    if (T == 0.0) return b_.front();

    const auto it = std::lower_bound(tau_.begin(), tau_.end(), T);
    const int k = std::max<int>(1, static_cast<int>(it - tau_.begin()));
    double lo = b_[k];     // tau(lo) >= T
    double hi = b_[k - 1]; // tau(hi) <= T
    for (int iter = 0; iter < 200 && (hi - lo) > 1e-10 * hi; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (tau_of_b(mid) >= T)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

ExactState ParametricSolution::exact_state(double T, const GridSpec& grid) const {
    ExactState st;
    st.b = invert_tau(T);
    const double hb = h_of_b(st.b);
    st.n = -2.0 * hb / st.b;
    st.V = -2.0 * hb / (st.b * st.b);
    st.delta = delta_param(st.b, params_);
    st.phi.resize(grid.num_nodes());
    for (int i = 0; i < grid.num_nodes(); ++i)
        st.phi[i] = -2.0 * hb * std::exp(-st.b * grid.xi(i));
    return st;
}

} // namespace pbe
