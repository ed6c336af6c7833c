#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <random>

#include "pbe/grid.hpp"

using namespace pbe;

namespace {

GridFunction sample(const GridSpec& g, double (*f)(double)) {
    GridFunction out(g.num_nodes());
    for (int i = 0; i < g.num_nodes(); ++i) out[i] = f(g.xi(i));
    return out;
}

} // namespace

TEST_CASE("build_grid spacing and nodes") {
    const GridSpec g = build_grid(20.0, 4000, 4000);
    CHECK(g.h_xi == doctest::Approx(0.005).epsilon(1e-15));
    CHECK(g.num_nodes() == 4001);
    CHECK(g.xi(4000) == doctest::Approx(20.0).epsilon(1e-15));

    const GridSpec tiny = build_grid(1.0, 2, 2);
    CHECK(tiny.xi(0) == 0.0);
    CHECK(tiny.xi(1) == 0.5);
    CHECK(tiny.xi(2) == 1.0);

    const GridSpec big = build_grid(400.0, 40000, 40000);
    CHECK(big.h_xi == doctest::Approx(0.01).epsilon(1e-15));
}

TEST_CASE("build_grid rejects bad arguments") {
    CHECK_THROWS_AS(build_grid(0.0, 10, 10), std::invalid_argument);
    CHECK_THROWS_AS(build_grid(-1.0, 10, 10), std::invalid_argument);
    CHECK_THROWS_AS(build_grid(1.0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_grid(1.0, 10, 9), std::invalid_argument);
}

TEST_CASE("trapezoid on constants and linear functions") {
    const GridSpec g = build_grid(20.0, 500, 500);
    GridFunction ones(g.num_nodes(), 1.0);
    CHECK(trapezoid(g, ones, 0, g.M_xi) == doctest::Approx(20.0).epsilon(1e-13));

    const GridSpec g2 = build_grid(1.0, 2, 2);
    GridFunction lin = {0.0, 0.5, 1.0};
    CHECK(trapezoid(g2, lin, 0, 2) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("trapezoid matches the closed-form exponential integral") {
    const GridSpec g = build_grid(20.0, 4000, 4000);
    const GridFunction f = sample(g, [](double x) { return std::exp(-x); });
    const double exact = 1.0 - std::exp(-20.0);
    const double got = trapezoid(g, f, 0, g.M_xi);
    CHECK(std::abs(got - exact) <= 3e-6);
    // the deviation is the trapezoid truncation term h^2/12 (f'(H) - f'(0))
    const double em = g.h_xi * g.h_xi / 12.0 * (-std::exp(-20.0) + 1.0);
    CHECK(got - exact == doctest::Approx(em).epsilon(1e-2));
}

TEST_CASE("trapezoid is exact on affine functions") {
    const GridSpec g = build_grid(7.0, 321, 321);
    GridFunction f(g.num_nodes());
    for (int i = 0; i < g.num_nodes(); ++i) f[i] = 3.25 - 0.7 * g.xi(i);
    const double exact = 3.25 * 7.0 - 0.7 * 7.0 * 7.0 / 2.0;
    CHECK(trapezoid(g, f, 0, g.M_xi) == doctest::Approx(exact).epsilon(1e-13));
}

TEST_CASE("trapezoid is additive over adjacent ranges") {
    const GridSpec g = build_grid(5.0, 200, 240);
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    GridFunction f(g.num_nodes());
    for (double& x : f) x = uni(rng);

    std::uniform_int_distribution<int> pick(0, g.M_xi);
    for (int rep = 0; rep < 50; ++rep) {
        int a = pick(rng), b = pick(rng), c = pick(rng);
        if (a > b) std::swap(a, b);
        if (b > c) std::swap(b, c);
        if (a > b) std::swap(a, b);
        const double whole = trapezoid(g, f, a, c);
        const double split = trapezoid(g, f, a, b) + trapezoid(g, f, b, c);
        CHECK(whole == doctest::Approx(split).epsilon(1e-12));
    }
}

TEST_CASE("trapezoid edge cases and errors") {
    const GridSpec g = build_grid(1.0, 4, 4);
    GridFunction f(g.num_nodes(), 2.0);
    CHECK(trapezoid(g, f, 2, 2) == 0.0);
    CHECK_THROWS_AS(trapezoid(g, f, -1, 2), std::invalid_argument);
    CHECK_THROWS_AS(trapezoid(g, f, 0, 5), std::invalid_argument);
    CHECK_THROWS_AS(trapezoid(g, f, 3, 1), std::invalid_argument);
    GridFunction wrong(3, 1.0);
    CHECK_THROWS_AS(trapezoid(g, wrong, 0, 2), std::invalid_argument);
}

TEST_CASE("moments of the exponential profile") {
    const GridSpec g = build_grid(20.0, 4000, 4000);
    const GridFunction phi = sample(g, [](double x) { return std::exp(-x); });
    const Moments m = moments(g, phi);
    CHECK(m.n == doctest::Approx(1.0).epsilon(1e-5));
    CHECK(m.V == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("moments of zero and of the gaussian profile") {
    const GridSpec g = build_grid(20.0, 4000, 4000);
    const GridFunction zero(g.num_nodes(), 0.0);
    const Moments mz = moments(g, zero);
    CHECK(mz.n == 0.0);
    CHECK(mz.V == 0.0);

    const GridFunction gaus = sample(g, [](double x) { return 2.0 * std::exp(-x * x); });
    CHECK(moments(g, gaus).V == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("moments is linear in phi") {
    const GridSpec g = build_grid(10.0, 300, 300);
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    GridFunction f(g.num_nodes());
    for (double& x : f) x = uni(rng);
    GridFunction f3 = f;
    for (double& x : f3) x *= 3.0;

    const Moments m1 = moments(g, f);
    const Moments m3 = moments(g, f3);
    CHECK(m3.n == doctest::Approx(3.0 * m1.n).epsilon(1e-13));
    CHECK(m3.V == doctest::Approx(3.0 * m1.V).epsilon(1e-13));
}

TEST_CASE("moments upper bound selects the integration range") {
    const GridSpec g = build_grid(10.0, 100, 150);
    GridFunction f(g.num_nodes(), 1.0);
    CHECK(moments(g, f).n == doctest::Approx(10.0).epsilon(1e-13));        // [0, H]
    CHECK(moments(g, f, g.M_xi).n == doctest::Approx(15.0).epsilon(1e-13)); // padded
    CHECK_THROWS_AS(moments(g, f, 151), std::invalid_argument);
}
