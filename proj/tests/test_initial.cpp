#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "pbe/errors.hpp"
#include "pbe/initial.hpp"

using namespace pbe;

namespace {

PhysParams default_params() { return PhysParams{}; }

} // namespace

TEST_CASE("exp initial condition has unit amplitude and volume") {
    const GridSpec g = build_grid(20.0, 4000, 4000);
    const InitialCondition ic = make_initial(InitialKind::Exp, g, default_params());
    CHECK(ic.C == 1.0);
    CHECK(ic.phi[0] == 1.0);
    CHECK(ic.V0 == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("normalization constants match the closed-form moments") {
    const GridSpec g = build_grid(20.0, 4000, 4000);
    const PhysParams p = default_params();

    // infinite-domain first moments of the shapes: 1/1.6^2, 1/2 and the
    // shifted-gaussian value 2 sqrt(pi) (1 + erf(1)) + 2/e
    const InitialCondition pe = make_initial(InitialKind::PertExp, g, p, 1.0);
    CHECK(pe.C == doctest::Approx(2.56).epsilon(1e-4));

    const InitialCondition ga = make_initial(InitialKind::Gaus, g, p, 1.0);
    CHECK(ga.C == doctest::Approx(2.0).epsilon(1e-4));

    const InitialCondition g2 = make_initial(InitialKind::Gaus2, g, p, 1.0);
    const double m = 2.0 * std::sqrt(M_PI) * (1.0 + std::erf(1.0)) + 2.0 / M_E;
    CHECK(g2.C == doctest::Approx(1.0 / m).epsilon(1e-4));
    CHECK(g2.C == doctest::Approx(0.1376).epsilon(1e-3));
}

TEST_CASE("all kinds share the same discrete initial volume") {
    const GridSpec g = build_grid(100.0, 2000, 2000);
    const PhysParams p = default_params();
    const InitialCondition ref = make_initial(InitialKind::Exp, g, p);
    for (const InitialKind k :
         {InitialKind::PertExp, InitialKind::Gaus, InitialKind::Gaus2}) {
        const InitialCondition ic = make_initial(k, g, p);
        CHECK(ic.V0 == doctest::Approx(ref.V0).epsilon(1e-12));
        const double recomputed = moments(g, ic.phi).V;
        CHECK(recomputed == doctest::Approx(ref.V0).epsilon(1e-10));
    }
}

TEST_CASE("profiles are nonnegative and decay below 1e-12 of their peak") {
    const GridSpec g = build_grid(100.0, 2000, 2000);
    const PhysParams p = default_params();
    for (const InitialKind k : {InitialKind::Exp, InitialKind::PertExp, InitialKind::Gaus,
                                InitialKind::Gaus2}) {
        const InitialCondition ic = make_initial(k, g, p);
        double peak = 0.0;
        for (int i = 0; i <= g.M; ++i) peak = std::max(peak, ic.phi[i]);
        for (int i = 0; i <= g.M; ++i) {
            CHECK(ic.phi[i] >= 0.0);
            // strictly positive until the gaussian shapes underflow
            // the double range (exp(-x) == 0 for x > ~745)
            if (g.xi(i) <= 27.0) CHECK(ic.phi[i] > 0.0);
        }
        CHECK(ic.phi[g.M] <= 1e-12 * peak);
    }
}

TEST_CASE("doubling the target volume doubles the amplitude") {
    const GridSpec g = build_grid(20.0, 1000, 1000);
    const PhysParams p = default_params();
    for (const InitialKind k :
         {InitialKind::PertExp, InitialKind::Gaus, InitialKind::Gaus2}) {
        const InitialCondition a = make_initial(k, g, p, 1.0);
        const InitialCondition b = make_initial(k, g, p, 2.0);
        CHECK(b.C == doctest::Approx(2.0 * a.C).epsilon(1e-13));
    }
}

TEST_CASE("kind names round-trip") {
    for (const InitialKind k : {InitialKind::Exp, InitialKind::PertExp, InitialKind::Gaus,
                                InitialKind::Gaus2})
        CHECK(initial_kind_from_name(to_string(k)) == k);
    CHECK_THROWS_AS(initial_kind_from_name("nope"), config_error);
}

TEST_CASE("degenerate targets are rejected") {
    const GridSpec g = build_grid(20.0, 100, 100);
    CHECK_THROWS_AS(make_initial(InitialKind::Gaus, g, default_params(), -1.0),
                    std::invalid_argument);
}
