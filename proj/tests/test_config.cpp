#include <doctest.h>

#include "pbe/config.hpp"
#include "pbe/errors.hpp"

using namespace pbe;

TEST_CASE("empty config yields the verification defaults") {
    const RunConfig cfg = parse_config("");
    CHECK(cfg.gamma == 1.0);
    CHECK(cfg.kappa == 0.2);
    CHECK(cfg.chi == 0.01);
    CHECK(cfg.delta0 == 0.2);
    CHECK(cfg.cs == 10.0);
    CHECK(cfg.H == 20.0);
    CHECK(cfg.M == 4000);
    CHECK(cfg.Mxi == 4000);
    CHECK(cfg.T == 0.5);
    CHECK(cfg.Mtau == 20000);
    CHECK(cfg.d == 5.0);
    CHECK(cfg.kernel == "constant");
    CHECK(cfg.backend == "fast");
    CHECK(cfg.initial == "exp");
}

TEST_CASE("overlay of the gamma = 0.5 setup") {
    const RunConfig cfg = parse_config("gamma = 0.5\nchi = 0.1\nT = 1.0\nMtau = 40000\n");
    CHECK(cfg.gamma == 0.5);
    CHECK(cfg.chi == 0.1);
    CHECK(cfg.T == 1.0);
    CHECK(cfg.Mtau == 40000);
    CHECK(cfg.kappa == 0.2); // untouched default
}

TEST_CASE("Mxi defaults to M unless given") {
    CHECK(parse_config("M = 1000\n").Mxi == 1000);
    const RunConfig cfg = parse_config("M = 1000\nMxi = 1200\n");
    CHECK(cfg.Mxi == 1200);
}

TEST_CASE("comments, blank lines and whitespace are tolerated") {
    const RunConfig cfg = parse_config("# full-line comment\n\n  gamma = 2.0   # trailing\n");
    CHECK(cfg.gamma == 2.0);
}

TEST_CASE("snapshots parse as a comma list") {
    const RunConfig cfg = parse_config("snapshots = 0.1, 0.25,0.5\n");
    REQUIRE(cfg.snapshots.size() == 3);
    CHECK(cfg.snapshots[1] == 0.25);
}

TEST_CASE("bad input is rejected with the offending key or line") {
    CHECK_THROWS_WITH_AS(parse_config("gamma = -1\n"),
                         doctest::Contains("gamma"), config_error);
    CHECK_THROWS_WITH_AS(parse_config("gamm = 1\n"), doctest::Contains("unknown key"),
                         config_error);
    CHECK_THROWS_WITH_AS(parse_config("just nonsense\n"), doctest::Contains("line 1"),
                         config_error);
    CHECK_THROWS_AS(parse_config("M = twelve\n"), config_error);
    CHECK_THROWS_AS(parse_config("M = 1\n"), config_error);
    CHECK_THROWS_AS(parse_config("Mxi = 100\nM = 200\n"), config_error);
    CHECK_THROWS_AS(parse_config("kernel = gravity\n"), config_error);
    CHECK_THROWS_AS(parse_config("backend = gpu\n"), config_error);
    CHECK_THROWS_AS(parse_config("eps = 2\n"), config_error);
    CHECK_THROWS_AS(parse_config("snapshots = 0.9\nT = 0.5\n"), config_error);
    CHECK_THROWS_AS(parse_config("series_stride = 0\n"), config_error);
}

TEST_CASE("configs round-trip through serialization") {
    RunConfig cfg;
    cfg.gamma = 0.5;
    cfg.chi = 0.1;
    cfg.T = 1.0;
    cfg.Mtau = 40000;
    cfg.snapshots = {0.125, 0.73000000000000004, 1.0};
    cfg.kernel = "ballistic";
    cfg.eps = 1e-7;
    cfg.initial = "gaus2";
    cfg.out_dir = "somewhere/else";
    cfg.series_stride = 17;
    const RunConfig back = parse_config(serialize_config(cfg));
    CHECK(back == cfg);

    const RunConfig defaults;
    CHECK(parse_config(serialize_config(defaults)) == defaults);
}
