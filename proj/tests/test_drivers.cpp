#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "pbe/drivers.hpp"
#include "pbe/errors.hpp"

using namespace pbe;

namespace {

namespace fs = std::filesystem;

RunConfig tiny_cfg(const std::string& out) {
    RunConfig cfg;
    cfg.M = 200;
    cfg.Mxi = 200;
    cfg.Mtau = 100;
    cfg.out_dir = out;
    return cfg;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p);
    REQUIRE(f.good());
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

} // namespace

TEST_CASE("verify at T = 0 matches the oracle to rounding") {
    RunConfig cfg = tiny_cfg("test_out/verify0");
    cfg.T = 0.0;
    std::ostringstream log;
    const VerifyReport rep = cmd_verify(cfg, log);
    CHECK(rep.l2_rel_phi <= 1e-12);
    CHECK(rep.l2_rel_xiphi <= 1e-12);
    CHECK(rep.b == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(fs::exists("test_out/verify0/verify_diff.csv"));
}

TEST_CASE("verify on the scaled-down gamma = 1 setup") {
    RunConfig cfg = tiny_cfg("test_out/verify1");
    cfg.M = 500;
    cfg.Mxi = 500;
    cfg.Mtau = 320; // h_tau = h_xi^2 scaling
    std::ostringstream log;
    const VerifyReport rep = cmd_verify(cfg, log);
    CHECK(rep.l2_rel_phi <= 1e-2);
    CHECK(rep.l2_rel_xiphi <= 1e-2);
    CHECK(log.str().find("rel L2") != std::string::npos);
}

TEST_CASE("verify refuses non-constant kernels") {
    RunConfig cfg = tiny_cfg("test_out/verifyk");
    cfg.kernel = "diffusion";
    std::ostringstream log;
    CHECK_THROWS_AS(cmd_verify(cfg, log), config_error);
}

TEST_CASE("moments series starts at tau = 0 and decreases") {
    RunConfig cfg = tiny_cfg("test_out/moments");
    cfg.kappa = 0.0;
    cfg.chi = 0.0;
    cfg.H = 40.0;
    cfg.M = 800;
    cfg.Mxi = 800;
    cfg.T = 1.0;
    cfg.Mtau = 500;
    std::ostringstream log;
    const auto series = cmd_moments(cfg, log);
    REQUIRE(!series.empty());
    CHECK(series.front().tau == 0.0);
    for (std::size_t i = 1; i < series.size(); ++i) CHECK(series[i].n < series[i - 1].n);
    CHECK(std::abs(series.back().n - 2.0 / 3.0) <= 2e-3);

    const std::string csv = slurp("test_out/moments/moments.csv");
    CHECK(csv.rfind("tau,n,V,delta\n", 0) == 0);
}

TEST_CASE("emitted CSVs are deterministic") {
    RunConfig cfg = tiny_cfg("test_out/det_a");
    cfg.snapshots = {0.25};
    std::ostringstream log;
    cmd_run(cfg, log);
    cfg.out_dir = "test_out/det_b";
    cmd_run(cfg, log);
    CHECK(slurp("test_out/det_a/series.csv") == slurp("test_out/det_b/series.csv"));
    CHECK(slurp("test_out/det_a/phi_final.csv") == slurp("test_out/det_b/phi_final.csv"));
}

TEST_CASE("analytic emits the parameter table and profiles") {
    RunConfig cfg = tiny_cfg("test_out/analytic");
    cfg.snapshots = {0.5};
    std::ostringstream log;
    cmd_analytic(cfg, log);
    const std::string table = slurp("test_out/analytic/analytic_table.csv");
    CHECK(table.rfind("b,tau,delta,n,V\n", 0) == 0);
    CHECK(fs::exists("test_out/analytic/analytic_phi_tau0p5.csv"));
    CHECK(log.str().find("tau_max") != std::string::npos);
}

TEST_CASE("attractor smoke run: shared V0 and improving tails") {
    RunConfig cfg;
    cfg.H = 50.0;
    cfg.M = 500;
    cfg.Mxi = 500;
    cfg.T = 5.0;
    cfg.Mtau = 500;
    cfg.snapshots = {1.0};
    cfg.out_dir = "test_out/attractor";
    std::ostringstream log;
    const AttractorReport rep = cmd_attractor(cfg, log);
    REQUIRE(rep.entries.size() == 4);
    const double v0 = rep.entries.front().V0;
    for (const auto& e : rep.entries) {
        CHECK(e.V0 == doctest::Approx(v0).epsilon(1e-9));
        REQUIRE(e.tail_dev.count(5.0) == 1);
        REQUIRE(e.tail_dev.count(1.0) == 1);
    }
    // exp starts on the oracle curve, so its deviation is the smallest
    for (std::size_t i = 1; i < rep.entries.size(); ++i)
        CHECK(rep.entries[0].tail_dev.at(5.0) < rep.entries[i].tail_dev.at(5.0));
    // and the others relax toward the universal profile
    for (std::size_t i = 1; i < rep.entries.size(); ++i)
        CHECK(rep.entries[i].tail_dev.at(5.0) < rep.entries[i].tail_dev.at(1.0));
    CHECK(fs::exists("test_out/attractor/attractor_gaus2_tau5_xiphi.csv"));
    CHECK(fs::exists("test_out/attractor/attractor_exact_tau1.csv"));
}

TEST_CASE("attractor needs a wide enough domain") {
    RunConfig cfg = tiny_cfg("test_out/attractor_bad");
    cfg.H = 20.0;
    std::ostringstream log;
    CHECK_THROWS_AS(cmd_attractor(cfg, log), config_error);
}

TEST_CASE("bench reports fast timings and checks equivalence") {
    RunConfig cfg = tiny_cfg("test_out/bench");
    std::ostringstream log;
    const auto rows = cmd_bench(cfg, {128, 256}, log);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].t_fast_ms >= 0.0);
    CHECK(rows[0].t_naive_ms >= 0.0);
    CHECK(fs::exists("test_out/bench/bench.csv"));

    const auto capped = cmd_bench(cfg, {128, 256}, log, 128);
    CHECK(capped[1].t_naive_ms < 0.0); // skipped above the cap

    CHECK_THROWS_AS(cmd_bench(cfg, {256, 128}, log), config_error);
    CHECK_THROWS_AS(cmd_bench(cfg, {}, log), config_error);
}
