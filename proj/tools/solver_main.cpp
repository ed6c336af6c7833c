#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "pbe/drivers.hpp"
#include "pbe/errors.hpp"

namespace {

pbe::RunConfig load(const std::string& config_path, const std::string& out_dir) {
    pbe::RunConfig cfg =
        config_path.empty() ? pbe::RunConfig{} : pbe::load_config_file(config_path);
    if (!out_dir.empty()) cfg.out_dir = out_dir;
    pbe::validate(cfg);
    return cfg;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Smoluchowski coagulation + Ostwald ripening solver"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    app.add_option("--config", config_path, "path to a key = value config file")
        ->check(CLI::ExistingFile);
    app.add_option("--out", out_dir, "output directory (overrides config out_dir)");

    auto* sc_verify =
        app.add_subcommand("verify", "compare the solver against the exact solution");
    auto* sc_attractor =
        app.add_subcommand("attractor", "evolve all built-in initial distributions");
    auto* sc_bench = app.add_subcommand("bench", "time the fast vs naive operator paths");
    auto* sc_analytic = app.add_subcommand("analytic", "tabulate the exact solution");
    auto* sc_moments = app.add_subcommand("moments", "emit the (tau, n, V, delta) series");
    auto* sc_run = app.add_subcommand("run", "plain simulation run");

    std::vector<int> sizes{1024, 4096, 16384};
    int naive_cap = 8192;
    sc_bench->add_option("--sizes", sizes, "grid sizes to bench (ascending)")->delimiter(',');
    sc_bench->add_option("--naive-cap", naive_cap, "largest size for the naive path");

    // accept `solver verify --config ...` (global options after the subcommand)
    for (auto* sc : {sc_verify, sc_attractor, sc_bench, sc_analytic, sc_moments, sc_run})
        sc->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        const pbe::RunConfig cfg = load(config_path, out_dir);
        if (sc_verify->parsed()) pbe::cmd_verify(cfg, std::cout);
        else if (sc_attractor->parsed()) pbe::cmd_attractor(cfg, std::cout);
        else if (sc_bench->parsed()) pbe::cmd_bench(cfg, sizes, std::cout, naive_cap);
        else if (sc_analytic->parsed()) pbe::cmd_analytic(cfg, std::cout);
        else if (sc_moments->parsed()) pbe::cmd_moments(cfg, std::cout);
        else if (sc_run->parsed()) pbe::cmd_run(cfg, std::cout);
        return 0;
    } catch (const pbe::config_error& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const pbe::numerical_error& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 3;
    } catch (const pbe::oracle_domain_error& e) {
        std::cerr << "oracle domain error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
