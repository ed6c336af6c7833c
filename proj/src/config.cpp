#include "pbe/config.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "pbe/errors.hpp"

namespace pbe {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

double parse_double(const std::string& v, const std::string& key, int line) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("");
        return x;
    } catch (const std::exception&) {
        throw config_error("line " + std::to_string(line) + ": key '" + key +
                           "' expects a number, got '" + v + "'");
    }
}

long parse_long(const std::string& v, const std::string& key, int line) {
    try {
        std::size_t pos = 0;
        const long x = std::stol(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("");
        return x;
    } catch (const std::exception&) {
        throw config_error("line " + std::to_string(line) + ": key '" + key +
                           "' expects an integer, got '" + v + "'");
    }
}

std::vector<double> parse_list(const std::string& v, const std::string& key, int line) {
    std::vector<double> out;
    std::string item;
    std::istringstream in(v);
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        out.push_back(parse_double(item, key, line));
    }
    return out;
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

} // namespace

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    bool mxi_given = false;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string s = trim(raw);
        if (s.empty()) continue;
        const std::size_t eq = s.find('=');
        if (eq == std::string::npos)
            throw config_error("line " + std::to_string(line) + ": expected 'key = value'");
        const std::string key = trim(s.substr(0, eq));
        const std::string val = trim(s.substr(eq + 1));

        if (key == "gamma") cfg.gamma = parse_double(val, key, line);
        else if (key == "kappa") cfg.kappa = parse_double(val, key, line);
        else if (key == "chi") cfg.chi = parse_double(val, key, line);
        else if (key == "cs") cfg.cs = parse_double(val, key, line);
        else if (key == "delta0") cfg.delta0 = parse_double(val, key, line);
        else if (key == "phi00") cfg.phi00 = parse_double(val, key, line);
        else if (key == "b0") cfg.b0 = parse_double(val, key, line);
        else if (key == "H") cfg.H = parse_double(val, key, line);
        else if (key == "M") cfg.M = parse_long(val, key, line);
        else if (key == "Mxi") { cfg.Mxi = parse_long(val, key, line); mxi_given = true; }
        else if (key == "T") cfg.T = parse_double(val, key, line);
        else if (key == "Mtau") cfg.Mtau = parse_long(val, key, line);
        else if (key == "d") cfg.d = parse_double(val, key, line);
        else if (key == "kernel") cfg.kernel = val;
        else if (key == "A0") cfg.A0 = parse_double(val, key, line);
        else if (key == "eps") cfg.eps = parse_double(val, key, line);
        else if (key == "backend") cfg.backend = val;
        else if (key == "initial") cfg.initial = val;
        else if (key == "snapshots") cfg.snapshots = parse_list(val, key, line);
        else if (key == "out_dir") cfg.out_dir = val;
        else if (key == "series_stride") cfg.series_stride = parse_long(val, key, line);
        else
            throw config_error("line " + std::to_string(line) + ": unknown key '" + key + "'");
    }
    if (!mxi_given) cfg.Mxi = cfg.M;
    validate(cfg);
    return cfg;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw config_error("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_config(buf.str());
}

std::string serialize_config(const RunConfig& cfg) {
    std::ostringstream out;
    out << "gamma = " << fmt(cfg.gamma) << '\n'
        << "kappa = " << fmt(cfg.kappa) << '\n'
        << "chi = " << fmt(cfg.chi) << '\n'
        << "cs = " << fmt(cfg.cs) << '\n'
        << "delta0 = " << fmt(cfg.delta0) << '\n'
        << "phi00 = " << fmt(cfg.phi00) << '\n'
        << "b0 = " << fmt(cfg.b0) << '\n'
        << "H = " << fmt(cfg.H) << '\n'
        << "M = " << cfg.M << '\n'
        << "Mxi = " << cfg.Mxi << '\n'
        << "T = " << fmt(cfg.T) << '\n'
        << "Mtau = " << cfg.Mtau << '\n'
        << "d = " << fmt(cfg.d) << '\n'
        << "kernel = " << cfg.kernel << '\n'
        << "A0 = " << fmt(cfg.A0) << '\n'
        << "eps = " << fmt(cfg.eps) << '\n'
        << "backend = " << cfg.backend << '\n'
        << "initial = " << cfg.initial << '\n';
    out << "snapshots = ";
    for (std::size_t i = 0; i < cfg.snapshots.size(); ++i) {
        if (i) out << ',';
        out << fmt(cfg.snapshots[i]);
    }
    out << '\n';
    out << "out_dir = " << cfg.out_dir << '\n'
        << "series_stride = " << cfg.series_stride << '\n';
    return out.str();
}

void validate(const RunConfig& cfg) {
    auto bad = [](const std::string& key, const std::string& why) {
        throw config_error("config key '" + key + "': " + why);
    };
    if (!(cfg.gamma > 0.0)) bad("gamma", "must be positive");
    if (cfg.kappa < 0.0) bad("kappa", "must be nonnegative");
    if (cfg.chi < 0.0) bad("chi", "must be nonnegative");
    if (!(cfg.cs > 0.0)) bad("cs", "must be positive");
    if (!(cfg.delta0 > 0.0)) bad("delta0", "must be positive");
    if (!(cfg.phi00 > 0.0)) bad("phi00", "must be positive");
    if (!(cfg.b0 > 0.0)) bad("b0", "must be positive");
    if (!(cfg.H > 0.0)) bad("H", "must be positive");
    if (cfg.M < 2) bad("M", "must be >= 2");
    if (cfg.Mxi < cfg.M) bad("Mxi", "must be >= M");
    if (cfg.T < 0.0) bad("T", "must be nonnegative");
    if (cfg.Mtau < 1) bad("Mtau", "must be >= 1");
    if (cfg.d < 0.0) bad("d", "must be nonnegative");
    if (cfg.kernel != "constant" && cfg.kernel != "diffusion" && cfg.kernel != "ballistic")
        bad("kernel", "must be constant, diffusion or ballistic");
    if (cfg.A0 < 0.0) bad("A0", "must be nonnegative");
    if (!(cfg.eps > 0.0 && cfg.eps < 1.0)) bad("eps", "must lie in (0, 1)");
    if (cfg.backend != "fast" && cfg.backend != "naive")
        bad("backend", "must be fast or naive");
    if (cfg.initial != "exp" && cfg.initial != "pert_exp" && cfg.initial != "gaus" &&
        cfg.initial != "gaus2")
        bad("initial", "must be exp, pert_exp, gaus or gaus2");
    for (double s : cfg.snapshots)
        if (s < 0.0 || s > cfg.T) bad("snapshots", "times must lie in [0, T]");
    if (cfg.series_stride < 1) bad("series_stride", "must be >= 1");
}

GridSpec grid_from(const RunConfig& cfg) {
    return build_grid(cfg.H, static_cast<int>(cfg.M), static_cast<int>(cfg.Mxi));
}

PhysParams phys_from(const RunConfig& cfg) {
    PhysParams p;
    p.gamma = cfg.gamma;
    p.kappa = cfg.kappa;
    p.chi = cfg.chi;
    p.c_s = cfg.cs;
    p.delta0 = cfg.delta0;
    p.phi00 = cfg.phi00;
    p.b0 = cfg.b0;
    pbe::validate(p);
    return p;
}

} // namespace pbe
