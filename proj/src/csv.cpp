#include "pbe/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace pbe {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write '" + path + "'");
    return f;
}

} // namespace

std::string format_full(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_profile_csv(const std::string& path, const GridSpec& grid, const GridFunction& f,
                       int upper, const std::string& value_name) {
    auto out = open_out(path);
    out << "xi," << value_name << '\n';
    for (int i = 0; i <= upper; ++i)
        out << format_full(grid.xi(i)) << ',' << format_full(f[i]) << '\n';
}

void write_series_csv(const std::string& path, const std::vector<SeriesPoint>& series) {
    auto out = open_out(path);
    out << "tau,n,V,delta\n";
    for (const auto& p : series)
        out << format_full(p.tau) << ',' << format_full(p.n) << ',' << format_full(p.V) << ','
            << format_full(p.delta) << '\n';
}

void write_diff_csv(const std::string& path, const GridSpec& grid, const GridFunction& num,
                    const GridFunction& exact, int upper) {
    auto out = open_out(path);
    out << "xi,phi_num,phi_exact,abs_err,rel_err\n";
    for (int i = 0; i <= upper; ++i) {
        const double a = std::abs(num[i] - exact[i]);
        const double r = a / std::max(std::abs(exact[i]), 1e-300);
        out << format_full(grid.xi(i)) << ',' << format_full(num[i]) << ','
            << format_full(exact[i]) << ',' << format_full(a) << ',' << format_full(r) << '\n';
    }
}

} // namespace pbe
