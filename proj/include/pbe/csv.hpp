#pragma once

#include <string>
#include <vector>

#include "pbe/grid.hpp"
#include "pbe/stepper.hpp"

namespace pbe {

// All CSVs carry a header row and full round-trip precision
// (17 significant digits) so regression diffs are lossless.

std::string format_full(double x);

// Columns xi,phi over nodes [0, upper]; a different value column name
// may be given (the attractor driver emits xi,xiphi files).
void write_profile_csv(const std::string& path, const GridSpec& grid, const GridFunction& f,
                       int upper, const std::string& value_name = "phi");

// Columns tau,n,V,delta.
void write_series_csv(const std::string& path, const std::vector<SeriesPoint>& series);

// Columns xi,phi_num,phi_exact,abs_err,rel_err over nodes [0, upper].
void write_diff_csv(const std::string& path, const GridSpec& grid, const GridFunction& num,
                    const GridFunction& exact, int upper);

} // namespace pbe
