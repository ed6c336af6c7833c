#pragma once

#include <stdexcept>
#include <string>

namespace pbe {

// Bad or inconsistent run configuration (CLI exit code 2).
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Runtime failure of the time integration: non-finite values,
// supersaturation exhaustion with fractional growth exponent
// (CLI exit code 3).
struct numerical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parametric solution evaluated outside its domain, or a requested
// time beyond the tabulated range (CLI exit code 4).
struct oracle_domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace pbe
