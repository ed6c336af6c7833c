#pragma once

#include <optional>
#include <string>

#include "pbe/grid.hpp"
#include "pbe/params.hpp"

namespace pbe {

// The four built-in initial particle-volume distributions. All but the
// plain exponential carry a free amplitude that is resolved so the
// discrete first moment over [0, H] matches target_V0 (by default the
// V(0) of the exponential case on the same grid).
enum class InitialKind { Exp, PertExp, Gaus, Gaus2 };

InitialKind initial_kind_from_name(const std::string& name);
const char* to_string(InitialKind kind);

struct InitialCondition {
    GridFunction phi;
    double C = 0.0;  // resolved amplitude
    double V0 = 0.0; // discrete first moment over [0, H]
    InitialKind kind = InitialKind::Exp;
};

InitialCondition make_initial(InitialKind kind, const GridSpec& grid, const PhysParams& params,
                              std::optional<double> target_V0 = std::nullopt);

} // namespace pbe
