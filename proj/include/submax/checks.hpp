#pragma once

#include "submax/set_function.hpp"
#include "submax/subset.hpp"

namespace submax {

inline constexpr double kCheckTolerance = 1e-9;
inline constexpr std::size_t kExhaustiveLimit = 20;

/// f(S + u) - f(S). Two oracle queries.
double marginal(const SetFunctionOracle& oracle, std::size_t u, const Subset& s);

/// Exhaustive submodularity check (n <= 20), absolute tolerance 1e-9.
bool check_submodular(const SetFunctionOracle& oracle, std::size_t n);

/// Exhaustive non-negativity check (n <= 20): f(S) >= -1e-9 for all S.
bool check_nonnegative(const SetFunctionOracle& oracle, std::size_t n);

} // namespace submax
