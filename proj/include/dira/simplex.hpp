#ifndef DIRA_SIMPLEX_HPP
#define DIRA_SIMPLEX_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dira/linear.hpp"

namespace dira {

// Exact rational feasibility of a system of LessEq/Equal constraints over
// free variables, by two-phase primal simplex with Bland's rule. Returns a
// satisfying point (every universe variable gets a coordinate, defaulting
// to zero) or nullopt when infeasible. Deterministic for a given input.
std::optional<std::map<std::string, Rational>> simplex_feasible_point(
    const ConstraintSet& constraints, const std::vector<std::string>& universe);

}  // namespace dira

#endif
