#pragma once

#include <cstdint>
#include <vector>

#include "ekr/numbers.hpp"

namespace ekr {

// One row of an LP in the free variables: coeffs . x  (rel)  rhs.
struct LinearConstraint {
    enum class Rel { eq, ge };
    std::vector<Rat> coeffs;
    Rel rel = Rel::eq;
    Rat rhs;
};

struct LpResult {
    enum class Status { feasible, infeasible, iteration_limit };
    Status status = Status::iteration_limit;
    std::vector<Rat> solution;  // values of the free variables when feasible
    std::int64_t iterations = 0;
    Rat phase1_objective;       // > 0 certifies infeasibility
};

// Exact phase-1 simplex over the rationals: decides feasibility of the system
// and returns a basic solution.  Free variables are split x = u - v; pivoting
// uses Bland's rule, so the run is deterministic and cannot cycle.
LpResult phase1_feasible(const std::vector<LinearConstraint>& rows, std::size_t num_vars,
                         std::int64_t max_iterations = 2'000'000);

}  // namespace ekr
