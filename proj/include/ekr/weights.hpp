#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ekr/numbers.hpp"
#include "ekr/partition.hpp"
#include "ekr/schemes.hpp"

namespace ekr {

// Dimension symbols shared by the weight systems; alpha depends on k.
struct SymbolTable {
    int n = 0;
    int k = 0;
    Int alpha;    // C(n,k) - 1
    Int beta;     // n - 1                    = f^[n-1,1]
    Int gamma;    // C(n,2) - n               = f^[n-2,2]
    Int delta;    // C(n,3) - C(n,2)          = f^[n-3,3]
    Int epsilon;  // C(n,4) - C(n,3)          = f^[n-4,4]
    Int iota;     // C(n,5) - C(n,4)          = f^[n-5,5]
    Int eta;      // C(n-1,2)                 = f^[n-2,1^2]
    Int zeta;     // n(n-2)(n-4)/3            = f^[n-3,2,1]
    Int theta;    // n(n-1)(n-4)(n-5)/12      = f^[n-4,2^2]
    Int nu;       // n(n-1)(n-3)(n-6)/8       = f^[n-4,3,1]
    Int tau;      // C(n-1,4)                 = f^[n-4,1^4]
    Int kappa;    // n(n-2)(n-3)(n-5)/8       = f^[n-4,2,1^2]
    Int mu;       // C(n-1,3)                 = f^[n-3,1^3]

    static SymbolTable make(int n, int k);
};

// Closed-form weight schemes; each constructor checks the parity/range
// precondition, cross-checks its displayed forms and the unique solution of
// the defining linear system, and throws on any disagreement.
WeightScheme scheme_k3_odd(int n);    // n odd,  n >= 27
WeightScheme scheme_k3_even(int n);   // n even, n >= 20
WeightScheme scheme_k4_even(int n);   // n even, n >= 22
WeightScheme scheme_k4_odd(int n);    // n odd,  n >= 23 (signs proven from 27/28)
WeightScheme scheme_k5_even(int n);   // n even, n >= 32
WeightScheme scheme_k5_odd(int n);    // n odd,  n >= 31

struct ConstraintSystem {
    int n = 0;
    int k = 0;
    std::vector<Partition> classes;
    struct TargetRow {
        Partition shape;
        Rat target;  // eigenvalue target: row reads sum_j w_j chi^shape(C_j) = target * f^shape
    };
    std::vector<TargetRow> rows;
};

// The paper's per-family systems (k in {4,5}); rows in the displayed order.
ConstraintSystem build_closed_form_system(int n, int k, bool even_case);

// Exact Gauss-Jordan elimination.  Overdetermined rows must be consistent and
// the solution unique; violations name the offending row.
WeightScheme solve_constraint_system(const ConstraintSystem& sys);

// Halfspace membership for the k=3 polytopes.  Points are (t,s) as printed;
// halfspaces are in (x,y) with the pinned identification x=t, y=s (the one
// under which the printed membership claims hold).  `even_case` selects the
// polytope.
bool polytope_check_k3(int n, bool even_case, const Rat& t, const Rat& s);

struct PolytopeReport {
    bool pinned;          // x=t, y=s
    bool swapped;         // x=s, y=t
    std::vector<std::string> failed_halfspaces;  // under the pinned mapping
};

PolytopeReport polytope_report_k3(int n, bool even_case, const Rat& t, const Rat& s);

struct FeasibilityOptions {
    bool even_only = true;
    int max_partitions = 100000;       // cap on p(n); above it the search is undecided
    std::int64_t max_iterations = 2'000'000;
    int threads = 0;                   // for spectrum verification
};

struct FeasibilityResult {
    enum class Status { feasible, infeasible, undecided };
    Status status = Status::undecided;
    WeightScheme scheme;      // valid when feasible
    std::int64_t simplex_iterations = 0;
    int rounds = 0;
    std::string note;
};

// Exact-rational LP search for weights satisfying the certificate targets:
// sum w = C(n,k)-1, xi_{[n-i,i]} = -1 for i = 1..k, and xi_lambda >= -1
// elsewhere.  Candidate classes are all k-derangement classes (even ones only
// under even_only).  Row generation: solve against a working subset of shape
// constraints, then verify the full spectrum and add any violated shapes.
FeasibilityResult feasibility_search(int n, int k, const FeasibilityOptions& opt = {});

// All k-derangement classes of Sym(n), optionally even-only, in the candidate
// order used by the LP (largest first part first).
std::vector<Partition> derangement_classes(int n, int k, bool even_only);

}  // namespace ekr
