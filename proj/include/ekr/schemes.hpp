#pragma once

#include <vector>

#include "ekr/numbers.hpp"
#include "ekr/partition.hpp"

namespace ekr {

struct WeightEntry {
    Partition cycle_type;
    Rat omega;  // normalized weight: the matrix is sum (omega_i/|C_i|) A_{C_i}

    friend bool operator==(const WeightEntry& a, const WeightEntry& b) {
        return a.cycle_type == b.cycle_type && a.omega == b.omega;
    }
};

// Weights on k-derangement classes of Sym(n).  Classes are pairwise distinct
// and every carried class passes is_k_derangement; weights may be negative.
struct WeightScheme {
    int n = 0;
    int k = 0;
    std::vector<WeightEntry> entries;

    void validate() const;                // throws on a malformed scheme
    WeightScheme without_zeros() const;   // drops zero-weight classes
    Rat weight_sum() const;               // row sum = xi_{[n]}
    bool all_even() const;                // nonzero classes all even
};

// xi_lambda = (1/f^lambda) * sum_i omega_i * chi^lambda(C_i), exact.
Rat eigenvalue(const WeightScheme& scheme, const Partition& shape);

struct Spectrum {
    WeightScheme scheme;
    std::vector<Partition> shapes;    // enumeration order over lambda |- n
    std::vector<Rat> values;          // aligned with shapes
    Rat max_value;
    Rat min_value;
    std::vector<Partition> argmax;    // full tie sets, enumeration order
    std::vector<Partition> argmin;

    const Rat& value_of(const Partition& shape) const;  // throws if absent
};

// Every eigenvalue, computed with `threads` workers (<=0 picks hardware
// concurrency); results are independent of the thread count.
Spectrum full_spectrum(const WeightScheme& scheme, int threads = 0);

// 2 iff every (nonzero-weight) class is even, i.e. the connection set
// generates Alt(n) and the weighted graph splits into two components; else 1.
// Cross-checked against xi_{[1^n]} == xi_{[n]}.
int max_multiplicity(const WeightScheme& scheme);

// alpha(X) <= |V| / (1 - d/tau) for a d-regular weighted graph with least
// eigenvalue tau < 0 < d.
Rat ratio_bound(const Int& num_vertices, const Rat& degree, const Rat& tau);

// alpha * omega <= |G| for vertex-transitive graphs.
Rat clique_coclique_bound(const Int& group_order, const Int& clique_or_coclique);

// For all-even schemes the eigenvalues at lambda and lambda' must coincide.
// Returns false only on an implementation bug; throws if a class is odd.
bool transpose_pairing_check(const WeightScheme& scheme, int threads = 0);

}  // namespace ekr
