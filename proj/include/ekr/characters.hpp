#pragma once

#include <map>
#include <string>
#include <vector>

#include "ekr/numbers.hpp"
#include "ekr/partition.hpp"

namespace ekr {

// f^lambda via the hook-length formula; equals chi^lambda(id).
Int dimension(const Partition& shape);

// Exact irreducible character value chi^lambda(mu) by the Murnaghan-Nakayama
// rim-hook recursion, stripping the largest part of mu first.  Interior states
// are memoized in a process-wide cache safe for concurrent use.
Int mn_character(const Partition& shape, const Partition& cycle_type);

// All lambda |- n with dimension < bound, in enumeration order.
std::vector<Partition> low_dim_partitions(int n, const Int& bound);

// Branching rule: all shapes obtained by removing one corner cell.
std::vector<Partition> branch_restriction(const Partition& shape);

// Number of k-subsets of [n] fixed by a permutation with the given cycle type
// (a fixed k-subset is a union of cycles).
Int fixed_k_subsets(const Partition& cycle_type, int k);

struct PermCharDecomposition {
    int n = 0;
    int k = 0;
    std::map<Partition, Int> multiplicities;  // nonzero entries only
};

// Decomposes the permutation character of Sym(n) on k-subsets via the
// standard inner product; verifies it equals sum_{i=0..k} chi^{[n-i,i]}.
PermCharDecomposition perm_char_decompose(int n, int k);

struct GoldenReport {
    bool ok = true;
    std::vector<std::string> failures;
};

// Checks the tabulated excess-dimension polynomials for the characters just
// above C(n+1,4), C(n+1,5), 2*C(n+1,6); rows are partitions of n+1.
// k_case in {4,5,6}; n within the table's stated range (15 / 19 / 27).
GoldenReport exception_table_check(int n, int k_case);

struct CharGrid {
    std::string case_name;
    int n = 0;
    std::vector<Partition> shapes;
    std::vector<Partition> classes;
    std::vector<std::vector<Int>> values;  // values[row][col]
};

// Character grid of the low-dimensional shapes against the weighting classes
// of the given case: one of k3-even, k3-odd, k4-even, k4-odd, k5-even, k5-odd.
CharGrid character_grid(const std::string& case_name, int n);

// Shapes listed in the low-dimension lemmas: S_n (dim < C(n,4)), T_n
// (between C(n,4) and C(n,5)), U_n (between C(n,5) and 2 C(n,6)).
std::vector<Partition> lemma_set_S(int n);
std::vector<Partition> lemma_set_T(int n);
std::vector<Partition> lemma_set_U(int n);

// Drops cached character values (mainly for tests measuring cold behaviour).
void clear_character_cache();

// Optional on-disk cache keyed by schema version; no-ops on empty dir.
void load_character_cache(const std::string& dir);
void save_character_cache(const std::string& dir);

}  // namespace ekr
