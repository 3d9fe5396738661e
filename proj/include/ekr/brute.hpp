#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ekr/numbers.hpp"
#include "ekr/partition.hpp"
#include "ekr/schemes.hpp"

namespace ekr {

using Perm = std::vector<std::uint8_t>;  // one-line form, 0-based

enum class Group { sym, alt };

Perm identity_perm(int n);
Perm compose(const Perm& p, const Perm& q);  // (p*q)[i] = p[q[i]]
Perm inverse(const Perm& p);
Partition cycle_type(const Perm& p);
int perm_sign(const Perm& p);
std::string perm_to_string(const Perm& p);  // one-line, 1-based, e.g. [2,1,3]

// Explicit derangement graph of Sym(n) or Alt(n) acting on k-subsets:
// vertices in lexicographic one-line order, g ~ h iff the cycle type of
// h g^{-1} is a k-derangement.
class DerangementGraph {
  public:
    DerangementGraph(Group group, int n, int k, std::size_t cap = 5040);

    Group group() const { return group_; }
    int n() const { return n_; }
    int k() const { return k_; }
    std::size_t num_vertices() const { return vertices_.size(); }
    const std::vector<Perm>& vertices() const { return vertices_; }
    std::size_t degree() const { return degree_; }
    const std::vector<Partition>& derangement_types() const { return derangement_types_; }

    bool adjacent(std::size_t i, std::size_t j) const {
        return (rows_[i * blocks_ + j / 64] >> (j % 64)) & 1;
    }
    const std::uint64_t* row(std::size_t i) const { return rows_.data() + i * blocks_; }
    std::size_t blocks_per_row() const { return blocks_; }

    // Graph with every vertex translated on the right by x; isomorphic.
    DerangementGraph translated(const Perm& x) const;

  private:
    DerangementGraph() = default;
    void finish_adjacency();

    Group group_ = Group::sym;
    int n_ = 0;
    int k_ = 0;
    std::vector<Perm> vertices_;
    std::vector<Partition> derangement_types_;
    std::size_t blocks_ = 0;
    std::size_t degree_ = 0;
    std::vector<std::uint64_t> rows_;
};

struct CocliqueWitness {
    std::vector<Perm> members;  // pairwise non-adjacent
    std::size_t size = 0;
    bool is_canonical = false;  // coset of a k-subset stabilizer
};

// Exact maximum coclique by branch and bound (greedy clique-cover pruning),
// normalized so the witness contains the identity.
CocliqueWitness max_coclique(const DerangementGraph& graph);

// alpha(Gamma) / |G_omega| with |G_omega| = |G| k!(n-k)!/n!.
Rat intersection_density(Group group, int n, int k, std::size_t cap = 5040);

// True iff every maximum coclique through the identity is a k-subset
// stabilizer (by vertex-transitivity this decides all maximum cocliques).
bool canonical_max_check(Group group, int n, int k);

struct MomentReport {
    bool ok = true;
    int bad_moment = 0;  // 1, 2 or 3 when ok is false
    Rat matrix_side;
    Rat character_side;
};

// Materializes the n! x n! weighted matrix (n <= 6) and checks
// trace(A^m) == sum_lambda (f^lambda)^2 xi_lambda^m for m = 1, 2, 3.
MomentReport matrix_moment_oracle(const WeightScheme& scheme);

}  // namespace ekr
