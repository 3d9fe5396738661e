#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "ekr/numbers.hpp"

namespace ekr {

enum class Parity { even, odd };

// Integer partition in canonical form: weakly decreasing positive parts, no
// trailing zeros.  The empty partition is the unique partition of 0.  Doubles
// as a cycle type of Sym(n).
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // Skips validation; caller guarantees canonical form.
    static Partition unchecked(std::vector<int> parts);

    int n() const { return n_; }
    std::size_t num_parts() const { return parts_.size(); }
    int operator[](std::size_t i) const { return parts_[i]; }
    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    friend bool operator==(const Partition&, const Partition&) = default;
    // Lexicographic on parts; enumeration order is the reverse of this.
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

    std::string to_string() const;  // e.g. "[18,2,1,1]"

  private:
    std::vector<int> parts_;
    int n_ = 0;
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : p.parts()) {
            h ^= static_cast<std::size_t>(x);
            h *= 1099511628211ull;
        }
        return h;
    }
};

// All partitions of n in reverse-lexicographic order: [n] first, [1^n] last.
std::vector<Partition> enumerate_partitions(int n);

// Number of partitions of n via the Euler pentagonal-number recurrence.
Int partition_count(int n);

Partition conjugate(const Partition& p);

// |C_lambda| = n! / prod_i i^{m_i} m_i!  (centralizer formula).
Int class_size(const Partition& cycle_type);

// Sign of any permutation with this cycle type: even iff n - #parts is even.
Parity parity(const Partition& cycle_type);

inline int sign(const Partition& cycle_type) {
    return parity(cycle_type) == Parity::even ? 1 : -1;
}

// True iff some sub-multiset of parts sums to k (exact subset-sum).
bool has_subpartition_sum(const Partition& p, int k);

// A permutation is a derangement for the k-subset action iff no sub-multiset
// of its cycle type sums to k.
inline bool is_k_derangement(const Partition& cycle_type, int k) {
    return !has_subpartition_sum(cycle_type, k);
}

struct ClassInfo {
    Partition cycle_type;
    Int size;
    Parity parity;
};

ClassInfo class_info(const Partition& cycle_type);

// Parses "[4,2,1]", "4,2,1" or exponent shorthand "4,2,1^3"; spaces allowed.
Partition parse_partition(const std::string& text);

}  // namespace ekr
