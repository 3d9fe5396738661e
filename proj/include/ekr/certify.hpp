#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ekr/numbers.hpp"
#include "ekr/partition.hpp"
#include "ekr/schemes.hpp"
#include "ekr/weights.hpp"

namespace ekr {

inline constexpr int kSchemaVersion = 1;

struct Certificate {
    int n = 0;
    int k = 0;
    WeightScheme scheme;
    std::string provenance;           // "closed-form:<section>" or "lp-search"
    bool from_lp = false;

    Rat max_eig;
    std::vector<Partition> max_attained_at;
    int multiplicity = 0;
    Rat min_eig;
    std::vector<Partition> min_attained_at;

    Int sym_bound;                    // k!(n-k)! when certified
    std::optional<Int> alt_bound;     // sym_bound/2, present iff multiplicity 2
    bool sym_density_one = false;
    bool alt_density_one = false;

    Int tail_threshold;               // dimension bound for the tail lemma
    Rat tail_max_abs;                 // max |xi| over shapes above the threshold
    bool tail_within_unit = false;

    bool certified = false;
    std::vector<std::string> violations;

    // Every eigenvalue <= 0 with its shape, for the record.
    std::vector<std::pair<Partition, Rat>> low_eigenvalues;

    std::int64_t lp_iterations = 0;
};

struct CertifyOptions {
    int threads = 0;
    int max_partitions = 100000;
};

// Full pipeline: route (k, parity, range) to a closed form or the LP search,
// compute the spectrum, check properties (i)-(iii) and the multiplicity, and
// derive the ratio-bound conclusions.  Throws UnsupportedError for (n,k)
// outside k in {3,4,5}, n >= 2k+1, and UndecidedError if the LP gives up.
Certificate certify(int n, int k, const CertifyOptions& opt = {});

struct UnsupportedError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct UndecidedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// True when the closed forms cover (n,k); otherwise certify uses the LP.
bool closed_form_in_range(int n, int k);
std::string closed_form_section(int n, int k);

struct TailReport {
    Int threshold;
    Rat max_abs;                      // 0 when no shape clears the threshold
    bool ok = true;                   // |xi| < 1 throughout the tail
    std::optional<Partition> counterexample;
};

// Checks |xi_lambda| < 1 for every lambda with f^lambda > threshold.
TailReport verify_tail(const Spectrum& spectrum, const Int& dim_threshold);

// The tail threshold the paper's lemmas use for each k.
Int tail_threshold_for(int n, int k);

struct EigenClaim {
    Partition shape;
    Rat value;
    std::string claim;                // "= -1", "= 0", "> 0", "> -1", "= alpha", "= <rational>"
    bool ok = false;
};

// Evaluates the per-shape equalities and sign claims the closed-form sections
// state for the low-dimensional characters; all claims must hold in range.
std::vector<EigenClaim> low_dim_eigen_report(const Spectrum& spectrum, int k);

}  // namespace ekr
