// Acceptance suite: runs every top-level criterion at its exact tolerance and
// prints one PASS/FAIL line per criterion.  Exit code 0 iff everything holds.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "ekr/brute.hpp"
#include "ekr/certify.hpp"
#include "ekr/characters.hpp"
#include "ekr/schemes.hpp"
#include "ekr/weights.hpp"
#include "golden_tables.hpp"
#include "test_oracles.hpp"

using namespace ekr;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

Partition ones(int n) {
    return Partition::unchecked(std::vector<int>(static_cast<std::size_t>(n), 1));
}

bool check_grid(const std::string& case_name, int n, const std::vector<std::vector<int>>& want,
                std::string& detail) {
    CharGrid g = character_grid(case_name, n);
    if (g.values.size() != want.size()) {
        detail = case_name + " row count mismatch";
        return false;
    }
    for (std::size_t r = 0; r < want.size(); ++r)
        for (std::size_t c = 0; c < want[r].size(); ++c)
            if (g.values[r][c] != want[r][c]) {
                std::ostringstream os;
                os << case_name << " n=" << n << " cell (" << g.shapes[r].to_string() << ", "
                   << g.classes[c].to_string() << ") = " << g.values[r][c].str() << ", table says "
                   << want[r][c];
                detail = os.str();
                return false;
            }
    return true;
}

bool criterion1_character_tables(std::string& detail) {
    for (int n : {20, 24})
        if (!check_grid("k3-even", n, golden::k3_even, detail)) return false;
    for (int n : {22, 24})
        if (!check_grid("k4-even", n, golden::k4_even, detail)) return false;
    for (int n : {29, 31})
        if (!check_grid("k4-odd", n, golden::k4_odd, detail)) return false;
    for (int n : {32, 34})
        if (!check_grid("k5-even", n, golden::k5_even, detail)) return false;
    for (int n : {31, 33})
        if (!check_grid("k5-odd", n, golden::k5_odd, detail)) return false;
    // no printed table exists for the odd k=3 classes; check the grid against
    // the independent row-span recursion instead
    for (int n : {27, 29}) {
        CharGrid g = character_grid("k3-odd", n);
        for (std::size_t r = 0; r < g.shapes.size(); ++r)
            for (std::size_t c = 0; c < g.classes.size(); ++c)
                if (g.values[r][c] != oracle::naive_mn(g.shapes[r], g.classes[c])) {
                    detail = "k3-odd grid disagrees with the independent recursion";
                    return false;
                }
    }
    return true;
}

bool criterion2_certification_sweep(std::string& detail) {
    struct Range {
        int k, from, to;
    };
    for (const Range& range : {Range{3, 7, 30}, Range{4, 9, 34}, Range{5, 11, 36}}) {
        for (int n = range.from; n <= range.to; ++n) {
            Certificate c;
            try {
                c = certify(n, range.k);
            } catch (const std::exception& e) {
                detail = "certify(" + std::to_string(n) + "," + std::to_string(range.k) +
                         ") threw: " + e.what();
                return false;
            }
            std::ostringstream ctx;
            ctx << "(n=" << n << ", k=" << range.k << ")";
            if (!c.certified) {
                detail = "certificate FAILED " + ctx.str() +
                         (c.violations.empty() ? "" : ": " + c.violations.front());
                return false;
            }
            if (c.max_eig != Rat(binomial(n, range.k) - 1) || c.multiplicity != 2 ||
                c.min_eig != -1) {
                detail = "certificate fields off " + ctx.str();
                return false;
            }
            for (int i = 1; i <= range.k; ++i) {
                Partition p({n - i, i});
                if (std::find(c.min_attained_at.begin(), c.min_attained_at.end(), p) ==
                    c.min_attained_at.end()) {
                    detail = "minimum not attained at " + p.to_string() + " " + ctx.str();
                    return false;
                }
            }
            if (c.sym_bound != factorial(range.k) * factorial(n - range.k) ||
                !c.alt_bound || *c.alt_bound != c.sym_bound / 2) {
                detail = "bounds off " + ctx.str();
                return false;
            }
            if (c.from_lp == closed_form_in_range(n, range.k)) {
                detail = "unexpected provenance " + ctx.str();
                return false;
            }
        }
    }
    return true;
}

bool criterion3_low_dim_lemmas(std::string& detail) {
    auto with_conjugates = [](const std::vector<Partition>& base) {
        std::set<Partition> out;
        for (const auto& p : base) {
            out.insert(p);
            out.insert(conjugate(p));
        }
        return out;
    };
    for (int n : {15, 20, 25}) {
        auto got = low_dim_partitions(n, binomial(n, 4));
        if (std::set<Partition>(got.begin(), got.end()) != with_conjugates(lemma_set_S(n))) {
            detail = "dim < C(n,4) set mismatch at n=" + std::to_string(n);
            return false;
        }
    }
    auto band = [](int n, const Int& lo, const Int& hi) {
        std::set<Partition> got;
        for (const auto& lam : enumerate_partitions(n)) {
            Int d = dimension(lam);
            if (d > lo && d < hi) got.insert(lam);
        }
        return got;
    };
    for (int n : {19, 24}) {
        if (band(n, binomial(n, 4), binomial(n, 5)) != with_conjugates(lemma_set_T(n))) {
            detail = "middle band mismatch at n=" + std::to_string(n);
            return false;
        }
    }
    for (int n : {27, 28}) {
        if (band(n, binomial(n, 5), 2 * binomial(n, 6)) != with_conjugates(lemma_set_U(n))) {
            detail = "upper band mismatch at n=" + std::to_string(n);
            return false;
        }
    }
    return true;
}

bool criterion4_weight_systems(std::string& detail) {
    struct Family {
        int k;
        bool even;
        std::vector<int> sample;
        std::function<WeightScheme(int)> closed;
    };
    const std::vector<Family> families = {
        {4, true, {22, 24, 28, 34, 40}, scheme_k4_even},
        {4, false, {23, 27, 29, 35, 41}, scheme_k4_odd},
        {5, true, {32, 34, 38, 44, 50}, scheme_k5_even},
        {5, false, {31, 33, 37, 43, 51}, scheme_k5_odd},
    };
    for (const auto& fam : families) {
        for (int n : fam.sample) {
            try {
                // solve_constraint_system also proves every overdetermined row
                // consistent, which is exactly the dependency remark
                if (solve_constraint_system(build_closed_form_system(n, fam.k, fam.even))
                        .entries != fam.closed(n).entries) {
                    detail = "system solution differs from the closed form at n=" +
                             std::to_string(n) + ", k=" + std::to_string(fam.k);
                    return false;
                }
            } catch (const std::exception& e) {
                detail = std::string("weight system at n=") + std::to_string(n) + ": " + e.what();
                return false;
            }
        }
    }
    // the three dimension identities behind the dependency remarks
    for (int n : {23, 31, 41}) {
        auto s4 = SymbolTable::make(n, 4);
        auto s5 = SymbolTable::make(n, 5);
        if (s4.alpha != s4.beta + s4.gamma + s4.delta + s4.epsilon ||
            s4.beta + s4.delta != s4.mu || s5.nu != s5.tau + s5.theta - s5.eta) {
            detail = "dimension identity failed at n=" + std::to_string(n);
            return false;
        }
    }
    return true;
}

bool criterion5_proof_step_equalities(std::string& detail) {
    for (int n : {27, 29}) {
        WeightScheme s = scheme_k3_odd(n);
        if (eigenvalue(s, ones(n)) != Rat(binomial(n, 3) - 1)) {
            detail = "sign-character eigenvalue off for the odd k=3 weighting at n=" +
                     std::to_string(n);
            return false;
        }
    }
    for (int n : {22, 24}) {
        Spectrum sp = full_spectrum(scheme_k4_even(n));
        if (sp.value_of(P({n - 3, 1, 1, 1})) != 0) {
            detail = "expected a zero eigenvalue at [n-3,1^3], n=" + std::to_string(n);
            return false;
        }
    }
    for (int n : {29, 31}) {
        Spectrum sp = full_spectrum(scheme_k4_odd(n));
        if (sp.value_of(P({n - 5, 5})) != 0) {
            detail = "expected a zero eigenvalue at [n-5,5], n=" + std::to_string(n);
            return false;
        }
    }
    struct Case {
        int k;
        std::vector<int> sample;
        std::function<WeightScheme(int)> scheme;
    };
    const std::vector<Case> cases = {
        {3, {20, 24}, scheme_k3_even},  {3, {27, 29}, scheme_k3_odd},
        {4, {22, 24}, scheme_k4_even},  {4, {29, 31}, scheme_k4_odd},
        {5, {32, 34}, scheme_k5_even},  {5, {31, 33}, scheme_k5_odd},
    };
    for (const auto& c : cases) {
        for (int n : c.sample) {
            Spectrum sp = full_spectrum(c.scheme(n));
            for (const auto& claim : low_dim_eigen_report(sp, c.k)) {
                if (!claim.ok) {
                    detail = "claim '" + claim.claim + "' fails at " + claim.shape.to_string() +
                             ", n=" + std::to_string(n) + " (value " +
                             rat_to_string(claim.value) + ")";
                    return false;
                }
            }
        }
    }
    return true;
}

bool criterion6_brute_oracles(std::string& detail) {
    if (max_coclique(DerangementGraph(Group::sym, 4, 1)).size != 6) {
        detail = "alpha(Sym(4) natural) != 6";
        return false;
    }
    if (max_coclique(DerangementGraph(Group::sym, 5, 1)).size != 24) {
        detail = "alpha(Sym(5) natural) != 24";
        return false;
    }
    if (max_coclique(DerangementGraph(Group::sym, 6, 3)).size != 36) {
        detail = "alpha(Sym(6) on 3-subsets) != 36";
        return false;
    }
    if (intersection_density(Group::alt, 4, 2) != 2) {
        detail = "rho(Alt(4) on 2-subsets) != 2";
        return false;
    }
    // matrix spectral moments at n = 4, 5, 6
    WeightScheme s4{4, 2, {{P({3, 1}), Rat(7, 2)}}};
    WeightScheme s5{5, 2, {{P({5}), Rat(1)}}};
    FeasibilityOptions opt;
    opt.even_only = false;
    FeasibilityResult fr = feasibility_search(6, 3, opt);
    if (fr.status != FeasibilityResult::Status::feasible) {
        detail = "no weighting found for the Sym(6) moment check";
        return false;
    }
    for (const auto& s : {s4, s5, fr.scheme}) {
        MomentReport rep = matrix_moment_oracle(s);
        if (!rep.ok) {
            detail = "trace(A^" + std::to_string(rep.bad_moment) + ") mismatch: matrix " +
                     rat_to_string(rep.matrix_side) + " vs characters " +
                     rat_to_string(rep.character_side);
            return false;
        }
    }
    return true;
}

bool criterion7_bound_arithmetic(std::string& detail) {
    if (ratio_bound(163680, Rat(1023), Rat(-33)) != 5115) {
        detail = "ratio bound for the 4-homogeneous group of order 163680 is off";
        return false;
    }
    if (clique_coclique_bound(163680, 5115) != 32) {
        detail = "clique-coclique bound is off";
        return false;
    }
    if (ratio_bound(10, Rat(3), Rat(-2)) != 4) {
        detail = "Petersen sanity value is off";
        return false;
    }
    return true;
}

bool criterion8_property_suites(std::string& detail) {
    for (int n = 1; n <= 12; ++n) {
        auto all = enumerate_partitions(n);
        for (const auto& mu : all) {
            Int sum = 0;
            for (const auto& lam : all) {
                Int v = mn_character(lam, mu);
                sum += v * v;
                if (mn_character(conjugate(lam), mu) != sign(mu) * v) {
                    detail = "sign twist fails at n=" + std::to_string(n);
                    return false;
                }
            }
            if (sum != factorial(n) / class_size(mu)) {
                detail = "column orthogonality fails at n=" + std::to_string(n);
                return false;
            }
        }
    }
    for (int n = 2; n <= 12; ++n) {
        for (int k = 0; 2 * k <= n && k <= 5; ++k) {
            auto d = perm_char_decompose(n, k);
            if (d.multiplicities.size() != static_cast<std::size_t>(k) + 1) {
                detail = "permutation character mismatch at n=" + std::to_string(n);
                return false;
            }
        }
    }
    for (int n = 8; n <= 12; n += 2) {
        WeightScheme s{n, 3, {}};
        Rat w(5, 3);
        for (const auto& c : derangement_classes(n, 3, false)) {
            s.entries.push_back({c, w});
            w += Rat(2, 7);
        }
        Rat trace = 0;
        for (const auto& lam : enumerate_partitions(n)) {
            Int f = dimension(lam);
            trace += Rat(f * f) * eigenvalue(s, lam);
        }
        if (trace != 0) {
            detail = "trace identity fails at n=" + std::to_string(n);
            return false;
        }
        WeightScheme even{n, 3, {}};
        for (const auto& c : derangement_classes(n, 3, true)) even.entries.push_back({c, Rat(2)});
        if (!transpose_pairing_check(even)) {
            detail = "transpose pairing fails at n=" + std::to_string(n);
            return false;
        }
    }
    return true;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<bool(std::string&)> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "character-table golden tests", criterion1_character_tables},
        {2, "certification sweep (k=3: 7..30, k=4: 9..34, k=5: 11..36)",
         criterion2_certification_sweep},
        {3, "low-dimension character sets", criterion3_low_dim_lemmas},
        {4, "weight-system consistency", criterion4_weight_systems},
        {5, "proof-step eigenvalue equalities", criterion5_proof_step_equalities},
        {6, "brute-force oracle agreement", criterion6_brute_oracles},
        {7, "ratio and clique-coclique arithmetic", criterion7_bound_arithmetic},
        {8, "property suites", criterion8_property_suites},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (ok ? "PASS" : "FAIL") << " criterion-" << c.id << ": " << c.name << " ("
                  << secs << "s)";
        if (!ok) {
            std::cout << " -- " << detail;
            ++failures;
        }
        std::cout << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
