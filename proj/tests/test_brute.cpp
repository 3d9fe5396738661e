#include <doctest.h>

#include <set>

#include "ekr/brute.hpp"
#include "ekr/weights.hpp"

using namespace ekr;

namespace {
Partition P(std::vector<int> v) { return Partition(std::move(v)); }
}  // namespace

TEST_CASE("permutation plumbing") {
    Perm id = identity_perm(4);
    CHECK(cycle_type(id) == P({1, 1, 1, 1}));
    Perm p = {1, 0, 3, 2};  // (12)(34)
    CHECK(cycle_type(p) == P({2, 2}));
    CHECK(perm_sign(p) == 1);
    CHECK(compose(p, inverse(p)) == id);
    CHECK(perm_to_string(p) == "[2,1,4,3]");
}

TEST_CASE("classical derangement graph of Sym(4)") {
    DerangementGraph g(Group::sym, 4, 1);
    CHECK(g.num_vertices() == 24);
    CHECK(g.degree() == 9);  // derangements of 4 points
    CocliqueWitness w = max_coclique(g);
    CHECK(w.size == 6);  // (n-1)!
    CHECK(w.is_canonical);
    CHECK(intersection_density(Group::sym, 4, 1) == 1);
}

TEST_CASE("Alt(4) on 2-subsets exceeds the stabilizer order") {
    DerangementGraph g(Group::alt, 4, 2);
    CHECK(g.num_vertices() == 12);
    // within Alt(4) only the eight 3-cycles are 2-derangements
    std::size_t three_cycles = 0;
    for (const auto& v : g.vertices())
        if (cycle_type(v) == P({3, 1})) ++three_cycles;
    CHECK(three_cycles == 8);
    CHECK(g.degree() == 8);
    CocliqueWitness w = max_coclique(g);
    CHECK(w.size == 4);  // the Klein four-group
    CHECK_FALSE(w.is_canonical);
    CHECK(intersection_density(Group::alt, 4, 2) == 2);
    CHECK_FALSE(canonical_max_check(Group::alt, 4, 2));
}

TEST_CASE("derangement types of Sym(6) on 3-subsets") {
    DerangementGraph g(Group::sym, 6, 3);
    std::set<Partition> types(g.derangement_types().begin(), g.derangement_types().end());
    std::set<Partition> expect = {P({6}), P({5, 1}), P({4, 2}), P({4, 1, 1}), P({2, 2, 2})};
    CHECK(types == expect);
}

TEST_CASE("natural actions of Sym(5)") {
    DerangementGraph g(Group::sym, 5, 1);
    CocliqueWitness w = max_coclique(g);
    CHECK(w.size == 24);
    CHECK(intersection_density(Group::sym, 5, 1) == 1);
    CHECK(canonical_max_check(Group::sym, 5, 1));
    CHECK(canonical_max_check(Group::sym, 4, 1));

    CHECK(intersection_density(Group::sym, 5, 2) == 1);  // alpha = 12
}

TEST_CASE("group order cap") {
    CHECK_THROWS_AS(DerangementGraph(Group::sym, 7, 1, 720), std::invalid_argument);
}

TEST_CASE("translation invariance of the maximum") {
    DerangementGraph g(Group::sym, 4, 2);
    CocliqueWitness base = max_coclique(g);
    // three fixed translations
    for (const Perm& x : {Perm{1, 0, 2, 3}, Perm{1, 2, 3, 0}, Perm{3, 1, 0, 2}}) {
        DerangementGraph t = g.translated(x);
        CHECK(max_coclique(t).size == base.size);
    }
}

TEST_CASE("canonical cocliques are cocliques") {
    // direct pairwise check, no graph build: two members of a k-subset
    // stabilizer agree on that subset, so they are never adjacent
    for (int n = 3; n <= 7; ++n) {
        for (int k = 1; k <= 3 && k < n; ++k) {
            std::vector<Perm> members;
            Perm p = identity_perm(n);
            do {
                bool stab = true;
                for (int x = 0; x < k; ++x) stab = stab && p[static_cast<std::size_t>(x)] < k;
                if (stab) members.push_back(p);
            } while (std::next_permutation(p.begin(), p.end()));
            CHECK(Int(members.size()) == factorial(k) * factorial(n - k));
            for (std::size_t a = 0; a < members.size(); ++a)
                for (std::size_t b = a + 1; b < members.size(); ++b) {
                    Partition q = cycle_type(compose(members[b], inverse(members[a])));
                    CHECK_FALSE(is_k_derangement(q, k));
                }
        }
    }
}

TEST_CASE("matrix moments match the character formula") {
    // single weighted class on Sym(5)
    WeightScheme s{5, 2, {{P({5}), Rat(1)}}};
    CHECK(matrix_moment_oracle(s).ok);

    // an LP-found weighting on Sym(6) for the 3-subset action
    FeasibilityOptions opt;
    opt.even_only = false;
    FeasibilityResult fr = feasibility_search(6, 3, opt);
    REQUIRE(fr.status == FeasibilityResult::Status::feasible);
    CHECK(matrix_moment_oracle(fr.scheme).ok);

    // empty scheme: all moments vanish
    WeightScheme empty{5, 2, {}};
    CHECK(matrix_moment_oracle(empty).ok);
}
