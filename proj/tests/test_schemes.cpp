#include <doctest.h>

#include <set>

#include "ekr/characters.hpp"
#include "ekr/schemes.hpp"
#include "ekr/weights.hpp"

using namespace ekr;

namespace {
Partition P(std::vector<int> v) { return Partition(std::move(v)); }
}  // namespace

TEST_CASE("eigenvalues of simple schemes") {
    WeightScheme s = scheme_k4_even(22);
    CHECK(eigenvalue(s, P({22})) == s.weight_sum());
    CHECK(eigenvalue(s, P({22})) == Rat(binomial(22, 4) - 1));
    // all classes even, so the sign character sees the row sum too
    CHECK(eigenvalue(s, P(std::vector<int>(22, 1))) == s.weight_sum());

    // printed value for the even k=3 weighting at n = 20
    WeightScheme e = scheme_k3_even(20);
    CHECK(eigenvalue(e, P({18, 1, 1})) == Rat(189, 171));
    CHECK(eigenvalue(e, P({18, 1, 1})) == Rat(binomial(20, 2) - 1) / Rat(binomial(19, 2)));
}

TEST_CASE("scheme validation") {
    WeightScheme bad{8, 3, {{P({5, 3}), Rat(1)}}};  // (5,3) contains a part summing to 3
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    WeightScheme dup{8, 3, {{P({8}), Rat(1)}, {P({8}), Rat(2)}}};
    CHECK_THROWS_AS(dup.validate(), std::invalid_argument);
    WeightScheme ok{8, 3, {{P({8}), Rat(0)}, {P({7, 1}), Rat(2)}}};
    ok.validate();
    CHECK(ok.without_zeros().entries.size() == 1);
}

TEST_CASE("zero-weight scheme has zero spectrum") {
    WeightScheme z{8, 3, {{P({8}), Rat(0)}}};
    Spectrum sp = full_spectrum(z);
    for (const auto& v : sp.values) CHECK(v == 0);
}

TEST_CASE("full spectrum of the even k=4 weighting at n=22") {
    Spectrum sp = full_spectrum(scheme_k4_even(22));
    CHECK(sp.max_value == 7314);
    CHECK(sp.argmax.size() == 2);
    CHECK(sp.min_value == -1);
    std::set<Partition> expect_min;
    for (const auto& base : {P({21, 1}), P({20, 2}), P({19, 3}), P({18, 4}), P({19, 2, 1})}) {
        expect_min.insert(base);
        expect_min.insert(conjugate(base));
    }
    CHECK(std::set<Partition>(sp.argmin.begin(), sp.argmin.end()) == expect_min);
    // threaded evaluation must agree with single-threaded
    Spectrum sp1 = full_spectrum(scheme_k4_even(22), 1);
    CHECK(sp1.values == sp.values);
}

TEST_CASE("max multiplicity") {
    CHECK(max_multiplicity(scheme_k4_even(22)) == 2);
    // (8,1) is an odd class of Sym(9) and a 4-derangement
    WeightScheme odd{9, 4, {{P({8, 1}), Rat(5)}}};
    CHECK(max_multiplicity(odd) == 1);
    // an n-cycle is even for n odd
    WeightScheme ncyc{9, 4, {{P({9}), Rat(3)}}};
    CHECK(max_multiplicity(ncyc) == 2);
    WeightScheme empty{9, 4, {}};
    CHECK_THROWS_AS(max_multiplicity(empty), std::invalid_argument);
}

TEST_CASE("ratio bound") {
    CHECK(ratio_bound(10, Rat(3), Rat(-2)) == 4);  // Petersen
    CHECK(ratio_bound(factorial(10), Rat(binomial(10, 3) - 1), Rat(-1)) ==
          Rat(factorial(3) * factorial(7)));
    CHECK(ratio_bound(163680, Rat(1023), Rat(-33)) == 5115);
    CHECK_THROWS_AS(ratio_bound(10, Rat(3), Rat(2)), std::domain_error);
    CHECK_THROWS_AS(ratio_bound(10, Rat(-3), Rat(-2)), std::domain_error);
}

TEST_CASE("clique-coclique bound") {
    CHECK(clique_coclique_bound(163680, 5115) == 32);
    CHECK(clique_coclique_bound(factorial(8), factorial(7)) == 8);
    CHECK(clique_coclique_bound(12, 4) == 3);
    CHECK_THROWS_AS(clique_coclique_bound(12, 0), std::domain_error);
}

TEST_CASE("transpose pairing for all-even schemes") {
    CHECK(transpose_pairing_check(scheme_k4_odd(23)));
    WeightScheme k3 = scheme_k3_odd(27);
    CHECK(transpose_pairing_check(k3));
    CHECK(eigenvalue(k3, P(std::vector<int>(27, 1))) == Rat(binomial(27, 3) - 1));
    // single even class
    WeightScheme single{7, 3, {{P({7}), Rat(2)}}};
    CHECK(transpose_pairing_check(single));
    // odd class refuses the check
    WeightScheme odd{9, 4, {{P({8, 1}), Rat(5)}}};
    CHECK_THROWS_AS(transpose_pairing_check(odd), std::invalid_argument);
}
