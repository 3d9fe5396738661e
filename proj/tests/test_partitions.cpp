#include <doctest.h>

#include <set>

#include "ekr/partition.hpp"
#include "test_oracles.hpp"

using namespace ekr;

namespace {
Partition P(std::vector<int> v) { return Partition(std::move(v)); }
}  // namespace

TEST_CASE("enumeration is reverse-lexicographic and complete") {
    auto ps = enumerate_partitions(4);
    std::vector<Partition> want = {P({4}), P({3, 1}), P({2, 2}), P({2, 1, 1}), P({1, 1, 1, 1})};
    CHECK(ps == want);

    auto zero = enumerate_partitions(0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].empty());

    CHECK(enumerate_partitions(30).size() == 5604);
    CHECK(partition_count(30) == 5604);
}

TEST_CASE("enumeration is strictly descending, duplicate-free, matches the pentagonal count") {
    for (int n : {1, 5, 9, 14, 21}) {
        auto ps = enumerate_partitions(n);
        CHECK(Int(ps.size()) == partition_count(n));
        for (std::size_t i = 0; i + 1 < ps.size(); ++i) CHECK(ps[i + 1] < ps[i]);
        for (const auto& p : ps) CHECK(p.n() == n);
    }
}

TEST_CASE("conjugate") {
    CHECK(conjugate(P({9})) == P({1, 1, 1, 1, 1, 1, 1, 1, 1}));
    CHECK(conjugate(P({3, 1})) == P({2, 1, 1}));
    CHECK(conjugate(P({11, 2, 2})) == P({3, 3, 1, 1, 1, 1, 1, 1, 1, 1, 1}));
    for (const auto& p : enumerate_partitions(10)) CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("class sizes") {
    CHECK(class_size(P({7})) == factorial(6));
    CHECK(class_size(P({1, 1, 1, 1, 1})) == 1);
    // transpositions of Sym(4), counted directly
    int count = 0;
    for (const auto& perm : oracle::all_perms(4))
        if (oracle::perm_cycle_lengths(perm) == std::vector<int>{2, 1, 1}) ++count;
    CHECK(count == 6);
    CHECK(class_size(P({2, 1, 1})) == 6);

    for (int n : {5, 6, 7}) {
        // every class size matches direct enumeration
        for (const auto& t : enumerate_partitions(n)) {
            int direct = 0;
            for (const auto& perm : oracle::all_perms(n))
                if (oracle::perm_cycle_lengths(perm) == t.parts()) ++direct;
            CHECK(class_size(t) == direct);
        }
    }
}

TEST_CASE("class sizes sum to n!") {
    for (int n : {1, 4, 8, 12, 19, 25, 30}) {
        Int total = 0;
        for (const auto& t : enumerate_partitions(n)) total += class_size(t);
        CHECK(total == factorial(n));
    }
}

TEST_CASE("parity") {
    CHECK(parity(P({3})) == Parity::even);
    CHECK(parity(P({2, 1})) == Parity::odd);
    CHECK(parity(P({18, 2})) == Parity::even);  // n even, two parts
    for (int n = 2; n <= 7; ++n) {
        for (const auto& perm : oracle::all_perms(n)) {
            Partition t = Partition(oracle::perm_cycle_lengths(perm));
            CHECK(sign(t) == oracle::perm_sign_by_inversions(perm));
        }
    }
}

TEST_CASE("subpartition sums and k-derangements") {
    CHECK(has_subpartition_sum(P({2, 2, 1, 1}), 3));
    CHECK_FALSE(has_subpartition_sum(P({9}), 4));
    CHECK_FALSE(has_subpartition_sum(P({8, 1}), 4));  // sums are 1, 8, 9

    CHECK(is_k_derangement(P({5, 3}), 4));
    CHECK_FALSE(is_k_derangement(P({5, 3}), 3));

    // fixing a k-subset fixes its complement
    for (int n = 2; n <= 20; n += 3) {
        for (int k = 1; k <= 5 && k < n; ++k) {
            for (const auto& t : enumerate_partitions(n))
                CHECK(is_k_derangement(t, k) == is_k_derangement(t, n - k));
        }
    }
}

TEST_CASE("parsing and printing") {
    CHECK(parse_partition("[18,2,1,1]") == P({18, 2, 1, 1}));
    CHECK(parse_partition("18,2,1^2") == P({18, 2, 1, 1}));
    CHECK(parse_partition("2^3, 1") == P({2, 2, 2, 1}));
    CHECK(P({18, 2, 1, 1}).to_string() == "[18,2,1,1]");
    CHECK_THROWS_AS(parse_partition("[a]"), std::invalid_argument);
    CHECK_THROWS_AS(Partition(std::vector<int>{1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition(std::vector<int>{2, 0}), std::invalid_argument);
}
