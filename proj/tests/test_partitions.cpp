#include "doctest.h"

#include <set>

#include "torilab/coinvariant.hpp"
#include "torilab/partition.hpp"

using namespace torilab;

namespace {

// Independent counter: p(n) by the classical restricted-part recursion.
long long count_partitions_brute(int n, int max_part) {
    if (n == 0) return 1;
    if (max_part == 0) return 0;
    long long total = 0;
    for (int p = std::min(n, max_part); p >= 1; --p) total += count_partitions_brute(n - p, p);
    return total;
}

// All signed permutations of n letters as image vectors.
std::vector<SignedPermutation> all_signed_permutations(int n) {
    std::vector<int> base(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) base[static_cast<size_t>(i)] = i + 1;
    std::vector<SignedPermutation> out;
    std::sort(base.begin(), base.end());
    do {
        for (int mask = 0; mask < (1 << n); ++mask) {
            SignedPermutation s;
            s.image = base;
            for (int b = 0; b < n; ++b) {
                if (mask & (1 << b)) s.image[static_cast<size_t>(b)] *= -1;
            }
            out.push_back(std::move(s));
        }
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

} // namespace

TEST_CASE("partition parsing and accessors") {
    Partition p = Partition::parse("2,1");
    CHECK(p.size() == 3);
    CHECK(p.multiplicity(1) == 1);
    CHECK(p.multiplicity(2) == 1);
    CHECK(p.multiplicity(3) == 0);
    CHECK(Partition::parse("").empty());
    CHECK(Partition({1, 3, 2}).parts() == std::vector<int>{3, 2, 1}); // sorted on input
    CHECK(Partition::parse("3,3,1").str() == "3,3,1");
    CHECK_THROWS_AS(Partition({0}), std::invalid_argument);

    DoublePartition dp = DoublePartition::parse("2,1|3");
    CHECK(dp.positive == Partition({2, 1}));
    CHECK(dp.negative == Partition({3}));
    CHECK(dp.str() == "2,1|3");
    CHECK(DoublePartition::parse("|").size() == 0);
    CHECK(DoublePartition::parse("1|").str() == "1|");
    CHECK_THROWS_AS(DoublePartition::parse("2,1"), std::invalid_argument);
}

TEST_CASE("enumerate_partitions counts and order") {
    CHECK(enumerate_partitions(0).size() == 1);
    CHECK(enumerate_partitions(0)[0].empty());
    CHECK(enumerate_partitions(4).size() == 5);
    CHECK(enumerate_partitions(10).size() == static_cast<size_t>(count_partitions_brute(10, 10)));
    CHECK(enumerate_partitions(10).size() == 42);

    // reverse-lexicographic: (5), (4,1), (3,2), (3,1,1), (2,2,1), (2,1,1,1), (1^5)
    auto p5 = enumerate_partitions(5);
    REQUIRE(p5.size() == 7);
    CHECK(p5.front() == Partition({5}));
    CHECK(p5[1] == Partition({4, 1}));
    CHECK(p5[2] == Partition({3, 2}));
    CHECK(p5.back() == Partition({1, 1, 1, 1, 1}));

    // no duplicates
    for (int n = 0; n <= 9; ++n) {
        auto all = enumerate_partitions(n);
        std::set<Partition> uniq(all.begin(), all.end());
        CHECK(uniq.size() == all.size());
    }
}

TEST_CASE("enumerate_double_partitions counts and order") {
    auto d1 = enumerate_double_partitions(1);
    REQUIRE(d1.size() == 2);
    CHECK(d1[0] == DoublePartition{Partition({1}), Partition()});
    CHECK(d1[1] == DoublePartition{Partition(), Partition({1})});
    CHECK(enumerate_double_partitions(2).size() == 5);
    CHECK(enumerate_double_partitions(4).size() == 20);
    long long expected = 0;
    for (int k = 0; k <= 6; ++k) expected += count_partitions_brute(k, k) * count_partitions_brute(6 - k, 6 - k);
    CHECK(enumerate_double_partitions(6).size() == static_cast<size_t>(expected));
}

TEST_CASE("z_lambda values and S_3 class sizes against brute force") {
    CHECK(z_lambda(Partition({1, 1, 1, 1})) == factorial(4));
    CHECK(z_lambda(Partition({2, 1})) == Integer(2));
    CHECK(z_lambda(Partition({3})) == Integer(3));
    CHECK(class_size_a(Partition({2, 1})) == Integer(3));
    CHECK(class_size_a(Partition({3})) == Integer(2));

    // brute-force tally of S_3 by cycle type
    std::map<Partition, int> tally;
    for (const auto& sp : all_signed_permutations(3)) {
        bool unsigned_perm = true;
        for (int v : sp.image) {
            if (v < 0) unsigned_perm = false;
        }
        if (!unsigned_perm) continue;
        tally[sp.cycle_type().positive] += 1;
    }
    for (const auto& [lam, count] : tally) {
        CHECK(Integer(count) == class_size_a(lam));
    }
}

TEST_CASE("v_mu values and the B_3 class equation by brute force") {
    CHECK(v_mu(Partition({1})) == Integer(2));
    CHECK(class_size_bc({Partition({1}), Partition()}) == Integer(1));

    std::map<DoublePartition, int> tally;
    for (const auto& sp : all_signed_permutations(3)) tally[sp.cycle_type()] += 1;
    Integer total(0);
    for (const auto& [cls, count] : tally) {
        CHECK(Integer(count) == class_size_bc(cls));
        total += count;
    }
    CHECK(total == Integer(48));
    CHECK(tally.size() == enumerate_double_partitions(3).size());
}

TEST_CASE("class equations and integrality") {
    for (int n = 0; n <= 12; ++n) {
        Integer sum(0);
        for (const auto& lam : enumerate_partitions(n)) {
            Integer z = z_lambda(lam);
            CHECK(factorial(n) % z == 0);
            sum += factorial(n) / z;
        }
        CHECK(sum == factorial(n));
    }
    for (int n = 0; n <= 8; ++n) {
        Integer order = int_pow(Integer(2), static_cast<unsigned long>(n)) * factorial(n);
        Integer sum(0);
        for (const auto& dp : enumerate_double_partitions(n)) {
            Integer v = v_mu(dp.positive) * v_mu(dp.negative);
            CHECK(order % v == 0);
            sum += order / v;
        }
        CHECK(sum == order);
    }
}
