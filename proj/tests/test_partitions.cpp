#include <doctest.h>

#include <set>

#include "branchwork/partition.hpp"
#include "oracles.hpp"

using branchwork::CycleType;
using branchwork::Partition;

TEST_CASE("partition canonical form strips trailing zeros") {
    CHECK(Partition({3, 0}) == Partition({3}));
    CHECK(Partition({2, 0, 0}).length() == 1);
    CHECK(Partition({0, 0}).empty());
    CHECK(Partition(std::vector<int>{}).size() == 0);
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({3, 0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
}

TEST_CASE("partition text form round-trips") {
    CHECK(Partition::parse("11,9").parts() == std::vector<int>{11, 9});
    CHECK(Partition::parse("-") == Partition{});
    CHECK(Partition::parse("") == Partition{});
    CHECK(Partition::parse("0") == Partition{});
    CHECK(Partition({4, 3, 1}).to_string() == "4,3,1");
    CHECK(Partition{}.to_string() == "-");
    CHECK_THROWS_AS(Partition::parse("2,a"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("3,,1"), std::invalid_argument);
    for (int n = 0; n <= 8; ++n)
        for (const auto& p : branchwork::partitions_of(n))
            CHECK(Partition::parse(p.to_string()) == p);
}

TEST_CASE("partitions_of enumerates in descending lex order") {
    CHECK(branchwork::partitions_of(0) == std::vector<Partition>{Partition{}});
    CHECK(branchwork::partitions_of(4) ==
          std::vector<Partition>{Partition({4}), Partition({3, 1}), Partition({2, 2}),
                                 Partition({2, 1, 1}), Partition({1, 1, 1, 1})});
    CHECK(branchwork::partitions_of(10).size() == 42);

    // p(n) reference values and strict ordering.
    const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
    branchwork::DescLexLess before;
    for (int n = 0; n <= 12; ++n) {
        const auto all = branchwork::partitions_of(n);
        CHECK(static_cast<int>(all.size()) == expected[n]);
        for (size_t i = 0; i + 1 < all.size(); ++i)
            CHECK(before(all[i], all[i + 1]));
        CHECK(all.front() == Partition({n == 0 ? 0 : n}));
        if (n > 0)
            CHECK(all.back() == Partition(std::vector<int>(static_cast<size_t>(n), 1)));
    }
}

TEST_CASE("partitions_with_max_parts filters without reordering") {
    CHECK(branchwork::partitions_with_max_parts(4, 2) ==
          std::vector<Partition>{Partition({4}), Partition({3, 1}), Partition({2, 2})});
    CHECK(branchwork::partitions_with_max_parts(3, 1) ==
          std::vector<Partition>{Partition({3})});
    CHECK(branchwork::partitions_with_max_parts(0, 0) ==
          std::vector<Partition>{Partition{}});
}

TEST_CASE("conjugate transposes and is an involution") {
    CHECK(branchwork::conjugate(Partition({3, 1})) == Partition({2, 1, 1}));
    CHECK(branchwork::conjugate(Partition({2, 2})) == Partition({2, 2}));
    CHECK(branchwork::conjugate(Partition({5})) ==
          Partition(std::vector<int>(5, 1)));
    for (int n = 0; n <= 12; ++n)
        for (const auto& p : branchwork::partitions_of(n))
            CHECK(branchwork::conjugate(branchwork::conjugate(p)) == p);
}

TEST_CASE("centralizer orders and class sizes") {
    CHECK(branchwork::centralizer_order(CycleType(Partition({1, 1, 1}))) == 6);
    CHECK(branchwork::centralizer_order(CycleType(Partition({3}))) == 3);
    CHECK(branchwork::centralizer_order(CycleType(Partition({2, 1}))) == 2);
    // Class sizes partition the group.
    for (int n = 0; n <= 12; ++n) {
        mpz_class total = 0;
        for (const auto& p : branchwork::partitions_of(n))
            total += branchwork::conjugacy_class_size(CycleType(p));
        CHECK(total == branchwork::factorial(n));
    }
}

TEST_CASE("hook dimensions") {
    CHECK(branchwork::hook_dimension(Partition({7})) == 1);
    CHECK(branchwork::hook_dimension(Partition({2, 1})) == 2);
    // Independent route: standard tableaux counted by backtracking.
    CHECK(branchwork::hook_dimension(Partition({5, 4, 1})) == 288);
    CHECK(oracle::syt_count(Partition({5, 4, 1})) == 288LL);
    for (int n = 0; n <= 7; ++n)
        for (const auto& p : branchwork::partitions_of(n))
            CHECK(branchwork::hook_dimension(p) == static_cast<long>(oracle::syt_count(p)));
    // Sum of squared dimensions is the group order.
    for (int n = 0; n <= 10; ++n) {
        mpz_class total = 0;
        for (const auto& p : branchwork::partitions_of(n)) {
            const mpz_class d = branchwork::hook_dimension(p);
            total += d * d;
        }
        CHECK(total == branchwork::factorial(n));
    }
}

TEST_CASE("gl dimensions match the small spaces") {
    CHECK(branchwork::gl_dimension(Partition({3}), 3) == 10);
    CHECK(branchwork::gl_dimension(Partition({2}), 3) == 6);
    CHECK(branchwork::gl_dimension(Partition({2, 1}), 3) == 8);
    CHECK(branchwork::gl_dimension(Partition{}, 0) == 1);
    CHECK_THROWS_AS(branchwork::gl_dimension(Partition({1, 1, 1, 1}), 3),
                    std::invalid_argument);
}
