#include <doctest.h>

#include <map>

#include <json.hpp>

#include "branchwork/branching.hpp"
#include "branchwork/partition.hpp"
#include "oracles.hpp"

using branchwork::BranchingTable;
using branchwork::Partition;

namespace {

std::map<std::string, long> as_map(const BranchingTable& table) {
    std::map<std::string, long> out;
    for (size_t i = 0; i < table.shapes.size(); ++i)
        out[table.shapes[i].to_string()] = table.values[i].get_si();
    return out;
}

} // namespace

TEST_CASE("cubic and quadratic polynomials on three variables") {
    CHECK(as_map(branchwork::branch(Partition({3}), 3)) ==
          std::map<std::string, long>{{"3", 3}, {"2,1", 3}, {"1,1,1", 1}});
    CHECK(as_map(branchwork::branch(Partition({2}), 3)) ==
          std::map<std::string, long>{{"3", 2}, {"2,1", 2}, {"1,1,1", 0}});
    CHECK_THROWS_AS(branchwork::branch(Partition({1, 1, 1, 1}), 3), std::invalid_argument);
}

TEST_CASE("single-entry path agrees with the table") {
    CHECK(branchwork::branch_one(Partition({2, 1}), Partition({2, 1}), 3) == 3);
    CHECK(branchwork::branch_one(Partition({1, 1, 1}), Partition({1, 1, 1}), 3) == 1);
    CHECK_THROWS_AS(branchwork::branch_one(Partition({2}), Partition({2, 1}), 4),
                    std::invalid_argument);
    for (int n = 1; n <= 5; ++n)
        for (int size = 0; size <= 6; ++size)
            for (const auto& lambda : branchwork::partitions_with_max_parts(size, n)) {
                const BranchingTable table = branchwork::branch(lambda, n);
                for (size_t i = 0; i < table.shapes.size(); ++i)
                    CHECK(branchwork::branch_one(lambda, table.shapes[i], n) ==
                          table.values[i]);
            }
}

TEST_CASE("degree-0 and degree-1 anchors") {
    for (int n = 1; n <= 6; ++n) {
        const auto trivial = as_map(branchwork::branch(Partition{}, n));
        for (const auto& [mu, value] : trivial)
            CHECK(value == (mu == Partition({n}).to_string() ? 1 : 0));
        const auto defining = as_map(branchwork::branch(Partition({1}), n));
        for (const auto& [mu, value] : defining) {
            const bool expected_one = mu == Partition({n}).to_string() ||
                                      (n >= 2 && mu == Partition({n - 1, 1}).to_string());
            CHECK(value == (expected_one ? 1 : 0));
        }
    }
}

TEST_CASE("one-row filling rule") {
    CHECK(branchwork::one_row_rule(2, Partition({4})) == 2);
    CHECK(branchwork::one_row_rule(2, Partition({2, 1, 1})) == 0);
    CHECK(branchwork::one_row_rule(3, Partition({3, 1})) == 4);
    // Independent route agrees with the class-sum path.
    for (int n = 1; n <= 6; ++n)
        for (const auto& mu : branchwork::partitions_of(n))
            for (int d = 0; d <= 8; ++d)
                CHECK(branchwork::one_row_rule(d, mu) ==
                      branchwork::branch_one(Partition({d}), mu, n));
}

TEST_CASE("symmetric powers of a four-dimensional space") {
    const std::map<std::string, long> expected[] = {
        {{"4", 1}, {"3,1", 0}, {"2,2", 0}, {"2,1,1", 0}, {"1,1,1,1", 0}},
        {{"4", 1}, {"3,1", 1}, {"2,2", 0}, {"2,1,1", 0}, {"1,1,1,1", 0}},
        {{"4", 2}, {"3,1", 2}, {"2,2", 1}, {"2,1,1", 0}, {"1,1,1,1", 0}},
        {{"4", 3}, {"3,1", 4}, {"2,2", 1}, {"2,1,1", 1}, {"1,1,1,1", 0}},
    };
    for (int d = 0; d <= 3; ++d)
        CHECK(as_map(branchwork::branch(Partition({d}), 4)) == expected[d]);
}

TEST_CASE("dimension sums audit the whole table") {
    for (int n = 1; n <= 6; ++n)
        for (int size = 0; size <= 12; ++size)
            for (const auto& lambda : branchwork::partitions_with_max_parts(size, n)) {
                const BranchingTable table = branchwork::branch(lambda, n);
                mpz_class total = 0;
                for (size_t i = 0; i < table.shapes.size(); ++i) {
                    CHECK(table.values[i] >= 0);
                    total += table.values[i] * branchwork::hook_dimension(table.shapes[i]);
                }
                CHECK(total == branchwork::gl_dimension(lambda, n));
            }
}

TEST_CASE("explicit tensor projections confirm n=3 multiplicities") {
    for (int size = 1; size <= 3; ++size)
        for (const auto& lambda : branchwork::partitions_of(size))
            for (const auto& mu : branchwork::partitions_of(3))
                CHECK(branchwork::branch_one(lambda, mu, 3) ==
                      oracle::tensor_branching(lambda, mu));
}

TEST_CASE("completeness classification") {
    const auto complete = branchwork::contains_all(Partition({3}), 3);
    CHECK(complete.complete);
    CHECK(complete.missing.empty());
    const auto quadratic = branchwork::contains_all(Partition({2}), 3);
    CHECK_FALSE(quadratic.complete);
    CHECK(quadratic.missing == std::vector<Partition>{Partition({1, 1, 1})});
    const auto alternating = branchwork::contains_all(Partition({1, 1}), 3);
    CHECK_FALSE(alternating.complete);
    CHECK(alternating.missing == std::vector<Partition>{Partition({3})});
}

TEST_CASE("json rendering keeps descending lex order and string values") {
    const BranchingTable table = branchwork::branch(Partition({3}), 3);
    const auto j = nlohmann::ordered_json::parse(branchwork::branching_to_json(table));
    CHECK(j["n"] == 3);
    CHECK(j["lambda"] == "3");
    CHECK(j["multiplicities"]["3"] == "3");
    CHECK(j["multiplicities"]["1,1,1"] == "1");
    std::vector<std::string> keys;
    for (auto it = j["multiplicities"].begin(); it != j["multiplicities"].end(); ++it)
        keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"3", "2,1", "1,1,1"});
}
