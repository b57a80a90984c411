#include <doctest.h>

#include <sstream>

#include "branchwork/errors.hpp"
#include "branchwork/partition.hpp"
#include "branchwork/survey.hpp"

using branchwork::Partition;
using branchwork::SurveyRecord;

TEST_CASE("classify mirrors the completeness engine") {
    const SurveyRecord cubic = branchwork::classify(3, 3, 0);
    CHECK(cubic.complete);
    const SurveyRecord quadratic = branchwork::classify(3, 2, 0);
    CHECK_FALSE(quadratic.complete);
    CHECK(quadratic.missing == std::vector<Partition>{Partition({1, 1, 1})});
    CHECK_THROWS_AS(branchwork::classify(1, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(branchwork::classify(3, 1, 2), std::invalid_argument);
}

TEST_CASE("the square for ten letters keeps the sign representation") {
    const SurveyRecord record = branchwork::classify(10, 10, 10);
    const Partition sign(std::vector<int>(10, 1));
    for (const auto& missing : record.missing)
        CHECK(missing != sign);
}

TEST_CASE("region enumeration is the (size, lambda2) lattice") {
    const auto records = branchwork::survey_region(3, 3);
    REQUIRE(records.size() == 6);
    const std::vector<std::pair<int, int>> expected = {
        {0, 0}, {1, 0}, {2, 0}, {1, 1}, {3, 0}, {2, 1}};
    for (size_t i = 0; i < records.size(); ++i) {
        CHECK(records[i].lambda1 == expected[i].first);
        CHECK(records[i].lambda2 == expected[i].second);
        CHECK(records[i].n == 3);
    }
    CHECK_THROWS_AS(branchwork::survey_region(1, 4), std::invalid_argument);
}

TEST_CASE("region output is schedule independent") {
    const auto serial = branchwork::survey_region(5, 12, 1);
    const auto parallel = branchwork::survey_region(5, 12, 4);
    REQUIRE(serial.size() == parallel.size());
    for (size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].lambda1 == parallel[i].lambda1);
        CHECK(serial[i].lambda2 == parallel[i].lambda2);
        CHECK(serial[i].complete == parallel[i].complete);
        CHECK(serial[i].missing == parallel[i].missing);
    }
    CHECK(branchwork::survey_to_csv(serial) == branchwork::survey_to_csv(parallel));
}

TEST_CASE("survey at ten letters includes both short-tail shapes") {
    const auto records = branchwork::survey_region(10, 20, 2);
    bool square = false, near_square = false;
    for (const auto& r : records) {
        if (r.lambda1 == 10 && r.lambda2 == 10) {
            square = true;
            CHECK(r.complete);
        }
        if (r.lambda1 == 11 && r.lambda2 == 9) {
            near_square = true;
            CHECK_FALSE(r.complete);
            CHECK(r.missing ==
                  std::vector<Partition>{Partition(std::vector<int>(10, 1))});
        }
    }
    CHECK(square);
    CHECK(near_square);
}

TEST_CASE("short-tail families") {
    CHECK(branchwork::theorem_family(10, 2) ==
          std::vector<Partition>{Partition({10, 10}), Partition({11, 9})});
    CHECK(branchwork::theorem_family(10, 3) ==
          std::vector<Partition>{Partition({15, 15}), Partition({16, 14})});
    CHECK(branchwork::theorem_family(10, 4) ==
          std::vector<Partition>{Partition({20, 20}), Partition({21, 19}),
                                 Partition({22, 18})});
    CHECK_THROWS_AS(branchwork::theorem_family(10, 1), std::invalid_argument);
    for (int n = 1; n <= 8; ++n)
        for (int m = 2; m <= 6; ++m) {
            const auto family = branchwork::theorem_family(n, m);
            const size_t expected = (n * m) % 2 == 0
                                        ? static_cast<size_t>(m / 2) + 1
                                        : static_cast<size_t>((m + 1) / 2);
            CHECK(family.size() == expected);
            for (const auto& lambda : family) {
                CHECK(lambda.size() == n * m);
                CHECK(lambda.part(0) - lambda.part(1) >= 0);
                CHECK(lambda.part(0) - lambda.part(1) <= m);
            }
        }
}

TEST_CASE("coverage reports name a witness for every irrep") {
    const auto report = branchwork::coverage_check(3, 2);
    CHECK(report.witnesses.size() == 3);
    for (const auto& [mu, lambda] : report.witnesses)
        if (mu == Partition({1, 1, 1}))
            CHECK(lambda == Partition({3, 3}));
    for (int n = 2; n <= 5; ++n)
        for (int m = 2; m <= 4; ++m) {
            const auto r = branchwork::coverage_check(n, m);
            CHECK(r.witnesses.size() == branchwork::partitions_of(n).size());
        }
}

TEST_CASE("window-relative boundary") {
    const auto records = branchwork::survey_region(3, 6);
    const auto curve = branchwork::boundary(records);
    REQUIRE(curve.min_complete.count(0) == 1);
    CHECK(curve.min_complete.at(0).has_value());
    CHECK(curve.min_complete.at(0).value() == 3);

    const auto empty_curve = branchwork::boundary({});
    CHECK(empty_curve.min_complete.empty());
}

TEST_CASE("csv schema") {
    const auto records = branchwork::survey_region(3, 6);
    const std::string csv = branchwork::survey_to_csv(records);
    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "n,lambda1,lambda2,size,complete,num_missing,missing");
    bool quadratic_row = false, cubic_row = false;
    while (std::getline(lines, line)) {
        if (line == "3,2,0,2,false,1,\"1,1,1\"")
            quadratic_row = true;
        if (line == "3,3,0,3,true,0,\"\"")
            cubic_row = true;
    }
    CHECK(quadratic_row);
    CHECK(cubic_row);
}
