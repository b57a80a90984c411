#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "branchwork/partition.hpp"

namespace branchwork {

/// One classified lattice point (lambda1, lambda2) of the two-row region.
struct SurveyRecord {
    int n = 0;
    int lambda1 = 0;
    int lambda2 = 0;
    bool complete = false;
    std::vector<Partition> missing; // descending lex; empty iff complete

    int size() const { return lambda1 + lambda2; }
};

/// Per lambda2: the minimal lambda1 whose whole sampled tail is complete
/// within the scanned window, or nothing when the window has no such tail.
/// Reported minima never extrapolate beyond the window.
struct BoundaryCurve {
    int n = 0;
    std::map<int, std::optional<int>> min_complete;
};

SurveyRecord classify(int n, int lambda1, int lambda2);

/// Every (lambda1, lambda2) with lambda1 >= lambda2 >= 0 and
/// lambda1 + lambda2 <= max_size, ordered by (size, lambda2). Points are
/// classified in parallel; output depends only on (n, max_size).
std::vector<SurveyRecord> survey_region(int n, int max_size, unsigned jobs = 1);

/// The short-tail two-row shapes ((nm+d)/2, (nm-d)/2) for d in {0..m} with
/// d matching the parity of n*m, in ascending d order. Every member has
/// total size n*m and tail difference at most m.
std::vector<Partition> theorem_family(int n, int m);

struct CoverageReport {
    int n = 0;
    int m = 0;
    std::vector<Partition> family;
    /// mu (descending lex) -> first family member containing it.
    std::vector<std::pair<Partition, Partition>> witnesses;
};

/// Checks that every S_n irrep appears in at least one family member;
/// an uncovered mu throws theorem_violation naming it.
CoverageReport coverage_check(int n, int m, unsigned jobs = 1);

BoundaryCurve boundary(const std::vector<SurveyRecord>& records);

/// Columns: n,lambda1,lambda2,size,complete,num_missing,missing — the last
/// always quoted, partition texts joined by ';'.
std::string survey_to_csv(const std::vector<SurveyRecord>& records);
std::string survey_to_json(const std::vector<SurveyRecord>& records);

} // namespace branchwork
