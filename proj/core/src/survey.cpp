#include "branchwork/survey.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "branchwork/branching.hpp"
#include "branchwork/errors.hpp"
#include "branchwork/parallel.hpp"

namespace branchwork {

SurveyRecord classify(int n, int lambda1, int lambda2) {
    if (n < 2)
        throw std::invalid_argument("classify: n must be at least 2");
    if (lambda1 < lambda2 || lambda2 < 0)
        throw std::invalid_argument("classify: need lambda1 >= lambda2 >= 0");
    const Partition lambda({lambda1, lambda2});
    CompletenessResult completeness = contains_all(lambda, n);
    return SurveyRecord{n, lambda1, lambda2, completeness.complete,
                        std::move(completeness.missing)};
}

std::vector<SurveyRecord> survey_region(int n, int max_size, unsigned jobs) {
    if (n < 2)
        throw std::invalid_argument("survey_region: n must be at least 2");
    if (max_size < 0)
        throw std::invalid_argument("survey_region: negative size bound");
    std::vector<std::pair<int, int>> points;
    for (int size = 0; size <= max_size; ++size)
        for (int lambda2 = 0; 2 * lambda2 <= size; ++lambda2)
            points.emplace_back(size - lambda2, lambda2);
    std::vector<SurveyRecord> records(points.size());
    parallel_for(points.size(), jobs, [&](std::size_t i) {
        records[i] = classify(n, points[i].first, points[i].second);
    });
    return records;
}

std::vector<Partition> theorem_family(int n, int m) {
    if (m < 2)
        throw std::invalid_argument("theorem_family: requires m >= 2");
    if (n < 1)
        throw std::invalid_argument("theorem_family: requires n >= 1");
    const int total = n * m;
    std::vector<Partition> family;
    for (int d = total % 2; d <= m; d += 2)
        family.push_back(Partition({(total + d) / 2, (total - d) / 2}));
    return family;
}

CoverageReport coverage_check(int n, int m, unsigned jobs) {
    CoverageReport report;
    report.n = n;
    report.m = m;
    report.family = theorem_family(n, m);

    std::vector<BranchingTable> tables;
    tables.reserve(report.family.size());
    for (const auto& lambda : report.family)
        tables.push_back(branch(lambda, n, jobs));

    std::vector<Partition> uncovered;
    for (std::size_t row = 0; row < tables.front().shapes.size(); ++row) {
        const Partition& mu = tables.front().shapes[row];
        bool found = false;
        for (std::size_t f = 0; f < tables.size(); ++f)
            if (tables[f].values[row] > 0) {
                report.witnesses.emplace_back(mu, report.family[f]);
                found = true;
                break;
            }
        if (!found)
            uncovered.push_back(mu);
    }
    if (!uncovered.empty()) {
        std::string names;
        for (const auto& mu : uncovered)
            names += (names.empty() ? "" : " ") + mu.to_string();
        throw theorem_violation("uncovered irreps at n=" + std::to_string(n) +
                                " m=" + std::to_string(m) + ": " + names);
    }
    return report;
}

BoundaryCurve boundary(const std::vector<SurveyRecord>& records) {
    BoundaryCurve curve;
    if (records.empty())
        return curve;
    curve.n = records.front().n;
    std::map<int, std::vector<std::pair<int, bool>>> columns;
    for (const auto& r : records)
        columns[r.lambda2].emplace_back(r.lambda1, r.complete);
    for (auto& [lambda2, column] : columns) {
        std::sort(column.begin(), column.end());
        std::optional<int> minimal;
        for (auto it = column.rbegin(); it != column.rend() && it->second; ++it)
            minimal = it->first;
        curve.min_complete.emplace(lambda2, minimal);
    }
    return curve;
}

std::string survey_to_csv(const std::vector<SurveyRecord>& records) {
    std::string out = "n,lambda1,lambda2,size,complete,num_missing,missing\n";
    for (const auto& r : records) {
        out += std::to_string(r.n) + ',' + std::to_string(r.lambda1) + ',' +
               std::to_string(r.lambda2) + ',' + std::to_string(r.size()) + ',' +
               (r.complete ? "true" : "false") + ',' +
               std::to_string(r.missing.size()) + ",\"";
        for (std::size_t i = 0; i < r.missing.size(); ++i) {
            if (i)
                out += ';';
            out += r.missing[i].to_string();
        }
        out += "\"\n";
    }
    return out;
}

std::string survey_to_json(const std::vector<SurveyRecord>& records) {
    nlohmann::ordered_json array = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        nlohmann::ordered_json j;
        j["n"] = r.n;
        j["lambda1"] = r.lambda1;
        j["lambda2"] = r.lambda2;
        j["size"] = r.size();
        j["complete"] = r.complete;
        nlohmann::ordered_json missing = nlohmann::ordered_json::array();
        for (const auto& mu : r.missing)
            missing.push_back(mu.to_string());
        j["missing"] = std::move(missing);
        array.push_back(std::move(j));
    }
    return array.dump(2) + "\n";
}

} // namespace branchwork
