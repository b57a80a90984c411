#include "branchwork/branching.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "branchwork/character_table.hpp"
#include "branchwork/errors.hpp"
#include "branchwork/parallel.hpp"
#include "branchwork/schur_eval.hpp"

namespace branchwork {

const mpz_class& BranchingTable::at(const Partition& mu) const {
    for (std::size_t i = 0; i < shapes.size(); ++i)
        if (shapes[i] == mu)
            return values[i];
    throw std::invalid_argument("branching table has no row '" + mu.to_string() + "'");
}

namespace {

void check_shape_fits(const Partition& lambda, int n) {
    if (n < 0 || lambda.length() > n)
        throw std::invalid_argument("shape " + lambda.to_string() + " has more than " +
                                    std::to_string(n) + " rows");
}

mpz_class clear_class_sum(const mpz_class& acc, const mpz_class& group_order,
                          const Partition& lambda, const Partition& mu) {
    mpz_class value = exact_divide(acc, group_order, "branching multiplicity");
    if (value < 0)
        throw consistency_error("negative branching multiplicity at lambda=" +
                                lambda.to_string() + " mu=" + mu.to_string());
    return value;
}

} // namespace

BranchingTable branch(const Partition& lambda, int n, unsigned jobs) {
    check_shape_fits(lambda, n);
    const CharacterTable& table = shared_character_table(n);
    const std::size_t classes = table.rank();

    std::vector<mpz_class> traces(classes);
    std::vector<mpz_class> class_sizes(classes);
    parallel_for(classes, jobs, [&](std::size_t i) {
        traces[i] = schur_at(lambda, table.classes()[i]);
        class_sizes[i] = conjugacy_class_size(table.classes()[i]);
    });

    const mpz_class group_order = factorial(n);
    BranchingTable result;
    result.lambda = lambda;
    result.n = n;
    result.shapes = table.shapes();
    result.values.reserve(classes);
    for (std::size_t row = 0; row < classes; ++row) {
        mpz_class acc = 0;
        for (std::size_t i = 0; i < classes; ++i) {
            if (traces[i] == 0)
                continue;
            acc += table.value(row, i) * traces[i] * class_sizes[i];
        }
        result.values.push_back(
            clear_class_sum(acc, group_order, lambda, result.shapes[row]));
    }
    return result;
}

mpz_class branch_one(const Partition& lambda, const Partition& mu, int n) {
    check_shape_fits(lambda, n);
    if (mu.size() != n)
        throw std::invalid_argument("mu must be a partition of n");
    const CharacterTable& table = shared_character_table(n);
    const std::size_t row = table.index_of(mu);
    mpz_class acc = 0;
    for (std::size_t i = 0; i < table.rank(); ++i) {
        const mpz_class& chi = table.value(row, i);
        if (chi == 0)
            continue;
        mpz_class trace = schur_at(lambda, table.classes()[i]);
        if (trace == 0)
            continue;
        acc += chi * trace * conjugacy_class_size(table.classes()[i]);
    }
    return clear_class_sum(acc, factorial(n), lambda, mu);
}

namespace {

struct FillingCounter {
    const std::vector<std::pair<int, int>>& cells; // (row, col), row-major
    const Partition& shape;
    int target;
    std::vector<int> entry;       // parallel to cells
    std::vector<int> suffix_min;  // sum of row indices of cells at >= position
    long long count = 0;

    int cell_at(int row, int col) const {
        // Cells are row-major, so (row, col) sits after all earlier rows.
        int index = 0;
        for (int r = 0; r < row; ++r)
            index += shape.part(r);
        return index + col;
    }

    void run(std::size_t pos, int sum) {
        if (pos == cells.size()) {
            if (sum == target)
                ++count;
            return;
        }
        auto [row, col] = cells[pos];
        int low = 0;
        if (col > 0)
            low = std::max(low, entry[pos - 1]);
        if (row > 0)
            low = std::max(low, entry[static_cast<size_t>(cell_at(row - 1, col))] + 1);
        for (int v = low; sum + v + suffix_min[pos + 1] <= target; ++v) {
            entry[pos] = v;
            run(pos + 1, sum + v);
        }
    }
};

} // namespace

mpz_class one_row_rule(int d, const Partition& mu) {
    if (d < 0)
        throw std::invalid_argument("one_row_rule: negative weight");
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < mu.length(); ++r)
        for (int c = 0; c < mu.part(r); ++c)
            cells.emplace_back(r, c);
    FillingCounter counter{cells, mu, d, std::vector<int>(cells.size(), 0),
                           std::vector<int>(cells.size() + 1, 0)};
    // Column-strict fillings force entry >= row index; prune on that floor.
    for (std::size_t i = cells.size(); i-- > 0;)
        counter.suffix_min[i] = counter.suffix_min[i + 1] + cells[i].first;
    counter.run(0, 0);
    return mpz_class(static_cast<long>(counter.count));
}

CompletenessResult contains_all(const Partition& lambda, int n, unsigned jobs) {
    const BranchingTable table = branch(lambda, n, jobs);
    CompletenessResult result;
    for (std::size_t i = 0; i < table.shapes.size(); ++i)
        if (table.values[i] == 0)
            result.missing.push_back(table.shapes[i]);
    result.complete = result.missing.empty();
    return result;
}

std::string branching_to_json(const BranchingTable& table) {
    nlohmann::ordered_json j;
    j["n"] = table.n;
    j["lambda"] = table.lambda.to_string();
    nlohmann::ordered_json mults = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < table.shapes.size(); ++i)
        mults[table.shapes[i].to_string()] = table.values[i].get_str();
    j["multiplicities"] = std::move(mults);
    return j.dump(2) + "\n";
}

} // namespace branchwork
