#include "branchwork/counting.hpp"

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "branchwork/branching.hpp"
#include "branchwork/character_table.hpp"
#include "branchwork/errors.hpp"
#include "branchwork/parallel.hpp"

namespace branchwork {

std::vector<long long> edge_orbit_lengths(const CycleType& rho) {
    const auto& parts = rho.partition().parts();
    std::vector<long long> lengths;
    for (size_t i = 0; i < parts.size(); ++i) {
        const long long r = parts[i];
        for (long long d = 1; 2 * d <= r; ++d)
            lengths.push_back(2 * d == r ? r / 2 : r);
        for (size_t j = i + 1; j < parts.size(); ++j) {
            const long long s = parts[j];
            const long long g = std::gcd(r, s);
            for (long long t = 0; t < g; ++t)
                lengths.push_back(r / g * s);
        }
    }
    const long long n = rho.n();
    const long long pairs = std::accumulate(lengths.begin(), lengths.end(), 0LL);
    if (pairs != n * (n - 1) / 2)
        throw consistency_error("edge orbits do not cover all vertex pairs");
    return lengths;
}

CountReport count_graphs(int n) {
    if (n < 1)
        throw std::invalid_argument("count_graphs: n must be positive");
    mpz_class acc = 0;
    for (const auto& p : partitions_of(n)) {
        const CycleType rho(p);
        const auto orbits = edge_orbit_lengths(rho);
        mpz_class fixed = 1;
        fixed <<= orbits.size(); // 2^{#orbits} subsets are fixed setwise
        acc += fixed * conjugacy_class_size(rho);
    }
    return CountReport{n, CountMethod::character_formula,
                       exact_divide(acc, factorial(n), "graph count")};
}

namespace {

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> p(static_cast<size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

} // namespace

CountReport graphs_bruteforce(int n, unsigned jobs) {
    if (n < 1 || n > 6)
        throw std::invalid_argument("graphs_bruteforce: supported for 1 <= n <= 6");
    const int edges = n * (n - 1) / 2;
    std::vector<std::vector<int>> edge_index(static_cast<size_t>(n),
                                             std::vector<int>(static_cast<size_t>(n), -1));
    int next = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edge_index[static_cast<size_t>(i)][static_cast<size_t>(j)] = next++;

    const auto perms = all_permutations(n);
    std::vector<std::vector<int>> edge_maps;
    edge_maps.reserve(perms.size());
    for (const auto& p : perms) {
        std::vector<int> map(static_cast<size_t>(edges));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const int a = std::min(p[static_cast<size_t>(i)], p[static_cast<size_t>(j)]);
                const int b = std::max(p[static_cast<size_t>(i)], p[static_cast<size_t>(j)]);
                map[static_cast<size_t>(edge_index[static_cast<size_t>(i)][static_cast<size_t>(j)])] =
                    edge_index[static_cast<size_t>(a)][static_cast<size_t>(b)];
            }
        edge_maps.push_back(std::move(map));
    }

    const std::uint32_t total = 1u << edges;
    const std::size_t chunks = jobs <= 1 ? 1 : jobs * 4;
    const std::uint32_t chunk_size = total / chunks + 1;
    std::vector<std::unordered_set<std::uint32_t>> found(chunks);
    parallel_for(chunks, jobs, [&](std::size_t c) {
        const std::uint32_t begin = static_cast<std::uint32_t>(c) * chunk_size;
        const std::uint32_t end = std::min<std::uint64_t>(total, begin + chunk_size);
        for (std::uint32_t mask = begin; mask < end; ++mask) {
            std::uint32_t canonical = mask;
            for (const auto& map : edge_maps) {
                std::uint32_t image = 0;
                for (int e = 0; e < edges; ++e)
                    if (mask & (1u << e))
                        image |= 1u << map[static_cast<size_t>(e)];
                canonical = std::min(canonical, image);
            }
            found[c].insert(canonical);
        }
    });
    std::unordered_set<std::uint32_t> merged;
    for (auto& part : found)
        merged.insert(part.begin(), part.end());
    return CountReport{n, CountMethod::brute_force,
                       mpz_class(static_cast<unsigned long>(merged.size()))};
}

std::vector<std::pair<Partition, mpz_class>> dynamics_summands(int n) {
    if (n < 1)
        throw std::invalid_argument("count_dynamics: n must be positive");
    std::vector<std::pair<Partition, mpz_class>> out;
    for (const auto& lambda : partitions_of(n))
        out.emplace_back(lambda, branch_one(lambda, lambda, n));
    return out;
}

CountReport count_dynamics(int n) {
    mpz_class total = 0;
    for (const auto& [lambda, value] : dynamics_summands(n))
        total += value;
    return CountReport{n, CountMethod::character_formula, total};
}

CountReport dynamics_bruteforce(int n, unsigned jobs) {
    if (n < 1 || n > 5)
        throw std::invalid_argument("dynamics_bruteforce: supported for 1 <= n <= 5");
    const auto perms = all_permutations(n);
    std::vector<std::vector<int>> inverse(perms.size(), std::vector<int>(static_cast<size_t>(n)));
    for (size_t p = 0; p < perms.size(); ++p)
        for (int x = 0; x < n; ++x)
            inverse[p][static_cast<size_t>(perms[p][static_cast<size_t>(x)])] = x;

    long long total = 1;
    for (int i = 0; i < n; ++i)
        total *= n;

    std::vector<std::unordered_set<long long>> found(jobs <= 1 ? 1 : jobs);
    const long long chunk_size = total / static_cast<long long>(found.size()) + 1;
    parallel_for(found.size(), jobs, [&](std::size_t c) {
        std::vector<int> f(static_cast<size_t>(n));
        const long long begin = static_cast<long long>(c) * chunk_size;
        const long long end = std::min(total, begin + chunk_size);
        for (long long code = begin; code < end; ++code) {
            long long value = code;
            for (int x = 0; x < n; ++x) {
                f[static_cast<size_t>(x)] = static_cast<int>(value % n);
                value /= n;
            }
            long long canonical = code;
            for (size_t p = 0; p < perms.size(); ++p) {
                long long image = 0;
                for (int x = n - 1; x >= 0; --x) {
                    const int y =
                        perms[p][static_cast<size_t>(f[static_cast<size_t>(inverse[p][static_cast<size_t>(x)])])];
                    image = image * n + y;
                }
                canonical = std::min(canonical, image);
            }
            found[c].insert(canonical);
        }
    });
    std::unordered_set<long long> merged;
    for (auto& part : found)
        merged.insert(part.begin(), part.end());
    return CountReport{n, CountMethod::brute_force,
                       mpz_class(static_cast<unsigned long>(merged.size()))};
}

bool invariant_dimension_check(int n) {
    if (n < 1 || n > 4)
        throw std::invalid_argument("invariant_dimension_check: supported for 1 <= n <= 4");
    const CharacterTable& table = shared_character_table(n);
    const int edges = n * (n - 1) / 2;
    const mpz_class group_order = factorial(n);

    // Fixed k-subset counts per class: coefficients of prod (1 + t^len).
    std::vector<std::vector<mpz_class>> fixed(table.rank());
    std::vector<mpz_class> class_sizes(table.rank());
    for (std::size_t i = 0; i < table.rank(); ++i) {
        class_sizes[i] = conjugacy_class_size(table.classes()[i]);
        std::vector<mpz_class> poly(static_cast<size_t>(edges) + 1, mpz_class(0));
        poly[0] = 1;
        for (long long len : edge_orbit_lengths(table.classes()[i]))
            for (int j = edges; j >= len; --j)
                poly[static_cast<size_t>(j)] += poly[static_cast<size_t>(j - len)];
        fixed[i] = std::move(poly);
    }

    const std::size_t trivial_row = table.index_of(Partition({n}));
    mpz_class trivial_total = 0;
    mpz_class dimension_total = 0;
    for (int k = 0; k <= edges; ++k)
        for (std::size_t row = 0; row < table.rank(); ++row) {
            mpz_class acc = 0;
            for (std::size_t i = 0; i < table.rank(); ++i)
                acc += class_sizes[i] * fixed[i][static_cast<size_t>(k)] *
                       table.value(row, i);
            mpz_class mult = exact_divide(acc, group_order, "subset module decomposition");
            if (mult < 0)
                return false;
            if (row == trivial_row)
                trivial_total += mult;
            dimension_total += mult * hook_dimension(table.shapes()[row]);
        }

    mpz_class subsets = 1;
    subsets <<= static_cast<unsigned>(edges);
    if (dimension_total != subsets)
        return false;
    return trivial_total == count_graphs(n).count;
}

} // namespace branchwork
