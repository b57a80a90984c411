#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "branchwork/partition.hpp"

namespace branchwork {

/// Murnaghan-Nakayama evaluation with a memo shared across calls. The
/// recursion consumes the largest remaining cycle first and is keyed on the
/// (remaining shape, remaining cycles) pair. Not thread-safe: confine one
/// evaluator to one thread.
class MnEvaluator {
public:
    /// chi^shape(rho); requires |shape| == |rho|.
    const mpz_class& value(const Partition& shape, const CycleType& rho);

private:
    const mpz_class& eval(const std::vector<int>& shape, const std::vector<int>& cycles);

    std::map<std::vector<int>, mpz_class> memo_;
};

/// One-off character value; for whole rows or tables, share an evaluator.
mpz_class mn_character(const Partition& shape, const CycleType& rho);

/// Exact character table of S_n. Rows (shapes) and columns (classes) are the
/// partitions of n in descending lex order. Immutable once built; safe for
/// unrestricted concurrent reads.
class CharacterTable {
public:
    static CharacterTable build(int n);

    /// Loads `chartable-<n>.json` from cache_dir when the file is valid;
    /// otherwise rebuilds, overwrites it via atomic rename, and emits one
    /// warning on stderr.
    static CharacterTable load_or_build(int n, const std::filesystem::path& cache_dir);

    int n() const { return n_; }
    std::size_t rank() const { return shapes_.size(); }   // p(n)
    const std::vector<Partition>& shapes() const { return shapes_; }
    const std::vector<CycleType>& classes() const { return classes_; }

    /// Descending-lex position; throws std::invalid_argument for anything
    /// that is not a partition of n.
    std::size_t index_of(const Partition& p) const;

    const mpz_class& value(std::size_t row, std::size_t col) const {
        return values_[row][col];
    }
    const mpz_class& value(const Partition& shape, const Partition& cls) const {
        return values_[index_of(shape)][index_of(cls)];
    }

    /// Cache schema: {"version":1,"n":n,"order":"desclex","rows":{...}} with
    /// every value a decimal string. Byte-stable for a given n.
    std::string to_json() const;
    std::filesystem::path cache_file(const std::filesystem::path& dir) const;
    void save(const std::filesystem::path& cache_dir) const;

private:
    CharacterTable() = default;
    static CharacterTable from_json(const std::string& text);

    int n_ = 0;
    std::vector<Partition> shapes_;
    std::vector<CycleType> classes_;
    std::map<Partition, std::size_t, DescLexLess> index_;
    std::vector<std::vector<mpz_class>> values_;
};

/// Process-wide registry: each table is built (or loaded from the configured
/// cache directory) once, then shared read-only.
const CharacterTable& shared_character_table(int n);

/// Optional disk backing for the registry; affects tables not yet built.
void set_character_table_cache_dir(std::filesystem::path dir);

} // namespace branchwork
