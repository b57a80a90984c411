#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace branchwork {

/// Integer partition in canonical form: weakly decreasing positive parts,
/// trailing zeros never stored. The empty partition is the unique partition
/// of 0. Doubles as a GL highest-weight label and a symmetric-group irrep
/// label; (d,0) and (d) compare equal.
class Partition {
public:
    Partition() = default;

    /// Accepts weakly decreasing non-negative parts; zero parts are stripped.
    /// Throws std::invalid_argument on anything else.
    explicit Partition(std::vector<int> parts);

    /// Parses comma-separated decimal parts, e.g. "11,9". "-" and the empty
    /// string denote the empty partition.
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }                       // sum of parts
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return i >= 0 && i < length() ? parts_[static_cast<size_t>(i)] : 0; }

    std::string to_string() const;                           // "3,1"; empty renders as "-"

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Project-wide table order: descending lexicographic. (n) sorts first,
/// (1^n) last; every table, cache and output file uses it.
struct DescLexLess {
    bool operator()(const Partition& a, const Partition& b) const {
        return a.parts() > b.parts();
    }
};

/// Conjugacy-class label of S_n: a partition of n read as cycle lengths.
class CycleType {
public:
    explicit CycleType(Partition p);

    const Partition& partition() const { return p_; }
    int n() const { return p_.size(); }
    /// (cycle length, count) pairs, lengths descending.
    const std::vector<std::pair<int, int>>& multiplicities() const { return mult_; }

private:
    Partition p_;
    std::vector<std::pair<int, int>> mult_;
};

/// All partitions of n in descending lex order; p(0) = 1 (the empty one).
std::vector<Partition> partitions_of(int n);

/// The sublist of partitions_of(n) with at most max_parts parts, same order.
std::vector<Partition> partitions_with_max_parts(int n, int max_parts);

/// Diagram transpose; an involution.
Partition conjugate(const Partition& p);

/// z_rho = prod r^{m_r} * m_r!; the centralizer order of the class.
mpz_class centralizer_order(const CycleType& rho);

/// n!/z_rho.
mpz_class conjugacy_class_size(const CycleType& rho);

/// Dimension of the S_n irrep labelled mu: n! over the product of hooks.
mpz_class hook_dimension(const Partition& mu);

/// Weyl dimension of the GL_n irrep labelled lambda (lambda padded with
/// zeros to n entries). Rejects length(lambda) > n.
mpz_class gl_dimension(const Partition& lambda, int n);

mpz_class factorial(int n);

/// Exact division; throws consistency_error when it does not clear.
mpz_class exact_divide(const mpz_class& numerator, const mpz_class& denominator,
                       const char* context);

} // namespace branchwork
