#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "branchwork/partition.hpp"

namespace branchwork {

/// GL_2 highest weight (a, b) with a >= b >= 0. In a decomposition of the
/// Schur functor of mu applied to degree-m binary forms, every weight
/// satisfies a + b = |mu| * m (the central character).
struct GL2Weight {
    int a = 0;
    int b = 0;

    std::string to_string() const { return std::to_string(a) + "," + std::to_string(b); }
    friend bool operator==(const GL2Weight&, const GL2Weight&) = default;
};

/// (5,1) sorts before (4,2): tables list weights by descending first entry.
struct GL2WeightDesc {
    bool operator()(const GL2Weight& x, const GL2Weight& y) const {
        return x.a != y.a ? x.a > y.a : x.b > y.b;
    }
};

/// Exact polynomial in the two torus variables; once a character is fully
/// assembled, every coefficient is a non-negative integer.
struct BivariatePoly {
    std::map<std::pair<int, int>, mpz_class> terms; // (x-exp, y-exp) -> coefficient

    void add(int a, int b, const mpz_class& c);
    mpz_class coefficient(int a, int b) const;
    /// Product, dropping monomials of total degree > max_total_degree when
    /// the bound is non-negative.
    BivariatePoly mul(const BivariatePoly& other, int max_total_degree = -1) const;
};

/// Irreducible GL_2 content of one homogeneous character: nonzero
/// multiplicities only, keyed by highest weight.
struct GL2Decomposition {
    Partition mu;
    int degree = 0; // common total weight a+b of every entry
    std::map<GL2Weight, mpz_class, GL2WeightDesc> entries;

    mpz_class multiplicity(const GL2Weight& w) const;
};

/// Decomposition of the Schur functor of mu applied to the (m+1)-dimensional
/// space of degree-m binary forms. The character is s_mu at the alphabet
/// {x^{m-i} y^i}; irreducible multiplicities come out of consecutive
/// weight-space differences, which stay branch-free and exactly integral.
GL2Decomposition plethysm_sym(const Partition& mu, int m);

/// Degree-e components of the Schur functor of mu applied to the full graded
/// algebra of binary forms, for every e <= max_degree. Computed with the
/// truncated alphabet {x^a y^b : a+b <= max_degree}; letters above the cut
/// cannot reach any reported degree, so reported components are exact.
std::map<int, GL2Decomposition> plethysm_graded(const Partition& mu, int max_degree);

/// Branching multiplicity of lambda at mu equals the multiplicity of the
/// GL_2 weight (lambda_1, lambda_2) in the degree-|lambda| component above.
bool verify_duality(const Partition& mu, const Partition& two_row_lambda);

/// Witness tail sizes: all d in {0..m} of the right parity whose weight
/// ((nm+d)/2, (nm-d)/2) carries nonzero multiplicity in plethysm_sym(mu, m).
/// Whenever the functor does not annihilate the space (length(mu) <= m+1)
/// the set is guaranteed non-empty for m >= 2, and coming back empty throws
/// theorem_violation. Shapes taller than m+1 rows give the zero
/// representation and an empty set without fault.
std::vector<int> verify_theorem(const Partition& mu, int m);

/// Multiplicity of lambda in the degree-m piece never exceeds its
/// multiplicity in the matching graded component.
bool verify_injection(const Partition& mu, int m, const Partition& lambda);

/// {"mu":"2,1","m":2,"weights":{"5,1":"1",...},"witnesses":[2]}; the witness
/// field is present only when witnesses != nullptr.
std::string plethysm_to_json(const GL2Decomposition& dec, int m,
                             const std::vector<int>* witnesses);

} // namespace branchwork
