// Independent reference implementations used only by tests. Everything here
// deliberately avoids the code paths it checks: characters come from tabloid
// fixed points and Kostka triangulation instead of the border-strip
// recursion, power sums from root-of-unity exponent bookkeeping, plethysm
// from semistandard-tableau enumeration, and small branching multiplicities
// from explicit tensor-space projections.
#pragma once

#include <map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "branchwork/partition.hpp"

namespace oracle {

/// Standard Young tableaux of the given shape, by backtracking.
long long syt_count(const branchwork::Partition& shape);

/// Semistandard tableaux of the given shape with content counts, entries
/// 1..len(content).
long long kostka_number(const branchwork::Partition& shape,
                        const branchwork::Partition& content);

/// Tabloids of the given shape fixed by a permutation of the given cycle
/// type: assignments of whole cycles to rows filling each row exactly.
long long tabloid_fixed_count(const branchwork::Partition& shape,
                              const branchwork::Partition& cycle_type);

/// Full character table of S_n (rows and columns in descending lex order)
/// from tabloid characters, un-triangularized with Kostka numbers.
std::vector<std::vector<long long>> character_table_by_tabloids(int n);

/// Coefficient vector of the n-th cyclotomic polynomial, ascending degree.
std::vector<long long> cyclotomic_polynomial(int n);

/// p_k at the eigenvalues of the cycle type, evaluated by reducing the
/// explicit root-of-unity exponent sum modulo the cyclotomic polynomial of
/// the lcm of the parts. Aborts if the remainder is not a constant.
long long power_sum_roots_of_unity(int k, const branchwork::Partition& cycle_type);

/// s_mu at an explicit letter alphabet, by enumerating semistandard
/// tableaux with letter indices as entries and multiplying the letters.
/// Returns the bivariate polynomial as (x-exp, y-exp) -> coefficient.
std::map<std::pair<int, int>, mpz_class>
ssyt_plethysm(const branchwork::Partition& mu,
              const std::vector<std::pair<int, int>>& letters);

/// Branching multiplicity for n = 3 and |lambda| <= 3 from explicit
/// character projections inside the |lambda|-fold tensor power of C^3,
/// with hardcoded S_1..S_3 character tables.
mpz_class tensor_branching(const branchwork::Partition& lambda,
                           const branchwork::Partition& mu);

} // namespace oracle
