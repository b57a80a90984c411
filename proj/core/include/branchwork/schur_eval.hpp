#pragma once

#include <vector>

#include <gmpxx.h>

#include "branchwork/character_table.hpp"
#include "branchwork/partition.hpp"

namespace branchwork {

/// k-th power sum at the eigenvalue multiset of any permutation of cycle
/// type rho. The sum of k-th powers of all r-th roots of unity is r when
/// r | k and 0 otherwise, so this is the sum of the parts dividing k —
/// no complex number is ever materialized.
long long power_sum_at(int k, const CycleType& rho);

/// h_0..h_dmax at the eigenvalues of rho: coefficients of the truncated
/// series product of 1/(1 - t^r) over the cycle lengths r.
std::vector<mpz_class> complete_homogeneous_prefix(int dmax, const CycleType& rho);

mpz_class complete_homogeneous_at(int d, const CycleType& rho);

/// Exact trace of a permutation of cycle type rho on the GL irrep labelled
/// lambda. Shapes with at most two rows go through the 2x2 Jacobi-Trudi
/// determinant h_a h_b - h_{a+1} h_{b-1}; everything else through the
/// power-sum expansion. Evaluates to 0 when length(lambda) > |rho|.
mpz_class schur_at(const Partition& lambda, const CycleType& rho);

/// Power-sum route: sum over partitions rho' of |lambda| of
/// chi^lambda(rho')/z_{rho'} times the matching power-sum product, cleared
/// over the common denominator |lambda|!.
mpz_class schur_at_power_sum(const Partition& lambda, const CycleType& rho);
mpz_class schur_at_power_sum(const Partition& lambda, const CycleType& rho,
                             MnEvaluator& characters);

/// Jacobi-Trudi route for any number of rows: fraction-free determinant of
/// the h-matrix.
mpz_class schur_at_jacobi_trudi(const Partition& lambda, const CycleType& rho);

} // namespace branchwork
