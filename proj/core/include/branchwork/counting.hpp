#pragma once

#include <utility>
#include <vector>

#include <gmpxx.h>

#include "branchwork/partition.hpp"

namespace branchwork {

enum class CountMethod { character_formula, brute_force };

struct CountReport {
    int n = 0;
    CountMethod method = CountMethod::character_formula;
    mpz_class count;
};

/// Orbit lengths of the induced action on unordered vertex pairs, derived
/// combinatorially from the cycle type: distance classes inside one cycle
/// plus gcd(r,s) orbits of length lcm(r,s) between two cycles.
std::vector<long long> edge_orbit_lengths(const CycleType& rho);

/// Isomorphism classes of simple graphs on n vertices: the classes of the
/// S_n action on edge subsets, counted exactly as the class-averaged number
/// of fixed subsets, 2^{#edge orbits} per cycle type.
CountReport count_graphs(int n);

/// Orbit count over all 2^C(n,2) edge subsets via canonical-form hashing;
/// n <= 6 (2^15 subsets x 720 relabelings at n = 6).
CountReport graphs_bruteforce(int n, unsigned jobs = 1);

/// The diagonal branching multiplicities, one per partition of n in
/// descending lex order. Their sum counts dynamical systems on n points.
std::vector<std::pair<Partition, mpz_class>> dynamics_summands(int n);

/// Self-maps of an n-element set up to simultaneous relabeling, counted as
/// the sum of diagonal branching multiplicities.
CountReport count_dynamics(int n);

/// Orbit count over all n^n self-maps under conjugation, via canonical-form
/// hashing; n <= 5 (5^5 maps x 120 relabelings).
CountReport dynamics_bruteforce(int n, unsigned jobs = 1);

/// Cross-checks count_graphs against a second route through the character
/// table: each k-edge-subset permutation module is decomposed into
/// irreducible characters (all multiplicities must clear to non-negative
/// integers), trivial-component multiplicities are summed over k, and the
/// grand total must both exhaust 2^C(n,2) dimensions and match the graph
/// count. n <= 4.
bool invariant_dimension_check(int n);

} // namespace branchwork
