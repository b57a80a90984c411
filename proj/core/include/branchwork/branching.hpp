#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "branchwork/partition.hpp"

namespace branchwork {

/// Multiplicity of every S_n irrep inside the restriction of the GL_n irrep
/// lambda to permutation matrices. Zero entries are stored: "missing" is
/// first-class data for the survey.
struct BranchingTable {
    Partition lambda;
    int n = 0;
    std::vector<Partition> shapes;   // mu, descending lex
    std::vector<mpz_class> values;   // aligned with shapes

    const mpz_class& at(const Partition& mu) const;
};

/// Class-averaged inner product of the Schur trace with every irreducible
/// character: value(mu) = sum over classes of chi^mu * schur_at(lambda) *
/// |class| / n!, cleared exactly. Schur traces are computed once per class
/// and shared across all rows; the class map may run on several threads
/// with an order-independent exact reduction.
BranchingTable branch(const Partition& lambda, int n, unsigned jobs = 1);

/// Single-entry path; agrees with branch(lambda, n) at mu.
mpz_class branch_one(const Partition& lambda, const Partition& mu, int n);

/// Fillings of mu with entries in {0,1,2,...}, rows weakly increasing,
/// columns strictly increasing, entry sum d — counted by backtracking.
/// Equals branch_one((d), mu, |mu|); kept as an independent route.
mpz_class one_row_rule(int d, const Partition& mu);

struct CompletenessResult {
    bool complete = false;
    std::vector<Partition> missing;  // descending lex
};

/// Does every S_n irrep appear in the restriction of lambda?
CompletenessResult contains_all(const Partition& lambda, int n, unsigned jobs = 1);

/// {"n":..,"lambda":"..","multiplicities":{"mu":"value",...}} with decimal
/// string values, keys in descending lex order.
std::string branching_to_json(const BranchingTable& table);

} // namespace branchwork
