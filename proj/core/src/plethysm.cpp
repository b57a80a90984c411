#include "branchwork/plethysm.hpp"

#include <functional>
#include <stdexcept>

#include <json.hpp>

#include "branchwork/branching.hpp"
#include "branchwork/character_table.hpp"
#include "branchwork/errors.hpp"

namespace branchwork {

void BivariatePoly::add(int a, int b, const mpz_class& c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms.emplace(std::make_pair(a, b), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms.erase(it);
    }
}

mpz_class BivariatePoly::coefficient(int a, int b) const {
    auto it = terms.find({a, b});
    return it == terms.end() ? mpz_class(0) : it->second;
}

BivariatePoly BivariatePoly::mul(const BivariatePoly& other, int max_total_degree) const {
    BivariatePoly out;
    for (const auto& [lhs, lc] : terms)
        for (const auto& [rhs, rc] : other.terms) {
            const int a = lhs.first + rhs.first;
            const int b = lhs.second + rhs.second;
            if (max_total_degree >= 0 && a + b > max_total_degree)
                continue;
            out.add(a, b, lc * rc);
        }
    return out;
}

mpz_class GL2Decomposition::multiplicity(const GL2Weight& w) const {
    auto it = entries.find(w);
    return it == entries.end() ? mpz_class(0) : it->second;
}

namespace {

// p_k of the m-th symmetric power alphabet {x^{m-i} y^i : 0 <= i <= m}.
BivariatePoly power_sum_of_sym_alphabet(int k, int m) {
    BivariatePoly p;
    for (int i = 0; i <= m; ++i)
        p.add(k * (m - i), k * i, 1);
    return p;
}

// p_k of the truncated graded alphabet {x^a y^b : a+b <= cutoff}.
BivariatePoly power_sum_of_graded_alphabet(int k, int cutoff) {
    BivariatePoly p;
    for (int s = 0; k * s <= cutoff; ++s)
        for (int a = 0; a <= s; ++a)
            p.add(k * a, k * (s - a), 1);
    return p;
}

// s_mu at an alphabet given through its power sums, cleared over |mu|!.
BivariatePoly schur_of_alphabet(const Partition& mu,
                                const std::function<BivariatePoly(int)>& power_sum,
                                int max_total_degree) {
    const int n = mu.size();
    const CharacterTable& table = shared_character_table(n);
    const std::size_t row = table.index_of(mu);
    BivariatePoly acc;
    for (std::size_t i = 0; i < table.rank(); ++i) {
        const mpz_class& chi = table.value(row, i);
        if (chi == 0)
            continue;
        BivariatePoly product;
        product.add(0, 0, 1);
        for (int part : table.classes()[i].partition().parts())
            product = product.mul(power_sum(part), max_total_degree);
        const mpz_class scale = chi * conjugacy_class_size(table.classes()[i]);
        for (const auto& [mono, c] : product.terms)
            acc.add(mono.first, mono.second, c * scale);
    }
    const mpz_class fact = factorial(n);
    BivariatePoly result;
    for (const auto& [mono, c] : acc.terms) {
        mpz_class cleared = exact_divide(c, fact, "plethysm character");
        if (cleared < 0)
            throw consistency_error("negative character coefficient in plethysm of " +
                                    mu.to_string());
        result.add(mono.first, mono.second, cleared);
    }
    return result;
}

// Irreducible multiplicities of one homogeneous degree: consecutive
// weight-space differences c(a,b) - c(a+1,b-1).
GL2Decomposition extract_degree(const Partition& mu, const BivariatePoly& character,
                                int degree) {
    GL2Decomposition dec;
    dec.mu = mu;
    dec.degree = degree;
    for (int a = degree; 2 * a >= degree; --a) {
        const int b = degree - a;
        mpz_class mult = character.coefficient(a, b);
        if (b >= 1)
            mult -= character.coefficient(a + 1, b - 1);
        if (mult < 0)
            throw consistency_error("negative multiplicity at weight (" +
                                    std::to_string(a) + "," + std::to_string(b) +
                                    ") in plethysm of " + mu.to_string());
        if (mult > 0)
            dec.entries.emplace(GL2Weight{a, b}, std::move(mult));
    }
    return dec;
}

} // namespace

GL2Decomposition plethysm_sym(const Partition& mu, int m) {
    if (m < 0)
        throw std::invalid_argument("plethysm_sym: m must be non-negative");
    const int total = mu.size() * m;
    const BivariatePoly character = schur_of_alphabet(
        mu, [m](int k) { return power_sum_of_sym_alphabet(k, m); }, -1);
    for (const auto& [mono, c] : character.terms)
        if (mono.first + mono.second != total)
            throw consistency_error("plethysm character of " + mu.to_string() +
                                    " is not homogeneous of degree " +
                                    std::to_string(total));
    return extract_degree(mu, character, total);
}

std::map<int, GL2Decomposition> plethysm_graded(const Partition& mu, int max_degree) {
    if (max_degree < 0)
        throw std::invalid_argument("plethysm_graded: negative degree bound");
    const BivariatePoly character = schur_of_alphabet(
        mu, [max_degree](int k) { return power_sum_of_graded_alphabet(k, max_degree); },
        max_degree);
    std::map<int, GL2Decomposition> out;
    for (int e = 0; e <= max_degree; ++e)
        out.emplace(e, extract_degree(mu, character, e));
    return out;
}

bool verify_duality(const Partition& mu, const Partition& two_row_lambda) {
    if (two_row_lambda.length() > 2)
        throw std::invalid_argument("verify_duality: lambda must have at most two rows");
    const int n = mu.size();
    // GL irreps of n x n matrices need at most n rows; a taller lambda
    // contributes zero on the branching side.
    const mpz_class branching_side =
        two_row_lambda.length() <= n ? branch_one(two_row_lambda, mu, n) : mpz_class(0);
    const int degree = two_row_lambda.size();
    const auto graded = plethysm_graded(mu, degree);
    const mpz_class plethysm_side = graded.at(degree).multiplicity(
        GL2Weight{two_row_lambda.part(0), two_row_lambda.part(1)});
    return branching_side == plethysm_side;
}

std::vector<int> verify_theorem(const Partition& mu, int m) {
    if (m < 2)
        throw std::invalid_argument("verify_theorem: requires m >= 2");
    const int n = mu.size();
    if (n < 1)
        throw std::invalid_argument("verify_theorem: mu must be non-empty");
    const GL2Decomposition dec = plethysm_sym(mu, m);
    const int total = n * m;
    std::vector<int> witnesses;
    for (int d = total % 2; d <= m; d += 2)
        if (dec.multiplicity(GL2Weight{(total + d) / 2, (total - d) / 2}) > 0)
            witnesses.push_back(d);
    // A shape taller than m+1 rows annihilates the (m+1)-dimensional space:
    // the decomposition is empty and nothing is guaranteed. For a nonzero
    // representation an empty witness set breaks the guaranteed existence.
    if (witnesses.empty() && !dec.entries.empty())
        throw theorem_violation("no short-tail weight appears in the plethysm of " +
                                mu.to_string() + " at m=" + std::to_string(m));
    return witnesses;
}

bool verify_injection(const Partition& mu, int m, const Partition& lambda) {
    if (m < 0)
        throw std::invalid_argument("verify_injection: m must be non-negative");
    if (lambda.length() > 2)
        throw std::invalid_argument("verify_injection: lambda must have at most two rows");
    if (lambda.size() != mu.size() * m)
        throw std::invalid_argument("verify_injection: |lambda| must equal |mu| * m");
    const GL2Weight w{lambda.part(0), lambda.part(1)};
    const mpz_class fixed_degree = plethysm_sym(mu, m).multiplicity(w);
    const auto graded = plethysm_graded(mu, lambda.size());
    return fixed_degree <= graded.at(lambda.size()).multiplicity(w);
}

std::string plethysm_to_json(const GL2Decomposition& dec, int m,
                             const std::vector<int>* witnesses) {
    nlohmann::ordered_json j;
    j["mu"] = dec.mu.to_string();
    j["m"] = m;
    nlohmann::ordered_json weights = nlohmann::ordered_json::object();
    for (const auto& [w, mult] : dec.entries)
        weights[w.to_string()] = mult.get_str();
    j["weights"] = std::move(weights);
    if (witnesses)
        j["witnesses"] = *witnesses;
    return j.dump(2) + "\n";
}

} // namespace branchwork
