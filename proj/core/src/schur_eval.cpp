#include "branchwork/schur_eval.hpp"

#include <stdexcept>
#include <utility>

#include "branchwork/errors.hpp"

namespace branchwork {

long long power_sum_at(int k, const CycleType& rho) {
    if (k < 1)
        throw std::invalid_argument("power_sum_at: k must be positive");
    long long sum = 0;
    for (auto [r, m] : rho.multiplicities())
        if (k % r == 0)
            sum += static_cast<long long>(r) * m;
    return sum;
}

std::vector<mpz_class> complete_homogeneous_prefix(int dmax, const CycleType& rho) {
    if (dmax < 0)
        throw std::invalid_argument("complete_homogeneous_prefix: negative degree");
    std::vector<mpz_class> c(static_cast<size_t>(dmax) + 1, mpz_class(0));
    c[0] = 1;
    for (int r : rho.partition().parts())
        for (int i = r; i <= dmax; ++i)
            c[static_cast<size_t>(i)] += c[static_cast<size_t>(i - r)];
    return c;
}

mpz_class complete_homogeneous_at(int d, const CycleType& rho) {
    if (d < 0)
        throw std::invalid_argument("complete_homogeneous_at: negative degree");
    return complete_homogeneous_prefix(d, rho).back();
}

namespace {

mpz_class two_row_jacobi_trudi(int a, int b, const CycleType& rho) {
    const auto h = complete_homogeneous_prefix(a + 1, rho);
    mpz_class det = h[static_cast<size_t>(a)] * h[static_cast<size_t>(b)];
    if (b >= 1)
        det -= h[static_cast<size_t>(a + 1)] * h[static_cast<size_t>(b - 1)];
    return det;
}

// Fraction-free (Bareiss) determinant of an integer matrix, in place.
mpz_class integer_determinant(std::vector<std::vector<mpz_class>> m) {
    const size_t dim = m.size();
    if (dim == 0)
        return 1;
    int sign = 1;
    mpz_class prev = 1;
    for (size_t k = 0; k + 1 < dim; ++k) {
        if (m[k][k] == 0) {
            size_t pivot = k + 1;
            while (pivot < dim && m[pivot][k] == 0)
                ++pivot;
            if (pivot == dim)
                return 0;
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < dim; ++i)
            for (size_t j = k + 1; j < dim; ++j) {
                mpz_class t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = exact_divide(t, prev, "Bareiss elimination");
            }
        prev = m[k][k];
    }
    mpz_class det = m[dim - 1][dim - 1];
    return sign < 0 ? mpz_class(-det) : det;
}

} // namespace

mpz_class schur_at_jacobi_trudi(const Partition& lambda, const CycleType& rho) {
    const int rows = lambda.length();
    if (rows == 0)
        return 1;
    if (rows <= 2)
        return two_row_jacobi_trudi(lambda.part(0), lambda.part(1), rho);
    const int hmax = lambda.part(0) + rows - 1;
    const auto h = complete_homogeneous_prefix(hmax, rho);
    std::vector<std::vector<mpz_class>> m(static_cast<size_t>(rows));
    for (int i = 0; i < rows; ++i) {
        m[static_cast<size_t>(i)].resize(static_cast<size_t>(rows));
        for (int j = 0; j < rows; ++j) {
            const int e = lambda.part(i) - i + j;
            m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                e < 0 ? mpz_class(0) : h[static_cast<size_t>(e)];
        }
    }
    return integer_determinant(std::move(m));
}

mpz_class schur_at_power_sum(const Partition& lambda, const CycleType& rho,
                             MnEvaluator& characters) {
    const int degree = lambda.size();
    if (degree == 0)
        return 1;
    const mpz_class fact = factorial(degree);
    mpz_class acc = 0;
    for (const auto& inner : partitions_of(degree)) {
        const CycleType inner_class(inner);
        const mpz_class& chi = characters.value(lambda, inner_class);
        if (chi == 0)
            continue;
        mpz_class product = 1;
        for (int part : inner.parts())
            product *= mpz_class(static_cast<long>(power_sum_at(part, rho)));
        if (product == 0)
            continue;
        acc += chi * conjugacy_class_size(inner_class) * product;
    }
    return exact_divide(acc, fact, "schur power-sum expansion");
}

mpz_class schur_at_power_sum(const Partition& lambda, const CycleType& rho) {
    MnEvaluator ev;
    return schur_at_power_sum(lambda, rho, ev);
}

mpz_class schur_at(const Partition& lambda, const CycleType& rho) {
    if (lambda.length() <= 2)
        return lambda.empty() ? mpz_class(1)
                              : two_row_jacobi_trudi(lambda.part(0), lambda.part(1), rho);
    return schur_at_power_sum(lambda, rho);
}

} // namespace branchwork
