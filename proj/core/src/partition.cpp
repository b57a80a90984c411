#include "branchwork/partition.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "branchwork/errors.hpp"

namespace branchwork {

Partition::Partition(std::vector<int> parts) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0)
            throw std::invalid_argument("partition parts must be non-negative");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    while (!parts.empty() && parts.back() == 0)
        parts.pop_back();
    long long sum = std::accumulate(parts.begin(), parts.end(), 0LL);
    if (sum > std::numeric_limits<int>::max())
        throw std::invalid_argument("partition too large");
    parts_ = std::move(parts);
    size_ = static_cast<int>(sum);
}

Partition Partition::parse(std::string_view text) {
    if (text.empty() || text == "-")
        return Partition{};
    std::vector<int> parts;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string_view token = text.substr(pos, comma == std::string_view::npos
                                                      ? std::string_view::npos
                                                      : comma - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            throw std::invalid_argument("malformed partition text: '" + std::string(text) + "'");
        parts.push_back(value);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

std::string Partition::to_string() const {
    if (parts_.empty())
        return "-";
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

CycleType::CycleType(Partition p) : p_(std::move(p)) {
    const auto& parts = p_.parts();
    for (size_t i = 0; i < parts.size();) {
        size_t j = i;
        while (j < parts.size() && parts[j] == parts[i])
            ++j;
        mult_.emplace_back(parts[i], static_cast<int>(j - i));
        i = j;
    }
}

namespace {

void emit_partitions(int remaining, int max_part, std::vector<int>& prefix,
                     std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(prefix));
        return;
    }
    for (int first = std::min(remaining, max_part); first >= 1; --first) {
        prefix.push_back(first);
        emit_partitions(remaining - first, first, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0)
        throw std::invalid_argument("partitions_of: n must be non-negative");
    std::vector<Partition> out;
    std::vector<int> prefix;
    emit_partitions(n, n, prefix, out);
    if (n == 0)
        out.assign(1, Partition{});
    return out;
}

std::vector<Partition> partitions_with_max_parts(int n, int max_parts) {
    if (max_parts < 0)
        throw std::invalid_argument("partitions_with_max_parts: negative bound");
    std::vector<Partition> out;
    for (auto& p : partitions_of(n))
        if (p.length() <= max_parts)
            out.push_back(std::move(p));
    return out;
}

Partition conjugate(const Partition& p) {
    std::vector<int> cols;
    const int width = p.part(0);
    cols.reserve(static_cast<size_t>(width));
    for (int j = 0; j < width; ++j) {
        int count = 0;
        for (int v : p.parts())
            count += (v > j) ? 1 : 0;
        cols.push_back(count);
    }
    return Partition(std::move(cols));
}

mpz_class centralizer_order(const CycleType& rho) {
    mpz_class z = 1;
    for (auto [r, m] : rho.multiplicities()) {
        mpz_class rp;
        mpz_ui_pow_ui(rp.get_mpz_t(), static_cast<unsigned long>(r),
                      static_cast<unsigned long>(m));
        z *= rp;
        z *= factorial(m);
    }
    return z;
}

mpz_class conjugacy_class_size(const CycleType& rho) {
    return exact_divide(factorial(rho.n()), centralizer_order(rho), "conjugacy class size");
}

mpz_class hook_dimension(const Partition& mu) {
    const Partition conj = conjugate(mu);
    mpz_class hooks = 1;
    for (int i = 0; i < mu.length(); ++i)
        for (int j = 0; j < mu.part(i); ++j) {
            int arm = mu.part(i) - j - 1;
            int leg = conj.part(j) - i - 1;
            hooks *= arm + leg + 1;
        }
    return exact_divide(factorial(mu.size()), hooks, "hook length formula");
}

mpz_class gl_dimension(const Partition& lambda, int n) {
    if (n < 0 || lambda.length() > n)
        throw std::invalid_argument("gl_dimension: shape has more than n rows");
    mpz_class num = 1, den = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            num *= lambda.part(i) - lambda.part(j) + j - i;
            den *= j - i;
        }
    return exact_divide(num, den, "Weyl dimension formula");
}

mpz_class factorial(int n) {
    if (n < 0)
        throw std::invalid_argument("factorial of a negative number");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

mpz_class exact_divide(const mpz_class& numerator, const mpz_class& denominator,
                       const char* context) {
    if (denominator == 0 ||
        !mpz_divisible_p(numerator.get_mpz_t(), denominator.get_mpz_t()))
        throw consistency_error(std::string(context) + ": division does not clear exactly");
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
    return q;
}

} // namespace branchwork
