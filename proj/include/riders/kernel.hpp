#pragma once

// Combinatorial primitives over all integer arguments: Kronenburg-extended
// binomials, Stirling numbers of both kinds (Knuth's negative-argument
// duality), associated Stirling numbers of the second kind (Ward numbers),
// falling factorials and parity.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "exact.hpp"

namespace riders {

/// m mod 2 in {0, 1}, also for negative m.
constexpr int parity(std::int64_t m) { return static_cast<int>(((m % 2) + 2) % 2); }

constexpr std::int64_t floor_half(std::int64_t m) { return (m - parity(m)) / 2; }
constexpr std::int64_t ceil_half(std::int64_t m) { return (m + parity(m)) / 2; }

constexpr int sign_pow(std::int64_t e) { return parity(e) == 0 ? 1 : -1; }

namespace detail {

// Largest first argument a memo table will grow to. Requests beyond it throw
// instead of silently allocating quadratic storage.
inline constexpr std::int64_t memo_row_limit = 4096;

// Lower-triangular table of exact values, grown row by row on demand. One
// instance per thread, so lookups need no locking.
template <class RowRule>
class Triangle {
public:
    explicit Triangle(const char* name) : name_(name) {}

    const Integer& at(std::int64_t n, std::int64_t k)
    {
        if (n > memo_row_limit)
            throw std::out_of_range(std::string(name_) + ": argument " + std::to_string(n) +
                                    " exceeds memo limit");
        while (static_cast<std::int64_t>(rows_.size()) <= n) {
            const auto next = static_cast<std::int64_t>(rows_.size());
            std::vector<Integer> row(static_cast<std::size_t>(next + 1));
            for (std::int64_t j = 0; j <= next; ++j)
                row[static_cast<std::size_t>(j)] = RowRule::value(rows_, next, j);
            rows_.push_back(std::move(row));
        }
        return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }

private:
    const char* name_;
    std::vector<std::vector<Integer>> rows_;
};

inline const Integer& cell(const std::vector<std::vector<Integer>>& rows, std::int64_t n, std::int64_t k)
{
    static const Integer zero = 0;
    if (n < 0 || k < 0 || k > n)
        return zero;
    return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

// S(n,k) = k S(n-1,k) + S(n-1,k-1)
struct Stirling2Rule {
    static Integer value(const std::vector<std::vector<Integer>>& rows, std::int64_t n, std::int64_t k)
    {
        if (n == 0)
            return k == 0 ? 1 : 0;
        return k * cell(rows, n - 1, k) + cell(rows, n - 1, k - 1);
    }
};

// c(n,k) = (n-1) c(n-1,k) + c(n-1,k-1)
struct Stirling1Rule {
    static Integer value(const std::vector<std::vector<Integer>>& rows, std::int64_t n, std::int64_t k)
    {
        if (n == 0)
            return k == 0 ? 1 : 0;
        return (n - 1) * cell(rows, n - 1, k) + cell(rows, n - 1, k - 1);
    }
};

// A(m,k) = k A(m-1,k) + (m-1) A(m-2,k-1), A(0,k) = delta_k0, A(1,k) = 0.
// Nonzero entries satisfy 2k <= m, so the triangle shape suffices.
struct WardRule {
    static Integer value(const std::vector<std::vector<Integer>>& rows, std::int64_t m, std::int64_t k)
    {
        if (m == 0)
            return k == 0 ? 1 : 0;
        if (m == 1)
            return 0;
        return k * cell(rows, m - 1, k) + (m - 1) * cell(rows, m - 2, k - 1);
    }
};

inline Triangle<Stirling2Rule>& stirling2_table()
{
    thread_local Triangle<Stirling2Rule> table("stirling2");
    return table;
}

inline Triangle<Stirling1Rule>& stirling1_table()
{
    thread_local Triangle<Stirling1Rule> table("stirling1");
    return table;
}

inline Triangle<WardRule>& ward_table()
{
    thread_local Triangle<WardRule> table("assoc_stirling2");
    return table;
}

// Standard binomial for n >= 0, 0 <= k <= n.
inline Integer binomial_nonneg(std::int64_t n, std::int64_t k)
{
    if (k > n - k)
        k = n - k;
    Integer result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

} // namespace detail

/// Binomial coefficient extended to all integer pairs (Kronenburg).
inline Integer binomial_ext(std::int64_t n, std::int64_t k)
{
    if (n >= 0) {
        if (k < 0 || k > n)
            return 0;
        return detail::binomial_nonneg(n, k);
    }
    if (k >= 0)
        return sign_pow(k) * detail::binomial_nonneg(-n + k - 1, k);
    if (k <= n)
        return sign_pow(n - k) * detail::binomial_nonneg(-k - 1, n - k);
    return 0;
}

/// Unsigned Stirling number of the first kind c(n,k); n must be nonnegative.
inline Integer stirling1_unsigned(std::int64_t n, std::int64_t k)
{
    if (n < 0)
        throw std::domain_error("stirling1_unsigned: negative first argument " + std::to_string(n));
    if (k < 0 || k > n)
        return 0;
    return detail::stirling1_table().at(n, k);
}

/// Stirling number of the second kind. Both arguments nonpositive use the
/// duality S(-n,-k) = c(k,n); mixed signs give 0.
inline Integer stirling2_ext(std::int64_t n, std::int64_t k)
{
    if (n >= 0 && k >= 0) {
        if (k > n)
            return 0;
        return detail::stirling2_table().at(n, k);
    }
    if (n <= 0 && k <= 0)
        return stirling1_unsigned(-k, -n);
    return 0;
}

/// Associated Stirling number of the second kind: partitions of an m-set
/// into k blocks of size at least two.
inline Integer assoc_stirling2(std::int64_t m, std::int64_t k)
{
    if (m < 0)
        throw std::domain_error("assoc_stirling2: negative first argument " + std::to_string(m));
    if (k < 0 || k > m)
        return 0;
    return detail::ward_table().at(m, k);
}

/// x (x-1) ... (x-k+1); the empty product is 1.
inline Integer falling_factorial(std::int64_t x, std::int64_t k)
{
    if (k < 0)
        throw std::domain_error("falling_factorial: negative length " + std::to_string(k));
    Integer result = 1;
    for (std::int64_t i = 0; i < k; ++i)
        result *= x - i;
    return result;
}

} // namespace riders
