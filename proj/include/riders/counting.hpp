#pragma once

// Closed forms and recurrences for nonattacking bishops and anassas on the
// square board S_m, plus rooks on its two color boards W_m (white) and K_m
// (black). Each count has at least two independent routes so they can be
// checked against each other and against the placement oracle.
//
// Closed forms accept any integer m. Sums keep their written index limits;
// the extended binomials and Stirling numbers make out-of-range terms vanish,
// which is what makes the m = -1 evaluations meaningful. Other negative m are
// evaluated as written with no asserted combinatorial meaning.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "exact.hpp"
#include "kernel.hpp"

namespace riders {

// ---------------------------------------------------------------------------
// Rooks on the color boards

/// R_W(m,k) = sum_j C(ceil(m/2), j) S(m-j, m-k)
inline Integer rw_closed(std::int64_t m, std::int64_t k)
{
    if (k < 0)
        throw std::invalid_argument("rw_closed: negative k");
    Integer total = 0;
    for (std::int64_t j = 0; j <= k; ++j)
        total += binomial_ext(ceil_half(m), j) * stirling2_ext(m - j, m - k);
    return total;
}

/// R_K(m,k) = sum_j C(floor(m/2), j) S(m-j, m-k)
inline Integer rk_closed(std::int64_t m, std::int64_t k)
{
    if (k < 0)
        throw std::invalid_argument("rk_closed: negative k");
    Integer total = 0;
    for (std::int64_t j = 0; j <= k; ++j)
        total += binomial_ext(floor_half(m), j) * stirling2_ext(m - j, m - k);
    return total;
}

namespace detail {

// Memoized two-index recurrence. `black` selects the K_m factor
// (m - k + 1 - parity(m)) instead of the W_m factor (m - k + parity(m)).
class ColorRookRecurrence {
public:
    explicit ColorRookRecurrence(bool black) : black_(black) {}

    Integer operator()(std::int64_t m, std::int64_t k)
    {
        if (k < 0)
            return 0;
        if (k == 0)
            return 1;
        if (m == 0)
            return 0;
        if (const auto it = memo_.find({m, k}); it != memo_.end())
            return it->second;
        const std::int64_t factor = black_ ? m - k + 1 - parity(m) : m - k + parity(m);
        Integer value = (*this)(m - 1, k) + factor * (*this)(m - 1, k - 1);
        memo_.emplace(std::make_pair(m, k), value);
        return value;
    }

private:
    bool black_;
    std::map<std::pair<std::int64_t, std::int64_t>, Integer> memo_;
};

} // namespace detail

inline Integer rw_recurrence(std::int64_t m, std::int64_t k)
{
    if (m < 0 || k < 0)
        throw std::invalid_argument("rw_recurrence: arguments must be nonnegative");
    thread_local detail::ColorRookRecurrence white(false);
    return white(m, k);
}

inline Integer rk_recurrence(std::int64_t m, std::int64_t k)
{
    if (m < 0 || k < 0)
        throw std::invalid_argument("rk_recurrence: arguments must be nonnegative");
    thread_local detail::ColorRookRecurrence black(true);
    return black(m, k);
}

/// R_W(m,k) via the alternating sum over powers, indexed by m - k:
/// R_W(m, m-n) = sum_j C(n,j) (-1)^(n-j) (j+1)^ceil(m/2) j^floor(m/2) / n!
inline Integer rw_arshon(std::int64_t m, std::int64_t k)
{
    if (m < 0 || k < 0)
        throw std::invalid_argument("rw_arshon: arguments must be nonnegative");
    const std::int64_t n = m - k;
    if (n < 0)
        return 0;
    Integer total = 0;
    for (std::int64_t j = 0; j <= n; ++j) {
        Integer term = binomial_ext(n, j) * ipow(Integer(j + 1), ceil_half(m)) * ipow(Integer(j), floor_half(m));
        total += sign_pow(n - j) * term;
    }
    return exact_integer(Rational(total, factorial(n)), "rw_arshon");
}

// ---------------------------------------------------------------------------
// Bishops

/// B_S(m,k) as a product of color-board sums with k-dependent limits.
inline Integer bishops_closed(std::int64_t m, std::int64_t k)
{
    if (k < 0)
        throw std::invalid_argument("bishops_closed: negative k");
    Integer total = 0;
    for (std::int64_t j = 0; j <= k; ++j) {
        Integer black = 0;
        for (std::int64_t i = 0; i <= j; ++i)
            black += binomial_ext(floor_half(m), i) * stirling2_ext(m - i, m - j);
        if (black == 0)
            continue;
        Integer white = 0;
        for (std::int64_t l = 0; l <= k - j; ++l)
            white += binomial_ext(ceil_half(m), l) * stirling2_ext(m - l, m - k + j);
        total += black * white;
    }
    return total;
}

/// B_S(m,k) = sum_j R_K(m,j) R_W(m,k-j)
inline Integer bishops_convolution(std::int64_t m, std::int64_t k)
{
    if (k < 0)
        throw std::invalid_argument("bishops_convolution: negative k");
    Integer total = 0;
    for (std::int64_t j = 0; j <= k; ++j)
        total += rk_closed(m, j) * rw_closed(m, k - j);
    return total;
}

/// The older double-index form whose summation limits depend on m.
inline Integer bishops_arshon_kotesovec(std::int64_t m, std::int64_t k)
{
    if (m < 0 || k < 0)
        throw std::invalid_argument("bishops_arshon_kotesovec: arguments must be nonnegative");
    const std::int64_t hi = floor_half(m + 1);
    const std::int64_t lo = floor_half(m);
    Integer total = 0;
    for (std::int64_t j = 0; j <= m; ++j) {
        Integer first = 0;
        for (std::int64_t i = 0; i <= hi; ++i)
            first += binomial_ext(hi, i) * stirling2_ext(i + lo, m - j);
        if (first == 0)
            continue;
        Integer second = 0;
        for (std::int64_t l = 0; l <= lo; ++l)
            second += binomial_ext(lo, l) * stirling2_ext(l + hi, m - k + j);
        total += first * second;
    }
    return total;
}

// ---------------------------------------------------------------------------
// Anassas

/// A_S(m,k,p): k anassas with exactly p strictly below the main diagonal.
inline Integer anassa_pk_closed(std::int64_t m, std::int64_t k, std::int64_t p)
{
    if (k < 0 || p < 0)
        throw std::invalid_argument("anassa_pk_closed: k and p must be nonnegative");
    Integer total = 0;
    for (std::int64_t j = 0; j <= p; ++j) {
        Integer coeff = binomial_ext(k - p - 1, j) * binomial_ext(k - j, k - p);
        if (coeff == 0)
            continue;
        total += falling_factorial(m - k + j, j) * coeff * stirling2_ext(m + 1, m - k + j + 1);
    }
    return total;
}

namespace detail {

class AnassaRecurrence {
public:
    Integer operator()(std::int64_t m, std::int64_t k, std::int64_t p)
    {
        if (k < 0 || p < 0)
            return 0;
        if (m == 0)
            return (k == 0 && p == 0) ? 1 : 0;
        if (k == 0)
            return p == 0 ? 1 : 0;
        if (k == 1) {
            if (p == 0)
                return stirling2_ext(m + 1, m);
            return p == 1 ? stirling2_ext(m, m - 1) : Integer(0);
        }
        if (p == 0)
            return stirling2_ext(m + 1, m - k + 1);
        const auto key = std::make_tuple(m, k, p);
        if (const auto it = memo_.find(key); it != memo_.end())
            return it->second;
        Integer value = (*this)(m - 1, k, p) + (m - k + 1) * (*this)(m - 1, k - 1, p) +
                        (m - p) * (*this)(m - 1, k - 1, p - 1) +
                        (m - p) * (m - k + 1) * (*this)(m - 1, k - 2, p - 1);
        memo_.emplace(key, value);
        return value;
    }

private:
    std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t>, Integer> memo_;
};

} // namespace detail

inline Integer anassa_pk_recurrence(std::int64_t m, std::int64_t k, std::int64_t p)
{
    if (m < 0 || k < 0 || p < 0)
        throw std::invalid_argument("anassa_pk_recurrence: arguments must be nonnegative");
    thread_local detail::AnassaRecurrence recurrence;
    return recurrence(m, k, p);
}

/// 2^(k-2j) [C(k-j, j-1) + C(k-j+1, j)]. The power is 2^-1 only when k is odd
/// and j = (k+1)/2, where the bracket equals 2, so the product is an integer.
inline Integer anassa_weight(std::int64_t k, std::int64_t j)
{
    const Integer bracket = binomial_ext(k - j, j - 1) + binomial_ext(k - j + 1, j);
    const std::int64_t e = k - 2 * j;
    if (e >= 0)
        return pow2(e) * bracket;
    return exact_integer(Rational(bracket, pow2(-e)), "anassa_weight");
}

/// A_S(m,k) = sum_{j <= ceil(k/2)} (m-k+j)_j S(m, m-k+j) 2^(k-2j) [...]
inline Integer anassa_closed(std::int64_t m, std::int64_t k)
{
    if (k < 0)
        throw std::invalid_argument("anassa_closed: negative k");
    Integer total = 0;
    for (std::int64_t j = 0; j <= ceil_half(k); ++j)
        total += falling_factorial(m - k + j, j) * stirling2_ext(m, m - k + j) * anassa_weight(k, j);
    return total;
}

inline Integer anassa_total_by_sum(std::int64_t m, std::int64_t k)
{
    if (m < 0 || k < 0)
        throw std::invalid_argument("anassa_total_by_sum: arguments must be nonnegative");
    Integer total = 0;
    for (std::int64_t p = 0; p <= k; ++p)
        total += anassa_pk_closed(m, k, p);
    return total;
}

struct DiagonalPair {
    Integer stirling_form;
    Integer power_form;
};

/// Two expressions for A_S(m,m):
///   sum_j C(m+1,j) S(m,j) j!/2^j   and   2^-(m+1) sum_j C(m+1,j) j^m.
inline DiagonalPair kotesovec_diagonal(std::int64_t m)
{
    if (m < 0)
        throw std::invalid_argument("kotesovec_diagonal: negative m");
    Rational first = 0;
    for (std::int64_t j = 0; j <= m; ++j)
        first += Rational(binomial_ext(m + 1, j) * stirling2_ext(m, j) * factorial(j), pow2(j));
    Integer second = 0;
    for (std::int64_t j = 0; j <= m + 1; ++j)
        second += binomial_ext(m + 1, j) * ipow(Integer(j), m);
    return {exact_integer(first, "kotesovec_diagonal"),
            exact_integer(Rational(second, pow2(m + 1)), "kotesovec_diagonal")};
}

} // namespace riders
