#pragma once

// Explicit quasi-polynomial coefficients of the counting functions. A count
// Q(m,k) is a polynomial of degree 2k in m on each residue class of m modulo
// the period; coefficients are exact rationals.
//
// The coefficient formulas first produce a vector in the binomial basis
// C(m, i), i = 0..2k, and then convert it to monomials with
// C(m, i) = sum_d (-1)^(i-d) c(i,d) m^d / i!.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "exact.hpp"
#include "counting.hpp"
#include "kernel.hpp"

namespace riders {

using Coefficients = std::vector<Rational>;

struct QuasiPolynomial {
    std::int64_t degree = 0;
    std::int64_t period = 1;
    /// coeffs[r][d]: coefficient of m^d for m = r (mod period).
    std::vector<Coefficients> coeffs;
};

/// beta_i(p,q,z): coefficients of C(2x+z-q, p) C(x, q) in the basis C(2x+z, i).
inline Rational beta(std::int64_t p, std::int64_t q, std::int64_t z, std::int64_t i)
{
    if (p < 0 || q < 0)
        throw std::invalid_argument("beta: p and q must be nonnegative");
    if (i < 0 || i > p + q)
        return 0;
    Integer total = 0;
    for (std::int64_t b = std::max<std::int64_t>(0, i - p); b <= q; ++b) {
        Integer inner = 0;
        for (std::int64_t a = 0; a <= b; ++a)
            inner += binomial_ext(p + b - q - z, a) * binomial_ext(q + z, b - a) * binomial_ext(a - q, p + b - i);
        total += pow2(b) * binomial_ext(2 * q - b, q) * inner;
    }
    return Rational(total, pow2(2 * q));
}

/// Converts sum_i v[i] C(m, i) to monomial coefficients in m.
inline Coefficients binomial_basis_to_monomial(const Coefficients& v)
{
    Coefficients out(v.size(), Rational(0));
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0)
            continue;
        const auto ii = static_cast<std::int64_t>(i);
        const Rational scale = v[i] / Rational(factorial(ii));
        for (std::int64_t d = 0; d <= ii; ++d)
            out[static_cast<std::size_t>(d)] += sign_pow(ii - d) * Rational(stirling1_unsigned(ii, d)) * scale;
    }
    return out;
}

namespace detail {

// Binomial-basis vector of a color board's rook count; z = -parity for the
// white board and +parity for the black board.
inline Coefficients color_rook_binomial_basis(std::int64_t k, std::int64_t z)
{
    Coefficients v(static_cast<std::size_t>(2 * k + 1), Rational(0));
    for (std::int64_t i = 0; i <= 2 * k; ++i) {
        Rational sum = 0;
        for (std::int64_t p = std::max<std::int64_t>(0, i - k); p <= k; ++p)
            for (std::int64_t j = p; j <= k; ++j) {
                const Integer ward = assoc_stirling2(p + j, p);
                if (ward != 0)
                    sum += Rational(ward) * beta(p + j, k - j, z, i);
            }
        v[static_cast<std::size_t>(i)] = sum;
    }
    return v;
}

inline void check_parity(int m_parity)
{
    if (m_parity != 0 && m_parity != 1)
        throw std::invalid_argument("parity must be 0 or 1, got " + std::to_string(m_parity));
}

} // namespace detail

/// [m^d] R_W(m,k) for m of the given parity, d = 0..2k.
inline Coefficients rw_coeffs(std::int64_t k, int m_parity)
{
    if (k < 0)
        throw std::invalid_argument("rw_coeffs: negative k");
    detail::check_parity(m_parity);
    return binomial_basis_to_monomial(detail::color_rook_binomial_basis(k, -m_parity));
}

/// [m^d] R_K(m,k) for m of the given parity, d = 0..2k.
inline Coefficients rk_coeffs(std::int64_t k, int m_parity)
{
    if (k < 0)
        throw std::invalid_argument("rk_coeffs: negative k");
    detail::check_parity(m_parity);
    return binomial_basis_to_monomial(detail::color_rook_binomial_basis(k, m_parity));
}

/// [m^d] B_S(m,k): Cauchy product of the white and black coefficient vectors.
inline Coefficients bishop_coeffs(std::int64_t k, int m_parity)
{
    if (k < 0)
        throw std::invalid_argument("bishop_coeffs: negative k");
    detail::check_parity(m_parity);
    Coefficients out(static_cast<std::size_t>(2 * k + 1), Rational(0));
    for (std::int64_t j = 0; j <= k; ++j) {
        const Coefficients white = rw_coeffs(j, m_parity);
        const Coefficients black = rk_coeffs(k - j, m_parity);
        for (std::size_t a = 0; a < white.size(); ++a)
            for (std::size_t b = 0; b < black.size(); ++b)
                out[a + b] += white[a] * black[b];
    }
    return out;
}

/// alpha(k,j) = 2^(k-2j) [C(k-j, j-1) + C(k-j+1, j)] j!
inline Integer anassa_alpha(std::int64_t k, std::int64_t j) { return anassa_weight(k, j) * factorial(j); }

/// [m^d] A_S(m,k), d = 0..2k; one vector serves every m.
inline Coefficients anassa_coeffs(std::int64_t k)
{
    if (k < 0)
        throw std::invalid_argument("anassa_coeffs: negative k");
    Coefficients v(static_cast<std::size_t>(2 * k + 1), Rational(0));
    for (std::int64_t i = 0; i <= 2 * k; ++i) {
        Integer sum = 0;
        const std::int64_t upper = std::min(ceil_half(k), 2 * k - i);
        for (std::int64_t j = 0; j <= upper; ++j) {
            Integer by_p = 0;
            for (std::int64_t p = std::max<std::int64_t>(0, i - k); p <= k - j; ++p) {
                const Integer ward = assoc_stirling2(p + k - j, p);
                if (ward == 0)
                    continue;
                Integer by_b = 0;
                for (std::int64_t b = 0; b <= j; ++b)
                    by_b += binomial_ext(p, b) * binomial_ext(k, j - b) * binomial_ext(b, k + p - i);
                by_p += ward * by_b;
            }
            sum += anassa_alpha(k, j) * by_p;
        }
        v[static_cast<std::size_t>(i)] = Rational(sum);
    }
    return binomial_basis_to_monomial(v);
}

inline QuasiPolynomial bishop_quasipolynomial(std::int64_t k)
{
    return {2 * k, 2, {bishop_coeffs(k, 0), bishop_coeffs(k, 1)}};
}

inline QuasiPolynomial white_rook_quasipolynomial(std::int64_t k)
{
    return {2 * k, 2, {rw_coeffs(k, 0), rw_coeffs(k, 1)}};
}

inline QuasiPolynomial black_rook_quasipolynomial(std::int64_t k)
{
    return {2 * k, 2, {rk_coeffs(k, 0), rk_coeffs(k, 1)}};
}

inline QuasiPolynomial anassa_quasipolynomial(std::int64_t k) { return {2 * k, 1, {anassa_coeffs(k)}}; }

inline Rational evaluate_polynomial(const Coefficients& c, std::int64_t m)
{
    Rational acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * m + *it;
    return acc;
}

/// Value at m using the residue class m mod period; must be an integer.
inline Integer evaluate(const QuasiPolynomial& qp, std::int64_t m)
{
    if (m < 0)
        throw std::invalid_argument("evaluate: negative m");
    if (qp.period < 1 || static_cast<std::int64_t>(qp.coeffs.size()) != qp.period)
        throw std::invalid_argument("evaluate: coefficient table does not match period");
    const auto& c = qp.coeffs[static_cast<std::size_t>(m % qp.period)];
    const Rational value = evaluate_polynomial(c, m);
    if (!is_integer(value))
        throw std::logic_error("evaluate: non-integer value " + to_string(value) + " at m = " + std::to_string(m));
    return boost::multiprecision::numerator(value);
}

/// 1 if the per-parity coefficient vectors coincide, else 2.
inline std::int64_t effective_period(const Coefficients& even, const Coefficients& odd)
{
    return even == odd ? 1 : 2;
}

/// Drops repeated residue classes: a period-2 table whose classes agree
/// becomes period 1.
inline QuasiPolynomial collapse_period(QuasiPolynomial qp)
{
    if (qp.period == 2 && effective_period(qp.coeffs[0], qp.coeffs[1]) == 1) {
        qp.period = 1;
        qp.coeffs.resize(1);
    }
    return qp;
}

struct FallingFactorialQuotient {
    Coefficients quotient;
    /// First root r in 0..k-1 at which division by (m - r) left a remainder.
    std::optional<std::int64_t> failed_root;
    Rational remainder = 0;

    bool exact() const { return !failed_root.has_value(); }
};

/// Divides sum_d c_d m^d by (m)_k = m (m-1) ... (m-k+1), one linear factor at
/// a time, stopping at the first nonzero remainder.
inline FallingFactorialQuotient divide_by_falling_factorial(Coefficients coeffs, std::int64_t k)
{
    if (k < 0)
        throw std::invalid_argument("divide_by_falling_factorial: negative k");
    FallingFactorialQuotient result;
    for (std::int64_t r = 0; r < k; ++r) {
        if (coeffs.empty())
            coeffs.push_back(0);
        // Synthetic division by (m - r), highest degree first.
        Coefficients q(coeffs.size() > 1 ? coeffs.size() - 1 : 0, Rational(0));
        Rational carry = 0;
        for (std::size_t d = coeffs.size(); d-- > 0;) {
            carry = carry * r + coeffs[d];
            if (d > 0)
                q[d - 1] = carry;
        }
        if (carry != 0) {
            result.failed_root = r;
            result.remainder = carry;
            result.quotient = std::move(coeffs);
            return result;
        }
        coeffs = std::move(q);
    }
    result.quotient = std::move(coeffs);
    return result;
}

} // namespace riders
