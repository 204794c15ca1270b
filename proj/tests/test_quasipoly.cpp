#include <cstdint>
#include <vector>

#include <gtest/gtest.h>

#include "riders/counting.hpp"
#include "riders/quasipoly.hpp"

using namespace riders;

namespace {

// C(x, i) for integer x and i >= 0 as the polynomial x (x-1) ... (x-i+1) / i!.
Rational poly_binomial(std::int64_t x, std::int64_t i)
{
    Rational num = 1;
    for (std::int64_t j = 0; j < i; ++j)
        num *= Rational(x - j);
    return num / Rational(factorial(i));
}

// Solves a square system by Gauss-Jordan elimination over the rationals.
std::vector<Rational> solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b)
{
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (a[pivot][col] == 0)
            ++pivot;
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0)
                continue;
            const Rational f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c)
                a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    for (std::size_t r = 0; r < n; ++r)
        b[r] /= a[r][r];
    return b;
}

// Monomial coefficients of sum_j w_j C(m, j), expanding each binomial as a
// product of linear factors.
Coefficients expand_binomial_sum(const std::vector<std::int64_t>& w)
{
    Coefficients total(w.size(), Rational(0));
    for (std::size_t j = 0; j < w.size(); ++j) {
        Coefficients p{Rational(1)};
        for (std::size_t r = 0; r < j; ++r) {
            Coefficients next(p.size() + 1, Rational(0));
            for (std::size_t d = 0; d < p.size(); ++d) {
                next[d + 1] += p[d];
                next[d] -= p[d] * static_cast<std::int64_t>(r);
            }
            p = std::move(next);
        }
        for (std::size_t d = 0; d < p.size(); ++d)
            total[d] += p[d] * w[j] / Rational(factorial(static_cast<std::int64_t>(j)));
    }
    return total;
}

Rational leading(const Coefficients& c) { return c.empty() ? Rational(0) : c.back(); }

} // namespace

TEST(Beta, FrozenValues)
{
    EXPECT_EQ(beta(0, 0, 0, 0), 1);
    EXPECT_EQ(beta(0, 0, 1, 1), 0);
    EXPECT_EQ(beta(1, 1, 0, 1), Rational(0));
    EXPECT_EQ(beta(1, 1, 0, 2), Rational(1));
}

TEST(Beta, MatchesLinearSolve)
{
    for (std::int64_t p = 0; p <= 3; ++p)
        for (std::int64_t q = 0; q <= 3; ++q)
            for (std::int64_t z = -1; z <= 1; ++z) {
                const std::size_t n = static_cast<std::size_t>(p + q + 1);
                std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
                std::vector<Rational> b(n);
                for (std::size_t r = 0; r < n; ++r) {
                    const std::int64_t x = static_cast<std::int64_t>(r) + 1;
                    for (std::size_t i = 0; i < n; ++i)
                        a[r][i] = poly_binomial(2 * x + z, static_cast<std::int64_t>(i));
                    b[r] = poly_binomial(2 * x + z - q, p) * poly_binomial(x, q);
                }
                const auto sol = solve(a, b);
                for (std::size_t i = 0; i < n; ++i)
                    EXPECT_EQ(beta(p, q, z, static_cast<std::int64_t>(i)), sol[i])
                        << "p=" << p << " q=" << q << " z=" << z << " i=" << i;
            }
}

TEST(Beta, IdentityOnGrid)
{
    for (std::int64_t p = 0; p <= 4; ++p)
        for (std::int64_t q = 0; q <= 4; ++q)
            for (std::int64_t z = -1; z <= 1; ++z)
                for (std::int64_t x = 0; x <= 10; ++x) {
                    Rational s = 0;
                    for (std::int64_t i = 0; i <= p + q; ++i)
                        s += beta(p, q, z, i) * poly_binomial(2 * x + z, i);
                    EXPECT_EQ(s, poly_binomial(2 * x + z - q, p) * poly_binomial(x, q));
                }
}

TEST(BasisChange, IndependentExpansion)
{
    EXPECT_EQ(binomial_basis_to_monomial({0, 0, 4, 14, 12}), expand_binomial_sum({0, 0, 4, 14, 12}));
    const Coefficients expected{Rational(0), Rational(-1, 3), Rational(1, 2), Rational(-2, 3), Rational(1, 2)};
    EXPECT_EQ(bishop_coeffs(2, 0), expected);
    EXPECT_EQ(bishop_coeffs(2, 1), expected);
}

TEST(Coefficients, SmallK)
{
    EXPECT_EQ(rw_coeffs(0, 0), Coefficients{Rational(1)});
    EXPECT_EQ(bishop_coeffs(1, 0), (Coefficients{Rational(0), Rational(0), Rational(1)}));
    EXPECT_EQ(bishop_coeffs(1, 1), (Coefficients{Rational(0), Rational(0), Rational(1)}));
    EXPECT_EQ(anassa_coeffs(1), (Coefficients{Rational(0), Rational(0), Rational(1)}));
}

TEST(Coefficients, LeadingTerms)
{
    for (std::int64_t k = 1; k <= 6; ++k) {
        const Rational inv_fact(Integer(1), factorial(k));
        for (int par : {0, 1}) {
            EXPECT_EQ(leading(rw_coeffs(k, par)), inv_fact / Rational(pow2(k)));
            EXPECT_EQ(leading(rk_coeffs(k, par)), inv_fact / Rational(pow2(k)));
            EXPECT_EQ(leading(bishop_coeffs(k, par)), inv_fact);
            EXPECT_EQ(static_cast<std::int64_t>(bishop_coeffs(k, par).size()), 2 * k + 1);
        }
        EXPECT_EQ(leading(anassa_coeffs(k)), inv_fact);
    }
}

TEST(Coefficients, RoundTripAgainstClosedForms)
{
    for (std::int64_t k = 0; k <= 5; ++k) {
        const auto b = bishop_quasipolynomial(k);
        const auto a = anassa_quasipolynomial(k);
        const auto w = white_rook_quasipolynomial(k);
        const auto kk = black_rook_quasipolynomial(k);
        for (std::int64_t m = 0; m <= 2 * k + 6; ++m) {
            EXPECT_EQ(evaluate(b, m), bishops_closed(m, k)) << m << "," << k;
            EXPECT_EQ(evaluate(a, m), anassa_closed(m, k)) << m << "," << k;
            EXPECT_EQ(evaluate(w, m), rw_closed(m, k)) << m << "," << k;
            EXPECT_EQ(evaluate(kk, m), rk_closed(m, k)) << m << "," << k;
        }
    }
}

TEST(Coefficients, EffectivePeriods)
{
    for (std::int64_t k = 1; k <= 5; ++k) {
        const auto qp = bishop_quasipolynomial(k);
        EXPECT_EQ(effective_period(qp.coeffs[0], qp.coeffs[1]), k <= 2 ? 1 : 2) << k;
        EXPECT_EQ(collapse_period(qp).period, k <= 2 ? 1 : 2) << k;
        EXPECT_EQ(anassa_quasipolynomial(k).period, 1);
    }
}

TEST(Evaluate, Errors)
{
    const QuasiPolynomial half{1, 1, {{Rational(0), Rational(1, 2)}}};
    EXPECT_EQ(evaluate(half, 2), 1);
    EXPECT_THROW(evaluate(half, 1), std::logic_error);
    EXPECT_THROW(evaluate(half, -1), std::invalid_argument);
    const QuasiPolynomial broken{1, 2, {{Rational(1)}}};
    EXPECT_THROW(evaluate(broken, 0), std::invalid_argument);
}

TEST(FallingFactorial, AnassaDivisibility)
{
    for (std::int64_t k = 0; k <= 5; ++k) {
        const auto q = divide_by_falling_factorial(anassa_coeffs(k), k);
        EXPECT_TRUE(q.exact()) << k;
        EXPECT_EQ(static_cast<std::int64_t>(q.quotient.size()), k + 1) << k;
    }
}

TEST(FallingFactorial, ReportsRemainder)
{
    // m^2 + 1 is not divisible by m.
    const auto q = divide_by_falling_factorial({Rational(1), Rational(0), Rational(1)}, 1);
    EXPECT_FALSE(q.exact());
    EXPECT_EQ(q.failed_root, 0);
    EXPECT_EQ(q.remainder, 1);
    // m (m-1) (m+2) = m^3 + m^2 - 2m divides by (m)_2 but not by (m)_3.
    const Coefficients c{Rational(0), Rational(-2), Rational(1), Rational(1)};
    EXPECT_TRUE(divide_by_falling_factorial(c, 2).exact());
    const auto q3 = divide_by_falling_factorial(c, 3);
    EXPECT_EQ(q3.failed_root, 2);
    EXPECT_EQ(q3.remainder, 4);
    EXPECT_THROW(divide_by_falling_factorial(c, -1), std::invalid_argument);
}

TEST(Evaluate, IntegralFarBeyondFittedRange)
{
    for (std::int64_t k = 0; k <= 4; ++k)
        for (std::int64_t m = 0; m <= 40; ++m) {
            EXPECT_NO_THROW(evaluate(bishop_quasipolynomial(k), m));
            EXPECT_NO_THROW(evaluate(anassa_quasipolynomial(k), m));
        }
}
