#pragma once

// Verification batteries behind `riders verify`. Each suite records every
// individual comparison; failures carry the offending (piece, m, k, p) tuple
// and both values.

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "board.hpp"
#include "counting.hpp"
#include "exact.hpp"
#include "kernel.hpp"
#include "quasipoly.hpp"
#include "table.hpp"

namespace riders {

struct VerifyBounds {
    int oracle_m_max = 6;
    int collapse_m_max = 6;
    int coeff_k_max = 5;
};

class Report {
public:
    explicit Report(std::string suite) : suite_(std::move(suite)) {}

    template <class A, class B>
    void expect_equal(const A& got, const B& want, const std::string& what)
    {
        if (got == want) {
            ++passed_;
            return;
        }
        std::ostringstream msg;
        msg << what << ": got " << describe(got) << ", expected " << describe(want);
        failures_.push_back(msg.str());
    }

    void expect(bool ok, const std::string& what)
    {
        if (ok)
            ++passed_;
        else
            failures_.push_back(what);
    }

    void merge(const Report& other)
    {
        passed_ += other.passed_;
        for (const auto& f : other.failures_)
            failures_.push_back(other.suite_ + ": " + f);
    }

    const std::string& suite() const { return suite_; }
    std::size_t passed() const { return passed_; }
    const std::vector<std::string>& failures() const { return failures_; }
    bool ok() const { return failures_.empty(); }

private:
    template <class T>
    static std::string describe(const T& v)
    {
        if constexpr (std::is_same_v<T, Integer> || std::is_same_v<T, Rational>)
            return to_string(v);
        else if constexpr (std::is_same_v<T, Coefficients>) {
            std::string out = "[";
            for (std::size_t i = 0; i < v.size(); ++i)
                out += (i ? ", " : "") + to_string(v[i]);
            return out + "]";
        } else {
            std::ostringstream s;
            s << v;
            return s.str();
        }
    }

    std::string suite_;
    std::size_t passed_ = 0;
    std::vector<std::string> failures_;
};

namespace detail {

inline std::string tuple_label(const std::string& name, std::int64_t m, std::int64_t k)
{
    return name + " m=" + std::to_string(m) + " k=" + std::to_string(k);
}

inline Integer at_or_zero(const std::vector<Integer>& v, std::int64_t i)
{
    return i < static_cast<std::int64_t>(v.size()) ? v[static_cast<std::size_t>(i)] : Integer(0);
}

} // namespace detail

/// Closed forms against exhaustive enumeration on small boards.
inline Report verify_oracle(const VerifyBounds& bounds)
{
    Report r("oracle");
    for (int m = 0; m <= bounds.oracle_m_max; ++m) {
        const Board board = square_board(m);
        const auto bishops = placement_profile(board, MoveSet::bishop());
        const auto anassas = placement_profile(board, MoveSet::anassa());
        const auto white = placement_profile(bishop_color_board(m, Color::white), MoveSet::bishop());
        const auto black = placement_profile(bishop_color_board(m, Color::black), MoveSet::bishop());
        const std::int64_t k_top = static_cast<std::int64_t>(board.count());
        for (std::int64_t k = 0; k <= k_top; ++k) {
            r.expect_equal(bishops_closed(m, k), detail::at_or_zero(bishops, k), detail::tuple_label("bishop", m, k));
            r.expect_equal(anassa_closed(m, k), detail::at_or_zero(anassas, k), detail::tuple_label("anassa", m, k));
            r.expect_equal(rw_closed(m, k), detail::at_or_zero(white, k), detail::tuple_label("white", m, k));
            r.expect_equal(rk_closed(m, k), detail::at_or_zero(black, k), detail::tuple_label("black", m, k));
            Integer split = 0;
            for (std::int64_t j = 0; j <= k; ++j)
                split += detail::at_or_zero(white, j) * detail::at_or_zero(black, k - j);
            r.expect_equal(split, detail::at_or_zero(bishops, k), detail::tuple_label("bishop color split", m, k));
            if (k > feasible_k_max(Piece::bishop, m))
                r.expect_equal(detail::at_or_zero(bishops, k), Integer(0), detail::tuple_label("bishop bound", m, k));
            if (k > feasible_k_max(Piece::anassa, m))
                r.expect_equal(detail::at_or_zero(anassas, k), Integer(0), detail::tuple_label("anassa bound", m, k));
        }
        const auto below = below_diagonal_profile(m);
        for (int k = 0; k <= m; ++k) {
            Integer total = 0;
            for (int p = 0; p <= k; ++p) {
                const Integer& oracle = below[static_cast<std::size_t>(k)][static_cast<std::size_t>(p)];
                total += oracle;
                r.expect_equal(anassa_pk_closed(m, k, p), oracle,
                               detail::tuple_label("anassa", m, k) + " p=" + std::to_string(p));
            }
            r.expect_equal(total, detail::at_or_zero(anassas, k), detail::tuple_label("anassa p-sum", m, k));
        }
    }
    return r;
}

/// Placement counts on S_m minus the inductive subset against counts on S_{m-1}.
inline Report verify_collapse_suite(const VerifyBounds& bounds)
{
    Report r("collapse");
    for (int m = 1; m <= bounds.collapse_m_max; ++m)
        for (Piece piece : {Piece::bishop, Piece::anassa}) {
            const std::string label = to_string(piece) + " m=" + std::to_string(m);
            r.expect(verify_collapse(m, piece, feasible_k_max(piece, m)), label + ": reduced-board counts differ");
            r.expect(is_collapsible(m, piece), label + ": collapse map is not an attack-preserving bijection");
        }
    return r;
}

/// Cross-formula agreement and the supporting combinatorial identities.
inline Report verify_identities()
{
    Report r("identities");

    for (std::int64_t n = -10; n <= 10; ++n)
        for (std::int64_t k = -10; k <= 10; ++k)
            if (n != 0 || k != 0)
                r.expect_equal(binomial_ext(n, k), binomial_ext(n - 1, k) + binomial_ext(n - 1, k - 1),
                               "pascal n=" + std::to_string(n) + " k=" + std::to_string(k));
    for (std::int64_t n = 0; n <= 30; ++n)
        for (std::int64_t k = 0; k <= n; ++k)
            r.expect_equal(binomial_ext(n, k), binomial_ext(n, n - k), "binomial symmetry n=" + std::to_string(n));
    for (std::int64_t n = 0; n <= 12; ++n)
        for (std::int64_t k = 0; k <= 12; ++k)
            r.expect_equal(stirling2_ext(-n, -k), stirling1_unsigned(k, n), "stirling duality " + std::to_string(n));
    for (std::int64_t j = 0; j <= 12; ++j) {
        Integer s = 0;
        for (std::int64_t i = 0; i <= j; ++i)
            s += sign_pow(i) * stirling1_unsigned(j + 1, i + 1);
        r.expect_equal(s, Integer(j == 0 ? 1 : 0), "alternating first-kind row j=" + std::to_string(j));
    }
    for (std::int64_t k = 0; k <= 20; ++k) {
        Integer s = 0;
        for (std::int64_t j = 0; j <= ceil_half(k); ++j)
            if (k - 2 * j >= 0)
                s += sign_pow(j) * pow2(k - 2 * j) * binomial_ext(k - j, k - 2 * j);
        r.expect_equal(s, Integer(k + 1), "gould k=" + std::to_string(k));
    }
    for (std::int64_t k = 0; k <= 8; ++k)
        for (std::int64_t m = 0; m <= 20; ++m) {
            Integer s = 0;
            for (std::int64_t p = 0; p <= k; ++p)
                s += assoc_stirling2(k + p, p) * binomial_ext(m, k + p);
            r.expect_equal(stirling2_ext(m, m - k), s, detail::tuple_label("ward expansion", m, k));
        }
    for (std::int64_t p = 0; p <= 4; ++p)
        for (std::int64_t q = 0; q <= 4; ++q)
            for (std::int64_t z = -1; z <= 1; ++z)
                for (std::int64_t x = 0; x <= 10; ++x) {
                    Rational rhs = 0;
                    for (std::int64_t i = 0; i <= p + q; ++i)
                        rhs += beta(p, q, z, i) * Rational(binomial_ext(2 * x + z, i));
                    const Rational lhs(binomial_ext(2 * x + z - q, p) * binomial_ext(x, q));
                    r.expect_equal(rhs, lhs,
                                   "beta identity p=" + std::to_string(p) + " q=" + std::to_string(q) +
                                       " z=" + std::to_string(z) + " x=" + std::to_string(x));
                }

    for (std::int64_t m = 0; m <= 12; ++m)
        for (std::int64_t k = 0; k <= 10; ++k) {
            const Integer closed = bishops_closed(m, k);
            r.expect_equal(bishops_convolution(m, k), closed, detail::tuple_label("bishop convolution", m, k));
            r.expect_equal(bishops_arshon_kotesovec(m, k), closed, detail::tuple_label("bishop m-indexed form", m, k));
        }
    for (std::int64_t m = 0; m <= 20; ++m)
        for (std::int64_t k = 0; k <= 10; ++k) {
            r.expect_equal(rw_recurrence(m, k), rw_closed(m, k), detail::tuple_label("white recurrence", m, k));
            r.expect_equal(rk_recurrence(m, k), rk_closed(m, k), detail::tuple_label("black recurrence", m, k));
            r.expect_equal(rw_arshon(m, k), rw_closed(m, k), detail::tuple_label("white power sum", m, k));
        }
    for (std::int64_t m = 0; m <= 10; ++m)
        for (std::int64_t k = 0; k <= 8; ++k)
            r.expect_equal(rw_closed(2 * m, k), rk_closed(2 * m, k), detail::tuple_label("even-board colors", 2 * m, k));
    for (std::int64_t m = 0; m <= 20; ++m)
        r.expect_equal(bishops_closed(m, 2),
                       12 * binomial_ext(m, 4) + 14 * binomial_ext(m, 3) + 4 * binomial_ext(m, 2),
                       detail::tuple_label("bishop two-piece polynomial", m, 2));
    for (std::int64_t m = 0; m <= 12; ++m)
        for (std::int64_t k = 0; k <= 8; ++k) {
            for (std::int64_t p = 0; p <= k; ++p)
                r.expect_equal(anassa_pk_recurrence(m, k, p), anassa_pk_closed(m, k, p),
                               detail::tuple_label("anassa recurrence", m, k) + " p=" + std::to_string(p));
            r.expect_equal(anassa_total_by_sum(m, k), anassa_closed(m, k), detail::tuple_label("anassa p-sum", m, k));
        }
    for (std::int64_t m = 0; m <= 10; ++m)
        for (std::int64_t k = 0; k <= m; ++k)
            r.expect_equal(anassa_pk_closed(m, k, k), stirling2_ext(m, m - k), detail::tuple_label("anassa p=k", m, k));
    for (std::int64_t k = 0; k <= 8; ++k) {
        r.expect_equal(bishops_closed(-1, k), factorial(k), detail::tuple_label("bishop", -1, k));
        r.expect_equal(anassa_closed(-1, k), factorial(k), detail::tuple_label("anassa", -1, k));
    }
    for (std::int64_t m = 0; m <= 8; ++m) {
        const DiagonalPair d = kotesovec_diagonal(m);
        r.expect_equal(d.stirling_form, d.power_form, "diagonal forms m=" + std::to_string(m));
        r.expect_equal(d.stirling_form, anassa_closed(m, m), "diagonal vs closed m=" + std::to_string(m));
    }
    return r;
}

/// Coefficient round-trips, known low-order vectors, periods and the (m)_k factor.
inline Report verify_coeffs(const VerifyBounds& bounds)
{
    Report r("coeffs");
    for (std::int64_t k = 0; k <= bounds.coeff_k_max; ++k) {
        for (Family f : {Family::bishop, Family::anassa, Family::white, Family::black}) {
            const QuasiPolynomial qp = quasipolynomial(f, k);
            for (std::int64_t m = 0; m <= 2 * k + 6; ++m)
                r.expect_equal(evaluate(qp, m), count_closed(f, m, k), detail::tuple_label(to_string(f), m, k));
        }
        const Coefficients even = bishop_coeffs(k, 0);
        const Coefficients odd = bishop_coeffs(k, 1);
        r.expect_equal(effective_period(even, odd), std::int64_t{k <= 2 ? 1 : 2},
                       "bishop period k=" + std::to_string(k));
        const auto quotient = divide_by_falling_factorial(anassa_coeffs(k), k);
        r.expect(quotient.exact(), "anassa k=" + std::to_string(k) + ": not divisible by the falling factorial");
    }
    if (bounds.coeff_k_max >= 1)
        r.expect_equal(bishop_coeffs(1, 0), Coefficients{0, 0, 1}, "bishop k=1 coefficients");
    if (bounds.coeff_k_max >= 2)
        r.expect_equal(bishop_coeffs(2, 0),
                       binomial_basis_to_monomial(Coefficients{0, 0, 4, 14, 12}), "bishop k=2 coefficients");
    return r;
}

inline Report verify_all(const VerifyBounds& bounds)
{
    Report all("all");
    all.merge(verify_oracle(bounds));
    all.merge(verify_identities());
    all.merge(verify_collapse_suite(bounds));
    all.merge(verify_coeffs(bounds));
    return all;
}

} // namespace riders
