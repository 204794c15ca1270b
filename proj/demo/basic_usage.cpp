// Counts, coefficients and a brute-force cross-check through the library API.

#include <iostream>

#include "riders/riders.hpp"

int main()
{
    using namespace riders;

    std::cout << "two bishops on 8x8: " << bishops_closed(8, 2) << "\n";
    std::cout << "three anassas on 5x5: " << anassa_closed(5, 3) << "\n";

    const auto oracle = placement_profile(square_board(5), MoveSet::anassa(), 3);
    std::cout << "backtracking agrees: " << (oracle[3] == anassa_closed(5, 3) ? "yes" : "no") << "\n";

    const QuasiPolynomial qp = collapse_period(bishop_quasipolynomial(2));
    std::cout << "bishops, k = 2, period " << qp.period << ":";
    for (const Rational& c : qp.coeffs[0])
        std::cout << ' ' << to_string(c);
    std::cout << "\n";

    const auto q = divide_by_falling_factorial(anassa_coeffs(3), 3);
    std::cout << "(m)_3 divides the anassa k = 3 polynomial: " << (q.exact() ? "yes" : "no") << "\n";
}
