// Computes a few snake-module characters and shows a reducible tensor
// product splitting into its two composition factors.
#include <iostream>

#include "qaffine/paths.hpp"
#include "qaffine/sl2.hpp"

using namespace qaffine;

int main() {
    // the fundamental character at (1,0) in rank 2
    Snake fundamental = make_snake({{1, 0}}, 2);
    std::cout << "chi(1:0, rank 2) = " << q_character(fundamental).str() << "\n";

    // a longer snake
    Snake s = make_snake({{1, 0}, {2, 3}, {1, 6}}, 2);
    LoopPolynomial chi = q_character(s);
    std::cout << "chi(" << s.str() << ") has " << chi.term_count()
              << " monomials, dimension " << chi.coefficient_sum().str() << "\n";

    // a special-position tensor product of rank-1 evaluation modules
    int r1 = 2, r2 = 2, s1 = 0, s2 = 4;
    auto d = special_position(r1, r2, s1, s2);
    if (d) {
        std::cout << "V(" << r1 << ")(q^" << s1 << ") x V(" << r2 << ")(q^" << s2
                  << ") is reducible, witness p = " << d->p << "\n";
        std::cout << "  identity check: "
                  << (tensor_identity_check(*d, r1, r2, s1, s2) ? "exact" : "BROKEN") << "\n";
    }
    return 0;
}
