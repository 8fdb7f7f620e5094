// Runs two mutation rounds on the truncated rank-2 seed (the threshold for
// this rank) and prints the top cluster variables next to the characters
// they become.
#include <iostream>

#include "qaffine/cluster.hpp"
#include "qaffine/tsystem.hpp"

using namespace qaffine;

int main() {
    const int rank = 2, depth = 8, rounds = 2;
    Seed seed = initial_seed(rank, depth);
    std::cout << "initial variables:\n";
    for (auto v : seed.quiver.vertices)
        if (v.k >= -4)
            std::cout << "  (" << v.i << "," << v.k << ") = "
                      << seed.variables.at(v).str() << "\n";

    for (auto v : sequence_S(seed.quiver, rounds)) mutate_in_place(seed, v);

    std::cout << "\nafter " << rounds << " rounds:\n";
    for (auto v : seed.quiver.vertices) {
        if (seed.quiver.frozen.count(v) || v.k < -4) continue;
        LoopPolynomial expect = kr_character(v.i, v.k - 2 * rounds, kr_index(v.k), rank);
        std::cout << "  (" << v.i << "," << v.k << ") = " << seed.variables.at(v).str()
                  << "\n    KR character match: "
                  << (seed.variables.at(v) == expect ? "yes" : "no") << "\n";
    }
    return 0;
}
