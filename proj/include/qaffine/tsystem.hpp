#pragma once

#include "qaffine/paths.hpp"
#include "qaffine/snakes.hpp"

namespace qaffine {

/// Character of the Kirillov-Reshetikhin module of string length r starting
/// at level k; the length-0 module is the unit class.
inline LoopPolynomial kr_character(int i, int k, int r, int rank) {
    if (r == 0) return LoopPolynomial::unit(rank);
    return q_character(snake_of_kr(i, k, r, rank));
}

/// Both sides of the Grothendieck-ring relation
///   [W_i^{(r)}(k)] [W_i^{(r)}(k+2)] =
///   [W_i^{(r+1)}(k)] [W_i^{(r-1)}(k+2)] + prod_{|j-i|=1} [W_j^{(r)}(k+1)],
/// evaluated through the path-formula characters.
inline std::pair<LoopPolynomial, LoopPolynomial> t_system_sides(int i, int k, int r, int rank) {
    LoopPolynomial lhs = kr_character(i, k, r, rank) * kr_character(i, k + 2, r, rank);
    LoopPolynomial neighbours = LoopPolynomial::unit(rank);
    if (i > 1) neighbours *= kr_character(i - 1, k + 1, r, rank);
    if (i < rank) neighbours *= kr_character(i + 1, k + 1, r, rank);
    LoopPolynomial rhs = kr_character(i, k, r + 1, rank) * kr_character(i, k + 2, r - 1, rank) +
                         neighbours;
    return {lhs, rhs};
}

inline bool verify_t_system(int i, int k, int r, int rank) {
    if (i < 1 || i > rank) throw std::invalid_argument("node index out of range");
    if (r < 1) throw std::invalid_argument("string length must be positive");
    auto [lhs, rhs] = t_system_sides(i, k, r, rank);
    return lhs == rhs;
}

/// Character of a possibly empty snake; the empty snake is the unit class.
inline LoopPolynomial snake_character(const Snake& s) {
    if (s.empty()) return LoopPolynomial::unit(s.rank);
    return q_character(s);
}

/// Exact check of the extended relation for a prime snake of length >= 2:
///   chi(drop last) chi(drop first) =
///   chi(drop both) chi(full) + chi(first neighbour) chi(second neighbour).
inline bool verify_extended_t_system(const Snake& s, int rank) {
    if (s.length() < 2) throw std::invalid_argument("snake too short");
    if (!is_prime_snake(s.points, rank)) throw std::invalid_argument("snake is not prime");
    auto [xs, ys] = neighbouring_snakes(s, rank);
    LoopPolynomial lhs = snake_character(s.dropping_last()) * snake_character(s.dropping_first());
    LoopPolynomial rhs = snake_character(s.dropping_both()) * snake_character(s) +
                         snake_character(xs) * snake_character(ys);
    return lhs == rhs;
}

/// The tridiagonal determinant with diagonal [W^{(1)}(k)], [W^{(1)}(k+2)],
/// ..., off-diagonal entries 1, expanded over the polynomial ring; equals the
/// length-r KR character of rank 1.
inline LoopPolynomial kr_determinant_sl2(int r, int k) {
    if (r < 1) throw std::invalid_argument("determinant size must be positive");
    // D_n(k) = chi(W1(k)) D_{n-1}(k+2) - D_{n-2}(k+4), expanded iteratively
    // from the bottom of the band.
    LoopPolynomial two_back = LoopPolynomial::unit(1); // D_0
    LoopPolynomial one_back = kr_character(1, k + 2 * (r - 1), 1, 1); // D_1 of the last entry
    for (int n = 2; n <= r; ++n) {
        LoopPolynomial cur =
            kr_character(1, k + 2 * (r - n), 1, 1) * one_back - two_back;
        two_back = std::move(one_back);
        one_back = std::move(cur);
    }
    return one_back;
}

} // namespace qaffine
