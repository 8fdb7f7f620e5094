#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qaffine/loop.hpp"

namespace qaffine {

/// A finite sequence of lattice points subject to the snake-position
/// constraints. The sequence order is the defining order; no reordering is
/// ever applied.
struct Snake {
    std::vector<LatticePoint> points;
    int rank = 0;

    size_t length() const { return points.size(); }
    bool empty() const { return points.empty(); }

    Snake dropping_first() const {
        return {std::vector<LatticePoint>(points.begin() + 1, points.end()), rank};
    }
    Snake dropping_last() const {
        return {std::vector<LatticePoint>(points.begin(), points.end() - 1), rank};
    }
    Snake dropping_both() const {
        if (points.size() < 2) throw std::invalid_argument("snake too short");
        return {std::vector<LatticePoint>(points.begin() + 1, points.end() - 1), rank};
    }

    LoopMonomial highest_weight() const {
        LoopMonomial m = LoopMonomial::identity(rank);
        for (auto p : points) m *= LoopMonomial::Y(p.i, p.k, rank);
        return m;
    }

    /// Comma-separated `i:k` pairs, e.g. `1:0,2:3,1:6`.
    std::string str() const {
        std::ostringstream os;
        for (size_t t = 0; t < points.size(); ++t) {
            if (t) os << ",";
            os << points[t].i << ":" << points[t].k;
        }
        return os.str();
    }

    bool operator==(const Snake&) const = default;
};

namespace detail {

inline void validate_points(const std::vector<LatticePoint>& pts, int rank) {
    for (auto p : pts)
        if (p.i < 1 || p.i > rank)
            throw std::invalid_argument("snake point node index out of range");
    // all points must live in one parity class
    if (!same_parity_class(pts))
        throw std::invalid_argument("snake points mix parity classes");
}

} // namespace detail

/// (i',k') is in snake position with respect to (i,k): k'-k >= |i'-i| + 2.
inline bool in_snake_position(LatticePoint a, LatticePoint b) {
    return b.k - a.k >= std::abs(b.i - a.i) + 2;
}

/// Equality with the lower bound of the snake-position window.
inline bool in_minimal_snake_position(LatticePoint a, LatticePoint b) {
    return b.k - a.k == std::abs(b.i - a.i) + 2;
}

/// min{i+i', 2l+2-i-i'} >= k'-k >= |i'-i| + 2.
inline bool in_prime_snake_position(LatticePoint a, LatticePoint b, int rank) {
    return in_snake_position(a, b) &&
           std::min(a.i + b.i, 2 * rank + 2 - a.i - b.i) >= b.k - a.k;
}

inline bool is_snake(const std::vector<LatticePoint>& pts, int rank) {
    detail::validate_points(pts, rank);
    for (size_t t = 1; t < pts.size(); ++t)
        if (!in_snake_position(pts[t - 1], pts[t])) return false;
    return true;
}

inline bool is_minimal_snake(const std::vector<LatticePoint>& pts, int rank) {
    detail::validate_points(pts, rank);
    for (size_t t = 1; t < pts.size(); ++t)
        if (!in_minimal_snake_position(pts[t - 1], pts[t])) return false;
    return true;
}

inline bool is_prime_snake(const std::vector<LatticePoint>& pts, int rank) {
    detail::validate_points(pts, rank);
    for (size_t t = 1; t < pts.size(); ++t)
        if (!in_prime_snake_position(pts[t - 1], pts[t], rank)) return false;
    return true;
}

inline Snake make_snake(std::vector<LatticePoint> pts, int rank) {
    if (!is_snake(pts, rank)) throw std::invalid_argument("not a snake");
    return {std::move(pts), rank};
}

/// Highest loop-weight of the Kirillov-Reshetikhin module of length r at
/// node i with spectral exponent k: Y[i,k] Y[i,k+2] ... Y[i,k+2r-2].
inline LoopMonomial kr_highest_weight(int i, int k, int r, int rank) {
    if (i < 1 || i > rank) throw std::invalid_argument("node index out of range");
    if (r < 0) throw std::invalid_argument("negative string length");
    LoopMonomial m = LoopMonomial::identity(rank);
    for (int t = 0; t < r; ++t) m *= LoopMonomial::Y(i, k + 2 * t, rank);
    return m;
}

/// The straight-line snake ((i,k),(i,k+2),...,(i,k+2r-2)).
inline Snake snake_of_kr(int i, int k, int r, int rank) {
    if (i < 1 || i > rank) throw std::invalid_argument("node index out of range");
    std::vector<LatticePoint> pts;
    pts.reserve(r);
    for (int t = 0; t < r; ++t) pts.push_back({i, k + 2 * t});
    return {std::move(pts), rank};
}

namespace detail {

inline LatticePoint half_point(int num_i, int num_k) {
    // the case inequalities guarantee integrality; a failure here is a bug
    if (num_i % 2 != 0 || num_k % 2 != 0)
        throw std::logic_error("neighbouring point is not a lattice point");
    return {num_i / 2, num_k / 2};
}

} // namespace detail

/// Neighbouring snakes of a prime snake of length >= 2: for each consecutive
/// pair, the first snake collects the point
/// ((i+k+i'-k')/2, (i+k-i'+k')/2) when k+i > k'-i' (nothing when equal), and
/// the second collects ((i'+k'+i-k)/2, (i'+k'-i+k)/2) when
/// k+l+1-i > k'-l-1+i' (nothing when equal). Pair order is preserved.
inline std::pair<Snake, Snake> neighbouring_snakes(const Snake& s, int rank) {
    if (s.length() < 2) throw std::invalid_argument("snake too short");
    if (!is_prime_snake(s.points, rank)) throw std::invalid_argument("snake is not prime");
    std::vector<LatticePoint> xs, ys;
    for (size_t t = 1; t < s.points.size(); ++t) {
        auto [i, k] = s.points[t - 1];
        auto [i2, k2] = s.points[t];
        if (k + i > k2 - i2)
            xs.push_back(detail::half_point(i + k + i2 - k2, i + k - i2 + k2));
        else if (k + i != k2 - i2)
            throw std::logic_error("prime snake violates the first case split");
        if (k + rank + 1 - i > k2 - rank - 1 + i2)
            ys.push_back(detail::half_point(i2 + k2 + i - k, i2 + k2 - i + k));
        else if (k + rank + 1 - i != k2 - rank - 1 + i2)
            throw std::logic_error("prime snake violates the second case split");
    }
    return {Snake{std::move(xs), rank}, Snake{std::move(ys), rank}};
}

/// Parses the CLI snake grammar `i:k,i:k,...`.
inline std::vector<LatticePoint> parse_points(const std::string& text) {
    std::vector<LatticePoint> pts;
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("expected i:k in snake text");
        pts.push_back({std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1))});
    }
    return pts;
}

} // namespace qaffine
