#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <vector>

#include "qaffine/loop.hpp"
#include "qaffine/snakes.hpp"

namespace qaffine {

/// A height sequence y_0..y_{l+1} with y_0 = i+k, y_{l+1} = l+1-i+k and unit
/// steps. Paths of this shape enumerate the loop-weights of the fundamental
/// snake at (i,k).
struct Path {
    int rank = 0;
    LatticePoint origin;
    std::vector<int> heights; // size rank + 2

    bool operator==(const Path&) const = default;
};

struct PathCorners {
    std::vector<LatticePoint> upper; // y_{a-1} = y_a + 1 = y_{a+1}
    std::vector<LatticePoint> lower; // y_{a-1} = y_a - 1 = y_{a+1}
};

inline PathCorners corners(const Path& p) {
    PathCorners c;
    for (int a = 1; a <= p.rank; ++a) {
        int y = p.heights[a];
        if (p.heights[a - 1] == y + 1 && p.heights[a + 1] == y + 1)
            c.upper.push_back({a, y});
        else if (p.heights[a - 1] == y - 1 && p.heights[a + 1] == y - 1)
            c.lower.push_back({a, y});
    }
    return c;
}

/// Y over upper corners times Y^-1 over lower corners.
inline LoopMonomial path_monomial(const Path& p) {
    LoopMonomial m = LoopMonomial::identity(p.rank);
    auto c = corners(p);
    for (auto pt : c.upper) m *= LoopMonomial::Y(pt.i, pt.k, p.rank);
    for (auto pt : c.lower) m *= LoopMonomial::Y(pt.i, pt.k, p.rank, -1);
    return m;
}

namespace detail {

inline void enumerate_heights(int rank, LatticePoint origin, std::vector<int>& ys,
                              std::vector<Path>& out) {
    int pos = static_cast<int>(ys.size()) - 1;
    int target = rank + 1 - origin.i + origin.k;
    int remaining = rank + 1 - pos;
    if (remaining == 0) {
        if (ys.back() == target) out.push_back({rank, origin, ys});
        return;
    }
    for (int step : {+1, -1}) {
        int y = ys.back() + step;
        if (std::abs(target - y) > remaining - 1) continue;
        ys.push_back(y);
        enumerate_heights(rank, origin, ys, out);
        ys.pop_back();
    }
}

struct PathSetKey {
    int i, k, rank;
    auto operator<=>(const PathSetKey&) const = default;
};

} // namespace detail

/// All paths with the fixed endpoints for (i,k); memoized, since the same
/// set recurs across snake points. Safe for concurrent readers.
inline const std::vector<Path>& enumerate_paths(int i, int k, int rank) {
    if (i < 1 || i > rank) throw std::invalid_argument("node index out of range");
    static std::map<detail::PathSetKey, std::vector<Path>> memo;
    static std::shared_mutex mutex;
    detail::PathSetKey key{i, k, rank};
    {
        std::shared_lock lock(mutex);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    std::vector<Path> paths;
    std::vector<int> ys = {i + k};
    detail::enumerate_heights(rank, {i, k}, ys, paths);
    std::unique_lock lock(mutex);
    return memo.try_emplace(key, std::move(paths)).first->second;
}

/// Lowering move at (a,b): defined when (a,b-1) is an upper corner (the
/// companion condition that (a,b+1) is not an upper corner holds
/// automatically in type A); shifts y_a up by 2, turning the upper corner
/// into the lower corner (a,b+1).
inline std::optional<Path> lower_move(const Path& p, LatticePoint at) {
    auto [a, b] = at;
    if (a < 1 || a > p.rank) return std::nullopt;
    if (p.heights[a] != b - 1 || p.heights[a - 1] != b || p.heights[a + 1] != b)
        return std::nullopt;
    Path r = p;
    r.heights[a] += 2;
    return r;
}

/// Raising move at (a,b): defined when (a,b+1) is a lower corner; shifts y_a
/// down by 2.
inline std::optional<Path> raise_move(const Path& p, LatticePoint at) {
    auto [a, b] = at;
    if (a < 1 || a > p.rank) return std::nullopt;
    if (p.heights[a] != b + 1 || p.heights[a - 1] != b || p.heights[a + 1] != b)
        return std::nullopt;
    Path r = p;
    r.heights[a] -= 2;
    return r;
}

/// p strictly above p': smaller height at every column.
inline bool strictly_above(const Path& a, const Path& b) {
    for (size_t x = 0; x < a.heights.size(); ++x)
        if (a.heights[x] >= b.heights[x]) return false;
    return true;
}

namespace detail {

// Depth-first product over the snake points. Non-overlap for the full tuple
// reduces to the adjacent constraint because column-wise strict inequality
// is transitive.
inline void tuple_sum(const Snake& s, size_t t, const Path* prev, const LoopMonomial& acc,
                      LoopPolynomial& out) {
    if (t == s.points.size()) {
        out.add_term(acc, 1);
        return;
    }
    auto [i, k] = s.points[t];
    for (const Path& p : enumerate_paths(i, k, s.rank)) {
        if (prev && !strictly_above(*prev, p)) continue;
        tuple_sum(s, t + 1, &p, acc * path_monomial(p), out);
    }
}

} // namespace detail

/// q-character of the snake module: the sum over non-overlapping path tuples
/// of the products of corner monomials. The empty snake gives the unit.
inline LoopPolynomial q_character(const Snake& s) {
    if (!is_snake(s.points, s.rank)) throw std::invalid_argument("not a snake");
    LoopPolynomial out(s.rank);
    detail::tuple_sum(s, 0, nullptr, LoopMonomial::identity(s.rank), out);
    return out;
}

} // namespace qaffine
