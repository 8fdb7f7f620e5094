#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "qaffine/loop.hpp"
#include "qaffine/paths.hpp"
#include "qaffine/snakes.hpp"

namespace qaffine {

/// Quiver on lattice-point vertices with arrow multiplicities and a frozen
/// subset. No loops, no 2-cycles.
struct Quiver {
    int rank = 0;
    std::set<LatticePoint> vertices;
    std::map<std::pair<LatticePoint, LatticePoint>, int> arrows; // multiplicity >= 1
    std::set<LatticePoint> frozen;

    bool has_arrow(LatticePoint a, LatticePoint b) const {
        return arrows.count({a, b}) > 0;
    }

    bool well_formed() const {
        for (const auto& [e, m] : arrows) {
            if (m <= 0) return false;
            if (e.first == e.second) return false;               // loop
            if (arrows.count({e.second, e.first})) return false; // 2-cycle
            if (!vertices.count(e.first) || !vertices.count(e.second)) return false;
        }
        return true;
    }

    /// Arrows with both endpoints mutable, for shape comparisons.
    std::map<std::pair<LatticePoint, LatticePoint>, int> mutable_arrows() const {
        std::map<std::pair<LatticePoint, LatticePoint>, int> out;
        for (const auto& [e, m] : arrows)
            if (!frozen.count(e.first) && !frozen.count(e.second)) out.emplace(e, m);
        return out;
    }
};

struct Seed {
    Quiver quiver;
    std::map<LatticePoint, LoopPolynomial> variables;
};

struct MutationError : std::runtime_error {
    LatticePoint vertex;
    explicit MutationError(LatticePoint v)
        : std::runtime_error("exchange relation not divisible at vertex (" +
                             std::to_string(v.i) + "," + std::to_string(v.k) + ")"),
          vertex(v) {}
};

/// Truncation of the infinite quiver on the nonpositive levels of one parity
/// class (the component through (1,-1)): vertices (i,k) with i-k even and
/// -2*depth <= k <= 0, arrows (i,k)->(i,k+2) and (i,k)->(i+-1,k-1). Every
/// vertex within graph distance 2 of the truncation floor is frozen.
inline Quiver build_gminus(int rank, int depth) {
    if (rank < 1) throw std::invalid_argument("rank must be positive");
    if (depth < 4) throw std::invalid_argument("depth must be at least 4");
    Quiver g;
    g.rank = rank;
    const int floor_level = -2 * depth;
    for (int i = 1; i <= rank; ++i)
        for (int k = -(i % 2); k >= floor_level; k -= 2) g.vertices.insert({i, k});

    // boundary vertices miss an arrow of the untruncated quiver
    std::set<LatticePoint> boundary;
    auto link = [&](LatticePoint a, LatticePoint b) {
        if (b.k > 0 || b.i < 1 || b.i > rank) return; // not a vertex at all
        if (b.k < floor_level) {
            boundary.insert(a);
            return;
        }
        g.arrows[{a, b}] = 1;
    };
    for (auto v : g.vertices) {
        link(v, {v.i, v.k + 2});
        link(v, {v.i - 1, v.k - 1});
        link(v, {v.i + 1, v.k - 1});
        if (v.k - 2 < floor_level) boundary.insert(v); // missing in-arrow from below
    }

    // two undirected layers around the boundary
    std::map<LatticePoint, std::vector<LatticePoint>> adj;
    for (const auto& [e, m] : g.arrows) {
        adj[e.first].push_back(e.second);
        adj[e.second].push_back(e.first);
    }
    std::map<LatticePoint, int> dist;
    std::deque<LatticePoint> queue;
    for (auto v : boundary) {
        dist[v] = 0;
        queue.push_back(v);
    }
    while (!queue.empty()) {
        LatticePoint v = queue.front();
        queue.pop_front();
        if (dist[v] >= 2) continue;
        for (auto w : adj[v])
            if (!dist.count(w)) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    for (const auto& [v, d] : dist) g.frozen.insert(v);
    return g;
}

/// k_{i,r}: string length of the module attached to level r, from
/// 0 < 2k - |r| <= 2.
inline int kr_index(int r) { return std::abs(r) / 2 + 1; }

/// Initial cluster variables: vertex (i,r) carries the one-term polynomial
/// Y[i,r] Y[i,r+2] ... up to level 0.
inline std::map<LatticePoint, LoopPolynomial> initial_variables(const Quiver& g) {
    std::map<LatticePoint, LoopPolynomial> vars;
    for (auto v : g.vertices)
        vars.emplace(v, LoopPolynomial::from_monomial(
                            kr_highest_weight(v.i, v.k, kr_index(v.k), g.rank)));
    return vars;
}

inline Seed initial_seed(int rank, int depth) {
    Seed s;
    s.quiver = build_gminus(rank, depth);
    s.variables = initial_variables(s.quiver);
    return s;
}

namespace detail {

struct IncidentEdges {
    std::vector<std::pair<LatticePoint, int>> in, out;
};

inline IncidentEdges incident_edges(const Quiver& g, LatticePoint v) {
    IncidentEdges e;
    for (const auto& [edge, m] : g.arrows) {
        if (edge.second == v) e.in.emplace_back(edge.first, m);
        if (edge.first == v) e.out.emplace_back(edge.second, m);
    }
    return e;
}

/// The three rewrite rules at v. Arrows that would connect two frozen
/// vertices are not tracked.
inline void rewrite_quiver(Quiver& g, LatticePoint v, const IncidentEdges& e) {
    auto& arrows = g.arrows;
    for (const auto& [u, a] : e.in)
        for (const auto& [w, b] : e.out) {
            if (g.frozen.count(u) && g.frozen.count(w)) continue;
            arrows[{u, w}] += a * b;
        }
    for (const auto& [u, a] : e.in) {
        arrows.erase({u, v});
        arrows[{v, u}] += a;
    }
    for (const auto& [w, b] : e.out) {
        arrows.erase({v, w});
        arrows[{w, v}] += b;
    }
    for (auto& [edge, m] : arrows) {
        if (!(edge.first < edge.second)) continue;
        auto rev = arrows.find({edge.second, edge.first});
        if (rev != arrows.end()) {
            int c = std::min(m, rev->second);
            m -= c;
            rev->second -= c;
        }
    }
    for (auto it = arrows.begin(); it != arrows.end();)
        it = (it->second == 0) ? arrows.erase(it) : std::next(it);
}

} // namespace detail

/// Seed mutation at a mutable vertex: the exchange relation
///   y' = (prod over arrows into v + prod over arrows out of v) / y
/// with exact polynomial division, then the quiver rewrite. Throws
/// MutationError, before any state change, when the division is inexact.
inline void mutate_in_place(Seed& seed, LatticePoint v) {
    const Quiver& g = seed.quiver;
    if (!g.vertices.count(v)) throw std::invalid_argument("vertex not in quiver");
    if (g.frozen.count(v)) throw std::invalid_argument("cannot mutate a frozen vertex");

    auto edges = detail::incident_edges(g, v);
    LoopPolynomial in_product = LoopPolynomial::unit(g.rank);
    LoopPolynomial out_product = LoopPolynomial::unit(g.rank);
    for (const auto& [u, m] : edges.in)
        for (int t = 0; t < m; ++t) in_product *= seed.variables.at(u);
    for (const auto& [w, m] : edges.out)
        for (int t = 0; t < m; ++t) out_product *= seed.variables.at(w);

    auto quotient = exact_divide(in_product + out_product, seed.variables.at(v));
    if (!quotient) throw MutationError(v);

    seed.variables.at(v) = std::move(*quotient);
    detail::rewrite_quiver(seed.quiver, v, edges);
}

inline Seed mutate(const Seed& seed, LatticePoint v) {
    Seed out = seed;
    mutate_in_place(out, v);
    return out;
}

/// The column order of one mutation round: repeatedly pick the column whose
/// running label is maximal (ties to the smaller node index), then drop that
/// label by 2. Each round picks every column once.
class ColumnSequencer {
public:
    explicit ColumnSequencer(int rank) : rank_(rank), labels_(rank + 1) {
        for (int i = 1; i <= rank_; ++i) labels_[i] = -(i % 2);
    }

    std::vector<int> next_round() {
        std::vector<int> order;
        for (int step = 0; step < rank_; ++step) {
            int best = 1;
            for (int i = 2; i <= rank_; ++i)
                if (labels_[i] > labels_[best]) best = i;
            order.push_back(best);
            labels_[best] -= 2;
        }
        return order;
    }

private:
    int rank_;
    std::vector<int> labels_;
};

/// Mutable vertices of `rounds` full rounds, column by column in automaton
/// order, top to bottom inside each column.
inline std::vector<LatticePoint> sequence_S(const Quiver& g, int rounds) {
    if (rounds < 1) throw std::invalid_argument("rounds must be positive");
    std::map<int, std::vector<LatticePoint>> columns;
    for (auto v : g.vertices)
        if (!g.frozen.count(v)) columns[v.i].push_back(v);
    for (auto& [i, col] : columns)
        std::sort(col.begin(), col.end(),
                  [](LatticePoint a, LatticePoint b) { return a.k > b.k; });
    ColumnSequencer seq(g.rank);
    std::vector<LatticePoint> out;
    for (int round = 0; round < rounds; ++round)
        for (int c : seq.next_round())
            for (auto v : columns[c]) out.push_back(v);
    return out;
}

inline std::vector<LatticePoint> sequence_S(int rank, int depth, int rounds) {
    return sequence_S(build_gminus(rank, depth), rounds);
}

// ---------------------------------------------------------------------------
// Modular fingerprints. The doubled-depth stability run replays the same
// mutation arithmetic in F_p, which detects value changes without expanding
// polynomials.

namespace fp {

constexpr uint64_t P = 2305843009213693951ull; // 2^61 - 1

inline uint64_t mul(uint64_t a, uint64_t b) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % P);
}

inline uint64_t add(uint64_t a, uint64_t b) { return (a + b) % P; }

inline uint64_t power(uint64_t a, uint64_t e) {
    uint64_t r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

inline uint64_t inverse(uint64_t a) { return power(a, P - 2); }

inline uint64_t splitmix(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

/// Deterministic nonzero value assigned to Y[i,k].
inline uint64_t y_value(int i, int k) {
    uint64_t h = splitmix(static_cast<uint64_t>(static_cast<uint32_t>(i)) * 0x1f123bb5ull +
                          static_cast<uint64_t>(static_cast<uint32_t>(k)) * 0x5bd1e995ull);
    h %= P;
    return h == 0 ? 1 : h;
}

inline uint64_t eval_monomial(const LoopMonomial& m) {
    uint64_t r = 1;
    for (const auto& en : m.entries()) {
        uint64_t base = y_value(en.i, en.k);
        uint64_t p = en.e >= 0 ? power(base, static_cast<uint64_t>(en.e))
                               : inverse(power(base, static_cast<uint64_t>(-en.e)));
        r = mul(r, p);
    }
    return r;
}

inline uint64_t eval_polynomial(const LoopPolynomial& p) {
    uint64_t r = 0;
    for (const auto& [m, c] : p.terms()) {
        Int cc = c % Int(P);
        if (cc < 0) cc += Int(P);
        r = add(r, mul(cc.convert_to<uint64_t>(), eval_monomial(m)));
    }
    return r;
}

struct Value {
    uint64_t v = 0;
    bool known = true;
};

/// Replays the mutation sequence with values in F_p. Division by a vanishing
/// value marks the vertex unknown; unknowns propagate.
inline std::map<LatticePoint, Value> run(const Quiver& g0, int rounds) {
    std::map<LatticePoint, Value> val;
    for (auto v : g0.vertices)
        val[v] = {eval_monomial(kr_highest_weight(v.i, v.k, kr_index(v.k), g0.rank)), true};
    Quiver g = g0;
    for (auto v : sequence_S(g0, rounds)) {
        auto edges = detail::incident_edges(g, v);
        Value in{1, true}, out{1, true};
        for (const auto& [u, m] : edges.in) {
            in.known &= val[u].known;
            in.v = mul(in.v, power(val[u].v, static_cast<uint64_t>(m)));
        }
        for (const auto& [w, m] : edges.out) {
            out.known &= val[w].known;
            out.v = mul(out.v, power(val[w].v, static_cast<uint64_t>(m)));
        }
        Value& cur = val[v];
        if (!in.known || !out.known || !cur.known || cur.v == 0)
            cur.known = false;
        else
            cur.v = mul(add(in.v, out.v), inverse(cur.v));
        detail::rewrite_quiver(g, v, edges);
    }
    return val;
}

} // namespace fp

struct KrVertexReport {
    LatticePoint vertex;
    int kr_length = 0;
    bool frozen = false;
    bool stable = false;          // value unchanged when the depth is doubled
    bool stable_interior = false; // stable, and so is every quiver neighbour
    bool checked = false;         // oracle comparison performed
    bool pass = false;            // oracle equality
    bool shape_restored = true;   // incident mutable arrows back to the initial pattern
};

struct KrReport {
    int rank = 0, depth = 0, rounds = 0;
    std::vector<KrVertexReport> vertices;
    std::vector<LatticePoint> division_failures;
    Seed seed_after;

    size_t stable_mutable() const {
        size_t n = 0;
        for (const auto& r : vertices) n += (r.stable && !r.frozen);
        return n;
    }
    bool all_checked_pass() const {
        bool any = false;
        for (const auto& r : vertices) {
            if (r.checked && !r.pass) return false;
            any |= r.checked;
        }
        return any;
    }
    /// Arrow-pattern restoration can lag the value-stable region by one
    /// layer at the truncation side, so it is asserted on the eroded region.
    bool shape_restored_on_stable_interior() const {
        for (const auto& r : vertices)
            if (r.stable_interior && !r.frozen && !r.shape_restored) return false;
        return true;
    }
};

/// Runs `rounds` full mutation rounds symbolically at the given depth and
/// compares every depth-stable mutable vertex against the oracle character
/// of the matching Kirillov-Reshetikhin snake. Stability is decided by
/// replaying at doubled depth and comparing modular fingerprints of the
/// values. A division failure at a vertex that still classifies as stable is
/// a contamination error.
inline KrReport verify_kr_correspondence(int rank, int depth, int rounds) {
    KrReport report;
    report.rank = rank;
    report.depth = depth;
    report.rounds = rounds;

    Seed seed = initial_seed(rank, depth);
    const Quiver g0 = seed.quiver;
    auto schedule = sequence_S(g0, rounds);

    std::set<LatticePoint> failed;
    std::map<LatticePoint, bool> restored;
    for (auto v : g0.vertices) restored[v] = true;

    auto incident_pattern = [](const Quiver& g, LatticePoint v) {
        std::map<std::pair<LatticePoint, LatticePoint>, int> out;
        for (const auto& [e, m] : g.mutable_arrows())
            if (e.first == v || e.second == v) out.emplace(e, m);
        return out;
    };
    std::map<LatticePoint, std::map<std::pair<LatticePoint, LatticePoint>, int>> pattern0;
    for (auto v : g0.vertices) pattern0[v] = incident_pattern(g0, v);

    const size_t per_round = schedule.size() / static_cast<size_t>(rounds);
    for (size_t idx = 0; idx < schedule.size(); ++idx) {
        LatticePoint v = schedule[idx];
        try {
            mutate_in_place(seed, v);
        } catch (const MutationError&) {
            failed.insert(v);
            report.division_failures.push_back(v);
        }
        if ((idx + 1) % per_round == 0)
            for (auto w : g0.vertices)
                if (pattern0[w] != incident_pattern(seed.quiver, w)) restored[w] = false;
    }

    auto fp_deep = fp::run(build_gminus(rank, 2 * depth), rounds);

    std::map<LatticePoint, bool> stable;
    for (auto v : g0.vertices) {
        uint64_t here = fp::eval_polynomial(seed.variables.at(v));
        auto deep = fp_deep.find(v);
        bool agrees = deep != fp_deep.end() && deep->second.known && deep->second.v == here;
        if (agrees && failed.count(v)) throw MutationError(v); // contamination in stable region
        stable[v] = agrees;
    }
    std::map<LatticePoint, std::vector<LatticePoint>> neighbours;
    for (const auto& [e, m] : g0.arrows) {
        neighbours[e.first].push_back(e.second);
        neighbours[e.second].push_back(e.first);
    }

    for (auto v : g0.vertices) {
        KrVertexReport r;
        r.vertex = v;
        r.kr_length = kr_index(v.k);
        r.frozen = g0.frozen.count(v) > 0;
        r.stable = stable[v];
        r.stable_interior = r.stable;
        for (auto w : neighbours[v]) r.stable_interior &= stable[w];
        r.shape_restored = restored[v];
        if (r.stable && !r.frozen) {
            r.checked = true;
            Snake kr = snake_of_kr(v.i, v.k - 2 * rounds, kr_index(v.k), rank);
            r.pass = seed.variables.at(v) == q_character(kr);
        }
        report.vertices.push_back(r);
    }
    report.seed_after = std::move(seed);
    return report;
}

} // namespace qaffine
