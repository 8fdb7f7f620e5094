#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "qaffine/bigint.hpp"

namespace qaffine {

/// A point (i, k): node index i in 1..l and integer spectral exponent k.
struct LatticePoint {
    int i = 0;
    int k = 0;
    auto operator<=>(const LatticePoint&) const = default;
};

/// The even parity class: i - k = 0 (mod 2).
inline bool in_class_X(LatticePoint p) { return ((p.i - p.k) % 2 + 2) % 2 == 0; }

/// The shifted class: (i, k-1) in X, i.e. i - k odd.
inline bool in_class_W(LatticePoint p) { return !in_class_X(p); }

/// True when all points lie in a single parity class (either one).
inline bool same_parity_class(const std::vector<LatticePoint>& pts) {
    for (size_t t = 1; t < pts.size(); ++t)
        if (in_class_X(pts[t]) != in_class_X(pts[0])) return false;
    return true;
}

/// Integer vector in the basis of fundamental weights.
using WeightVector = std::vector<long long>;

inline WeightVector weight_add(WeightVector a, const WeightVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("weight rank mismatch");
    for (size_t j = 0; j < a.size(); ++j) a[j] += b[j];
    return a;
}

/// Laurent monomial in the fundamental loop-weights Y[i,k]. Exponents are
/// stored sparsely, sorted by (i, k), and never zero.
class LoopMonomial {
public:
    struct Entry {
        int32_t i;
        int32_t k;
        int32_t e;
        bool operator==(const Entry&) const = default;
    };

    explicit LoopMonomial(int rank) : rank_(rank) { rehash(); }

    LoopMonomial(int rank, std::vector<Entry> entries) : rank_(rank), e_(std::move(entries)) {
        normalize();
    }

    static LoopMonomial identity(int rank) { return LoopMonomial(rank); }

    static LoopMonomial Y(int i, int k, int rank, int e = 1) {
        if (i < 1 || i > rank) throw std::invalid_argument("node index out of range");
        LoopMonomial m(rank);
        if (e != 0) {
            m.e_.push_back({static_cast<int32_t>(i), static_cast<int32_t>(k),
                            static_cast<int32_t>(e)});
            m.rehash();
        }
        return m;
    }

    int rank() const { return rank_; }
    bool is_identity() const { return e_.empty(); }
    const std::vector<Entry>& entries() const { return e_; }
    size_t hash() const { return hash_; }

    int exponent(LatticePoint p) const {
        for (const auto& en : e_)
            if (en.i == p.i && en.k == p.k) return en.e;
        return 0;
    }

    /// All stored exponents positive. The identity is dominant.
    bool is_dominant() const {
        for (const auto& en : e_)
            if (en.e < 0) return false;
        return true;
    }

    /// All stored exponents negative. The identity is anti-dominant.
    bool is_antidominant() const {
        for (const auto& en : e_)
            if (en.e > 0) return false;
        return true;
    }

    friend LoopMonomial operator*(const LoopMonomial& a, const LoopMonomial& b) {
        if (a.rank_ != b.rank_) throw std::invalid_argument("monomial rank mismatch");
        LoopMonomial r(a.rank_);
        r.e_.reserve(a.e_.size() + b.e_.size());
        auto ia = a.e_.begin(), ea = a.e_.end();
        auto ib = b.e_.begin(), eb = b.e_.end();
        while (ia != ea && ib != eb) {
            if (key(*ia) < key(*ib)) {
                r.e_.push_back(*ia++);
            } else if (key(*ib) < key(*ia)) {
                r.e_.push_back(*ib++);
            } else {
                int32_t e = ia->e + ib->e;
                if (e != 0) r.e_.push_back({ia->i, ia->k, e});
                ++ia;
                ++ib;
            }
        }
        r.e_.insert(r.e_.end(), ia, ea);
        r.e_.insert(r.e_.end(), ib, eb);
        r.rehash();
        return r;
    }

    LoopMonomial& operator*=(const LoopMonomial& o) { return *this = *this * o; }

    LoopMonomial inverse() const {
        LoopMonomial r(*this);
        for (auto& en : r.e_) en.e = -en.e;
        r.rehash();
        return r;
    }

    LoopMonomial pow(int n) const {
        if (n == 0) return identity(rank_);
        LoopMonomial r(*this);
        for (auto& en : r.e_) en.e = static_cast<int32_t>(en.e * n);
        r.rehash();
        return r;
    }

    bool operator==(const LoopMonomial& o) const {
        return rank_ == o.rank_ && hash_ == o.hash_ && e_ == o.e_;
    }
    bool operator!=(const LoopMonomial& o) const { return !(*this == o); }

    /// Exponent-vector comparison, lexicographic over points ordered by
    /// (i, k); absent points count as exponent zero. Compatible with
    /// multiplication, which makes it usable as a division order.
    static int exponent_lex_cmp(const LoopMonomial& a, const LoopMonomial& b) {
        auto ia = a.e_.begin(), ea = a.e_.end();
        auto ib = b.e_.begin(), eb = b.e_.end();
        while (ia != ea || ib != eb) {
            if (ib == eb || (ia != ea && key(*ia) < key(*ib))) {
                return ia->e < 0 ? -1 : 1;
            } else if (ia == ea || key(*ib) < key(*ia)) {
                return 0 < ib->e ? -1 : 1;
            } else {
                if (ia->e != ib->e) return ia->e < ib->e ? -1 : 1;
                ++ia;
                ++ib;
            }
        }
        return 0;
    }

    /// Order used for canonical text output: factor sequences compared
    /// lexicographically by (i, k, e).
    static bool text_order_less(const LoopMonomial& a, const LoopMonomial& b) {
        return std::lexicographical_compare(
            a.e_.begin(), a.e_.end(), b.e_.begin(), b.e_.end(),
            [](const Entry& x, const Entry& y) {
                return std::tie(x.i, x.k, x.e) < std::tie(y.i, y.k, y.e);
            });
    }

    /// `Y[i,k]^e` factors joined by `*`; exponent suffix omitted when e = 1;
    /// the identity renders as `1`.
    std::string str() const {
        if (e_.empty()) return "1";
        std::ostringstream os;
        bool first = true;
        for (const auto& en : e_) {
            if (!first) os << "*";
            first = false;
            os << "Y[" << en.i << "," << en.k << "]";
            if (en.e != 1) os << "^" << en.e;
        }
        return os.str();
    }

private:
    static uint64_t key(const Entry& en) {
        // sign-bit flip keeps the unsigned order equal to the signed (i, k) order
        return (static_cast<uint64_t>(static_cast<uint32_t>(en.i)) << 32) |
               (static_cast<uint32_t>(en.k) ^ 0x80000000u);
    }

    void normalize() {
        std::sort(e_.begin(), e_.end(),
                  [](const Entry& a, const Entry& b) { return key(a) < key(b); });
        std::vector<Entry> out;
        out.reserve(e_.size());
        for (const auto& en : e_) {
            if (!out.empty() && out.back().i == en.i && out.back().k == en.k) {
                out.back().e += en.e;
                if (out.back().e == 0) out.pop_back();
            } else if (en.e != 0) {
                out.push_back(en);
            } else {
                // drop zero exponents
            }
        }
        e_ = std::move(out);
        rehash();
    }

    void rehash() {
        uint64_t h = 1469598103934665603ull ^ static_cast<uint64_t>(rank_);
        for (const auto& en : e_) {
            for (uint64_t v : {static_cast<uint64_t>(static_cast<uint32_t>(en.i)),
                               static_cast<uint64_t>(static_cast<uint32_t>(en.k)),
                               static_cast<uint64_t>(static_cast<uint32_t>(en.e))}) {
                h ^= v + 0x9e3779b97f4a7c15ull;
                h *= 1099511628211ull;
            }
        }
        hash_ = static_cast<size_t>(h);
    }

    int rank_;
    std::vector<Entry> e_;
    size_t hash_ = 0;
};

struct LoopMonomialHash {
    size_t operator()(const LoopMonomial& m) const { return m.hash(); }
};

struct LoopMonomialExponentLess {
    bool operator()(const LoopMonomial& a, const LoopMonomial& b) const {
        return LoopMonomial::exponent_lex_cmp(a, b) < 0;
    }
};

/// The affine simple root A[i,k] = Y[i,k+1] Y[i,k-1] prod_{|j-i|=1} Y[j,k]^-1
/// (type A is simply laced).
inline LoopMonomial affine_root(int i, int k, int rank) {
    if (i < 1 || i > rank) throw std::invalid_argument("affine_root: node out of range");
    LoopMonomial m = LoopMonomial::Y(i, k + 1, rank) * LoopMonomial::Y(i, k - 1, rank);
    if (i > 1) m *= LoopMonomial::Y(i - 1, k, rank, -1);
    if (i < rank) m *= LoopMonomial::Y(i + 1, k, rank, -1);
    return m;
}

/// Group homomorphism Y[i,k] -> omega_i.
inline WeightVector wt(const LoopMonomial& m) {
    WeightVector v(m.rank(), 0);
    for (const auto& en : m.entries()) v[en.i - 1] += en.e;
    return v;
}

/// Solves m = reference * prod A[j,s]^{c_{j,s}} for the exponents c, greedily
/// by descending spectral level: the top-level Y factor of the quotient is
/// forced to come from the root one level below it. Returns the exponent map,
/// or nothing when no solution exists.
inline std::optional<std::map<LatticePoint, long long>>
factor_into_roots(const LoopMonomial& m, const LoopMonomial& reference) {
    if (m.rank() != reference.rank())
        throw std::invalid_argument("factor_into_roots: rank mismatch");
    const int rank = m.rank();
    LoopMonomial d = m * reference.inverse();
    std::map<LatticePoint, long long> result;
    if (d.is_identity()) return result;

    int kmin = d.entries().front().k;
    for (const auto& en : d.entries()) kmin = std::min(kmin, static_cast<int>(en.k));

    while (!d.is_identity()) {
        int level = d.entries().front().k;
        for (const auto& en : d.entries()) level = std::max(level, static_cast<int>(en.k));
        if (level - 1 < kmin + 1) return std::nullopt;
        // collect the exponents at the top level, then strip them in one pass
        std::vector<std::pair<int, int>> top; // (i, exponent)
        for (const auto& en : d.entries())
            if (en.k == level) top.emplace_back(en.i, en.e);
        for (auto [i, e] : top) {
            result[{i, level - 1}] += e;
            d *= affine_root(i, level - 1, rank).pow(-e);
        }
    }
    for (auto it = result.begin(); it != result.end();)
        it = (it->second == 0) ? result.erase(it) : std::next(it);
    return result;
}

/// Integer-coefficient Laurent polynomial in the Y[i,k]; the value type of
/// q-characters and of Grothendieck-ring products. Canonical: no zero
/// coefficients stored.
class LoopPolynomial {
public:
    using TermMap = std::unordered_map<LoopMonomial, Int, LoopMonomialHash>;

    explicit LoopPolynomial(int rank) : rank_(rank) {}

    static LoopPolynomial unit(int rank) {
        LoopPolynomial p(rank);
        p.terms_.emplace(LoopMonomial::identity(rank), 1);
        return p;
    }

    static LoopPolynomial from_monomial(const LoopMonomial& m, Int c = 1) {
        LoopPolynomial p(m.rank());
        if (c != 0) p.terms_.emplace(m, std::move(c));
        return p;
    }

    int rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Int coefficient(const LoopMonomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Int(0) : it->second;
    }

    void add_term(const LoopMonomial& m, const Int& c) {
        if (c == 0) return;
        if (m.rank() != rank_) throw std::invalid_argument("polynomial rank mismatch");
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LoopPolynomial& operator+=(const LoopPolynomial& o) {
        check_rank(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }

    LoopPolynomial& operator-=(const LoopPolynomial& o) {
        check_rank(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend LoopPolynomial operator+(LoopPolynomial a, const LoopPolynomial& b) { return a += b; }
    friend LoopPolynomial operator-(LoopPolynomial a, const LoopPolynomial& b) { return a -= b; }

    LoopPolynomial operator-() const {
        LoopPolynomial r(rank_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, Int(-c));
        return r;
    }

    friend LoopPolynomial operator*(const LoopPolynomial& a, const LoopPolynomial& b) {
        a.check_rank(b);
        LoopPolynomial r(a.rank_);
        const LoopPolynomial& small = a.term_count() <= b.term_count() ? a : b;
        const LoopPolynomial& large = a.term_count() <= b.term_count() ? b : a;
        r.terms_.reserve(large.term_count() + large.term_count() / 2);
        for (const auto& [ms, cs] : small.terms_)
            for (const auto& [ml, cl] : large.terms_) r.add_term(ms * ml, cs * cl);
        return r;
    }

    LoopPolynomial& operator*=(const LoopPolynomial& o) { return *this = *this * o; }

    LoopPolynomial times_monomial(const LoopMonomial& m, const Int& c = 1) const {
        LoopPolynomial r(rank_);
        r.terms_.reserve(terms_.size());
        for (const auto& [mm, cc] : terms_) {
            Int nc = cc * c;
            if (nc != 0) r.terms_.emplace(mm * m, std::move(nc));
        }
        return r;
    }

    bool operator==(const LoopPolynomial& o) const {
        if (rank_ != o.rank_ || terms_.size() != o.terms_.size()) return false;
        for (const auto& [m, c] : terms_) {
            auto it = o.terms_.find(m);
            if (it == o.terms_.end() || it->second != c) return false;
        }
        return true;
    }
    bool operator!=(const LoopPolynomial& o) const { return !(*this == o); }

    /// Coefficient sum, i.e. the specialization counting dimensions.
    Int coefficient_sum() const {
        Int s = 0;
        for (const auto& [m, c] : terms_) s += c;
        return s;
    }

    bool all_coefficients_one() const {
        for (const auto& [m, c] : terms_)
            if (c != 1) return false;
        return true;
    }

    bool all_coefficients_nonnegative() const {
        for (const auto& [m, c] : terms_)
            if (c < 0) return false;
        return true;
    }

    std::vector<LoopMonomial> dominant_monomials() const {
        std::vector<LoopMonomial> out;
        for (const auto& [m, c] : terms_)
            if (m.is_dominant()) out.push_back(m);
        return out;
    }

    std::vector<LoopMonomial> antidominant_monomials() const {
        std::vector<LoopMonomial> out;
        for (const auto& [m, c] : terms_)
            if (m.is_antidominant()) out.push_back(m);
        return out;
    }

    /// Terms in canonical text order.
    std::vector<std::pair<LoopMonomial, Int>> sorted_terms() const {
        std::vector<std::pair<LoopMonomial, Int>> v(terms_.begin(), terms_.end());
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
            return LoopMonomial::text_order_less(a.first, b.first);
        });
        return v;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : sorted_terms()) {
            Int cc = c;
            if (first) {
                if (cc < 0) { os << "-"; cc = -cc; }
            } else {
                os << (cc < 0 ? " - " : " + ");
                if (cc < 0) cc = -cc;
            }
            first = false;
            if (m.is_identity()) {
                os << cc.str();
            } else {
                if (cc != 1) os << cc.str() << "*";
                os << m.str();
            }
        }
        return os.str();
    }

private:
    void check_rank(const LoopPolynomial& o) const {
        if (rank_ != o.rank_) throw std::invalid_argument("polynomial rank mismatch");
    }

    int rank_;
    TermMap terms_;
};

namespace detail {

// Per-point minimum exponent over all terms, where a point absent from a
// term counts as exponent zero. The resulting monomial divides every term.
inline LoopMonomial content_monomial(const LoopPolynomial& p) {
    std::map<std::pair<int, int>, std::pair<int, size_t>> acc; // point -> (min, #terms seen)
    size_t nterms = p.term_count();
    for (const auto& [m, c] : p.terms()) {
        for (const auto& en : m.entries()) {
            auto key = std::make_pair(static_cast<int>(en.i), static_cast<int>(en.k));
            auto [it, inserted] = acc.try_emplace(key, std::make_pair(static_cast<int>(en.e), size_t(1)));
            if (!inserted) {
                it->second.first = std::min(it->second.first, static_cast<int>(en.e));
                it->second.second++;
            }
        }
    }
    std::vector<LoopMonomial::Entry> entries;
    for (const auto& [pt, me] : acc) {
        int m = me.second < nterms ? std::min(me.first, 0) : me.first;
        if (m != 0)
            entries.push_back({static_cast<int32_t>(pt.first),
                               static_cast<int32_t>(pt.second),
                               static_cast<int32_t>(m)});
    }
    return LoopMonomial(p.rank(), std::move(entries));
}

// Monomial quotient inside the nonnegative-exponent ring; fails when any
// exponent would become negative.
inline std::optional<LoopMonomial> poly_mono_div(const LoopMonomial& a, const LoopMonomial& b) {
    LoopMonomial q = a * b.inverse();
    for (const auto& en : q.entries())
        if (en.e < 0) return std::nullopt;
    return q;
}

} // namespace detail

/// Exact quotient p / d in the Laurent polynomial ring, or nothing when d
/// does not divide p. Both arguments are first divided by their content
/// monomials, after which classical sparse division applies.
inline std::optional<LoopPolynomial> exact_divide(const LoopPolynomial& p,
                                                  const LoopPolynomial& d) {
    if (p.rank() != d.rank()) throw std::invalid_argument("exact_divide: rank mismatch");
    if (d.is_zero()) throw std::invalid_argument("exact_divide: division by zero");
    LoopPolynomial quotient(p.rank());
    if (p.is_zero()) return quotient;

    LoopMonomial cp = detail::content_monomial(p);
    LoopMonomial cd = detail::content_monomial(d);

    using Ordered = std::map<LoopMonomial, Int, LoopMonomialExponentLess>;
    Ordered rem;
    {
        LoopMonomial cpi = cp.inverse();
        for (const auto& [m, c] : p.terms()) rem.emplace(m * cpi, c);
    }
    std::vector<std::pair<LoopMonomial, Int>> divisor;
    {
        LoopMonomial cdi = cd.inverse();
        divisor.reserve(d.term_count());
        for (const auto& [m, c] : d.terms()) divisor.emplace_back(m * cdi, c);
        std::sort(divisor.begin(), divisor.end(), [](const auto& a, const auto& b) {
            return LoopMonomial::exponent_lex_cmp(a.first, b.first) > 0;
        });
    }
    const LoopMonomial& lead_d = divisor.front().first;
    const Int& lead_dc = divisor.front().second;

    LoopMonomial shift = cp * cd.inverse();
    while (!rem.empty()) {
        auto lt = std::prev(rem.end());
        auto qm = detail::poly_mono_div(lt->first, lead_d);
        if (!qm) return std::nullopt;
        Int qc;
        if (!divides_exactly(lead_dc, lt->second, qc)) return std::nullopt;
        quotient.add_term(*qm * shift, qc);
        for (const auto& [dm, dc] : divisor) {
            LoopMonomial m = *qm * dm;
            Int delta = qc * dc;
            auto [it, inserted] = rem.try_emplace(m, Int(-delta));
            if (!inserted) {
                it->second -= delta;
                if (it->second == 0) rem.erase(it);
            }
        }
    }
    return quotient;
}

} // namespace qaffine
