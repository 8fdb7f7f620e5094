#pragma once

#include <array>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qaffine/bigint.hpp"
#include "qaffine/rational.hpp"

namespace qaffine {

/// Laurent polynomial in the quantum parameter and two multiplicative
/// spectral variables, over exact integers. Variable 0 renders as `q`,
/// variable 1 as `x` (the ratio lambda/mu), variable 2 as `y` (mu/nu).
class MultiPoly {
public:
    using Key = std::array<int, 3>;

    MultiPoly() = default;
    MultiPoly(long c) {
        if (c != 0) t_[{0, 0, 0}] = c;
    }
    MultiPoly(const Int& c) {
        if (c != 0) t_[{0, 0, 0}] = c;
    }

    static MultiPoly term(const Int& c, int eq, int ex = 0, int ey = 0) {
        MultiPoly p;
        if (c != 0) p.t_[{eq, ex, ey}] = c;
        return p;
    }

    static MultiPoly variable(int var, int e = 1) {
        Key k{0, 0, 0};
        k[var] = e;
        MultiPoly p;
        p.t_[k] = 1;
        return p;
    }

    bool is_zero() const { return t_.empty(); }
    size_t term_count() const { return t_.size(); }
    const std::map<Key, Int>& terms() const { return t_; }

    MultiPoly& operator+=(const MultiPoly& o) {
        for (const auto& [k, c] : o.t_) add(k, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        for (const auto& [k, c] : o.t_) add(k, -c);
        return *this;
    }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

    MultiPoly operator-() const {
        MultiPoly r;
        for (const auto& [k, c] : t_) r.t_.emplace(k, Int(-c));
        return r;
    }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r;
        for (const auto& [ka, ca] : a.t_)
            for (const auto& [kb, cb] : b.t_)
                r.add({ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]}, ca * cb);
        return r;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    bool operator==(const MultiPoly& o) const { return t_ == o.t_; }

    /// Substitution of one variable by its inverse.
    MultiPoly invert_variable(int var) const {
        MultiPoly r;
        for (const auto& [k, c] : t_) {
            Key nk = k;
            nk[var] = -nk[var];
            r.t_.emplace(nk, c);
        }
        return r;
    }

    /// Substitution of one variable by 1.
    MultiPoly set_variable_to_one(int var) const {
        MultiPoly r;
        for (const auto& [k, c] : t_) {
            Key nk = k;
            nk[var] = 0;
            r.add(nk, c);
        }
        return r;
    }

    Fraction eval(const Fraction& q, const Fraction& x, const Fraction& y) const {
        auto power = [](const Fraction& b, int e) {
            Fraction r(1);
            Fraction base = e >= 0 ? b : Fraction(b.den, b.num);
            for (int t = std::abs(e); t > 0; --t) r = r * base;
            return r;
        };
        Fraction r(0);
        for (const auto& [k, c] : t_)
            r = r + Fraction(c, 1) * power(q, k[0]) * power(x, k[1]) * power(y, k[2]);
        return r;
    }

    std::string str() const {
        if (t_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
            Int c = it->second;
            if (first) {
                if (c < 0) { os << "-"; c = -c; }
            } else {
                os << (c < 0 ? " - " : " + ");
                if (c < 0) c = -c;
            }
            first = false;
            const Key& k = it->first;
            bool unit_coeff = (c == 1) && (k[0] != 0 || k[1] != 0 || k[2] != 0);
            if (!unit_coeff) os << c.str();
            static const char* names[3] = {"q", "x", "y"};
            bool printed = !unit_coeff;
            for (int v = 0; v < 3; ++v) {
                if (k[v] == 0) continue;
                if (printed) os << "*";
                os << names[v];
                if (k[v] != 1) os << "^" << k[v];
                printed = true;
            }
        }
        return os.str();
    }

private:
    void add(const Key& k, const Int& c) {
        if (c == 0) return;
        auto [it, inserted] = t_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) t_.erase(it);
        }
    }

    std::map<Key, Int> t_;
};

/// Quotient of two polynomials; no normal form, equality by
/// cross-multiplication.
struct RationalFn {
    MultiPoly num;
    MultiPoly den = MultiPoly(1);

    RationalFn() = default;
    RationalFn(long c) : num(c) {}
    RationalFn(MultiPoly n) : num(std::move(n)) {}
    RationalFn(MultiPoly n, MultiPoly d) : num(std::move(n)), den(std::move(d)) {
        if (den.is_zero()) throw std::domain_error("zero denominator");
    }

    bool is_zero() const { return num.is_zero(); }

    bool equals(const RationalFn& o) const { return num * o.den == o.num * den; }

    friend RationalFn operator+(const RationalFn& a, const RationalFn& b) {
        return {a.num * b.den + b.num * a.den, a.den * b.den};
    }
    friend RationalFn operator*(const RationalFn& a, const RationalFn& b) {
        return {a.num * b.num, a.den * b.den};
    }

    RationalFn invert_variable(int var) const {
        return {num.invert_variable(var), den.invert_variable(var)};
    }

    RationalFn set_variable_to_one(int var) const {
        MultiPoly d = den.set_variable_to_one(var);
        if (d.is_zero()) throw std::domain_error("denominator vanishes at 1");
        return {num.set_variable_to_one(var), d};
    }

    std::string str() const { return num.str() + " / " + den.str(); }
};

/// The bracketed fundamental matrix acting on the tensor square of an
/// (l+1)-dimensional space. Basis pairs (a,c) are flattened as (a-1)n+c; the
/// scalar prefactor of the full intertwiner is omitted throughout.
struct RMatrix {
    int n = 0;                    // l + 1
    std::vector<RationalFn> e;    // n^2 x n^2, row-major

    RationalFn& at(int row, int col) { return e[static_cast<size_t>(row) * n * n + col]; }
    const RationalFn& at(int row, int col) const {
        return e[static_cast<size_t>(row) * n * n + col];
    }
    int pair_index(int a, int c) const { return (a - 1) * n + (c - 1); }
};

/// Entry values: 1 on E_aa x E_aa; q(1-x)/(q^2-x) on E_aa x E_bb;
/// (q^2-1)/(q^2-x) on E_ab x E_ba for a < b; x(q^2-1)/(q^2-x), i.e. the
/// inverse-spectral form cleared to x, for a > b.
inline RMatrix fundamental_r(int l) {
    if (l < 1) throw std::invalid_argument("rank must be positive");
    const int n = l + 1;
    RMatrix r;
    r.n = n;
    r.e.assign(static_cast<size_t>(n * n) * (n * n), RationalFn(0));

    MultiPoly q = MultiPoly::variable(0);
    MultiPoly x = MultiPoly::variable(1);
    MultiPoly q2mx = q * q - x;
    RationalFn diag_same(MultiPoly(1));
    RationalFn diag_diff(q * (MultiPoly(1) - x), q2mx);
    RationalFn swap_lo(q * q - MultiPoly(1), q2mx);
    RationalFn swap_hi((q * q - MultiPoly(1)) * x, q2mx);

    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            if (a == b) {
                r.at(r.pair_index(a, a), r.pair_index(a, a)) = diag_same;
            } else {
                r.at(r.pair_index(a, b), r.pair_index(a, b)) = diag_diff;
                r.at(r.pair_index(a, b), r.pair_index(b, a)) = (a < b) ? swap_lo : swap_hi;
            }
        }
    return r;
}

namespace detail {

/// Cleared-denominator form (q^2 - arg) * R(arg) with arg = x^{ex} y^{ey}:
/// a polynomial matrix. Scaling each factor of the Yang-Baxter product by
/// its own denominator leaves the equation intact.
inline std::vector<MultiPoly> cleared_r(int n, int ex, int ey) {
    MultiPoly q = MultiPoly::variable(0);
    MultiPoly arg = MultiPoly::term(1, 0, ex, ey);
    MultiPoly a_same = q * q - arg;
    MultiPoly a_diff = q * (MultiPoly(1) - arg);
    MultiPoly a_lo = q * q - MultiPoly(1);
    MultiPoly a_hi = (q * q - MultiPoly(1)) * arg;

    const int d = n * n;
    std::vector<MultiPoly> m(static_cast<size_t>(d) * d);
    auto idx = [n](int a, int c) { return (a - 1) * n + (c - 1); };
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            if (a == b) {
                m[static_cast<size_t>(idx(a, a)) * d + idx(a, a)] = a_same;
            } else {
                m[static_cast<size_t>(idx(a, b)) * d + idx(a, b)] = a_diff;
                m[static_cast<size_t>(idx(a, b)) * d + idx(b, a)] = (a < b) ? a_lo : a_hi;
            }
        }
    return m;
}

enum class Slot { OneTwo, OneThree, TwoThree };

/// Embeds an n^2 x n^2 matrix into the chosen pair of tensor slots of the
/// cube, as a dense n^3 x n^3 matrix.
template <typename T>
std::vector<T> embed(const std::vector<T>& m, int n, Slot slot, const T& zero) {
    const int d = n * n * n;
    std::vector<T> out(static_cast<size_t>(d) * d, zero);
    auto midx = [n](int a, int c) { return (a - 1) * n + (c - 1); };
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            for (int c = 1; c <= n; ++c)
                for (int dd = 1; dd <= n; ++dd) {
                    const T& v = m[static_cast<size_t>(midx(a, c)) * n * n + midx(b, dd)];
                    for (int s = 1; s <= n; ++s) {
                        int row = 0, col = 0;
                        switch (slot) {
                        case Slot::OneTwo:
                            row = ((a - 1) * n + (c - 1)) * n + (s - 1);
                            col = ((b - 1) * n + (dd - 1)) * n + (s - 1);
                            break;
                        case Slot::OneThree:
                            row = ((a - 1) * n + (s - 1)) * n + (c - 1);
                            col = ((b - 1) * n + (s - 1)) * n + (dd - 1);
                            break;
                        case Slot::TwoThree:
                            row = ((s - 1) * n + (a - 1)) * n + (c - 1);
                            col = ((s - 1) * n + (b - 1)) * n + (dd - 1);
                            break;
                        }
                        out[static_cast<size_t>(row) * d + col] = v;
                    }
                }
    return out;
}

template <typename T>
std::vector<T> dense_mul(const std::vector<T>& a, const std::vector<T>& b, int d,
                         const T& zero) {
    std::vector<T> r(static_cast<size_t>(d) * d, zero);
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) {
            const T& aik = a[static_cast<size_t>(i) * d + k];
            if (aik == zero) continue;
            for (int j = 0; j < d; ++j) {
                const T& bkj = b[static_cast<size_t>(k) * d + j];
                if (bkj == zero) continue;
                r[static_cast<size_t>(i) * d + j] += aik * bkj;
            }
        }
    return r;
}

/// Evaluates a cleared-matrix entry at rational points, homogenized to the
/// fixed multidegree (2,1,1) so the value is an exact integer.
inline Int eval_homogenized(const MultiPoly& p, const Int& aq, const Int& bq, const Int& ax,
                            const Int& bx, const Int& ay, const Int& by) {
    auto ipow = [](const Int& b, int e) {
        Int r = 1;
        for (int t = 0; t < e; ++t) r *= b;
        return r;
    };
    Int r = 0;
    for (const auto& [k, c] : p.terms()) {
        r += c * ipow(aq, k[0]) * ipow(bq, 2 - k[0]) * ipow(ax, k[1]) * ipow(bx, 1 - k[1]) *
             ipow(ay, k[2]) * ipow(by, 1 - k[2]);
    }
    return r;
}

} // namespace detail

/// Yang-Baxter equation R12(x) R13(xy) R23(y) = R23(y) R13(xy) R12(x) on the
/// cleared polynomial matrices. Exact mode compares the two sides entrywise
/// as polynomials in (q, x, y); sampled mode evaluates them at `points`
/// deterministic rational points per variable with exact arithmetic.
inline bool check_ybe(int l, bool exact, int points = 24) {
    const int n = l + 1;
    const int d = n * n * n;
    using detail::Slot;

    if (exact) {
        MultiPoly zero;
        auto r12 = detail::embed(detail::cleared_r(n, 1, 0), n, Slot::OneTwo, zero);
        auto r13 = detail::embed(detail::cleared_r(n, 1, 1), n, Slot::OneThree, zero);
        auto r23 = detail::embed(detail::cleared_r(n, 0, 1), n, Slot::TwoThree, zero);
        auto lhs = detail::dense_mul(detail::dense_mul(r12, r13, d, zero), r23, d, zero);
        auto rhs = detail::dense_mul(detail::dense_mul(r23, r13, d, zero), r12, d, zero);
        return lhs == rhs;
    }

    auto c12 = detail::cleared_r(n, 1, 0);
    auto c13 = detail::cleared_r(n, 1, 1);
    auto c23 = detail::cleared_r(n, 0, 1);
    for (int t = 0; t < points; ++t) {
        // injective in t, so every variable sweeps distinct rationals
        Int aq = t + 2, bq = 2 * t + 3;
        Int ax = 2 * t + 5, bx = t + 3;
        Int ay = 3 * t + 7, by = t + 4;
        auto eval_all = [&](const std::vector<MultiPoly>& m) {
            std::vector<Int> out(m.size());
            for (size_t j = 0; j < m.size(); ++j)
                out[j] = detail::eval_homogenized(m[j], aq, bq, ax, bx, ay, by);
            return out;
        };
        Int zero = 0;
        auto r12 = detail::embed(eval_all(c12), n, Slot::OneTwo, zero);
        auto r13 = detail::embed(eval_all(c13), n, Slot::OneThree, zero);
        auto r23 = detail::embed(eval_all(c23), n, Slot::TwoThree, zero);
        auto lhs = detail::dense_mul(detail::dense_mul(r12, r13, d, zero), r23, d, zero);
        auto rhs = detail::dense_mul(detail::dense_mul(r23, r13, d, zero), r12, d, zero);
        if (lhs != rhs) return false;
    }
    return true;
}

/// At x = 1 the matrix must reduce to the permutation operator.
inline bool check_regularity(int l) {
    RMatrix r = fundamental_r(l);
    const int n = r.n;
    for (int a = 1; a <= n; ++a)
        for (int c = 1; c <= n; ++c)
            for (int b = 1; b <= n; ++b)
                for (int dd = 1; dd <= n; ++dd) {
                    RationalFn v = r.at(r.pair_index(a, c), r.pair_index(b, dd))
                                       .set_variable_to_one(1);
                    bool expect_one = (a == dd && c == b);
                    if (!v.equals(RationalFn(expect_one ? 1 : 0))) return false;
                }
    return true;
}

/// Unitarity up to a scalar: R12(x) * P R(1/x) P must be that scalar times
/// the identity. Returns the scalar, or nothing on failure.
inline std::optional<RationalFn> check_unitarity(int l) {
    RMatrix r = fundamental_r(l);
    const int n = r.n;
    const int d = n * n;

    // P R(1/x) P : entry ((a,c),(b,dd)) = R(1/x)[(c,a),(d,b)]
    RMatrix flipped;
    flipped.n = n;
    flipped.e.assign(static_cast<size_t>(d) * d, RationalFn(0));
    for (int a = 1; a <= n; ++a)
        for (int c = 1; c <= n; ++c)
            for (int b = 1; b <= n; ++b)
                for (int dd = 1; dd <= n; ++dd)
                    flipped.at(flipped.pair_index(a, c), flipped.pair_index(b, dd)) =
                        r.at(r.pair_index(c, a), r.pair_index(dd, b)).invert_variable(1);

    std::vector<RationalFn> prod(static_cast<size_t>(d) * d, RationalFn(0));
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) {
            const RationalFn& a = r.at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < d; ++j) {
                const RationalFn& b = flipped.at(k, j);
                if (b.is_zero()) continue;
                prod[static_cast<size_t>(i) * d + j] = prod[static_cast<size_t>(i) * d + j] + a * b;
            }
        }

    const RationalFn& f = prod[0];
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const RationalFn& v = prod[static_cast<size_t>(i) * d + j];
            if (i == j ? !v.equals(f) : !v.is_zero()) return std::nullopt;
        }
    // consistency with regularity: the scalar cannot vanish at x = 1
    if (f.set_variable_to_one(1).is_zero()) return std::nullopt;
    return f;
}

} // namespace qaffine
