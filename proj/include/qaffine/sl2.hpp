#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "qaffine/loop.hpp"
#include "qaffine/qlaurent.hpp"

namespace qaffine {

/// The (r+1)-dimensional evaluation module with spectral parameter q^s.
/// Duals are not modelled; taking a (shifted) dual only reverses the order
/// of the highest-weight string, which callers can do on the monomial.
struct EvalModule {
    int r = 0; // spin numerator
    int s = 0; // spectral exponent

    EvalModule(int r_, int s_) : r(r_), s(s_) {
        if (r < 0) throw std::invalid_argument("negative spin numerator");
    }

    int dimension() const { return r + 1; }

    /// Indices of the underlying q-string lie in the odd level class exactly
    /// when r + s is even.
    bool parity_valid() const { return ((r + s) % 2 + 2) % 2 == 0; }
};

using QMatrix = std::vector<std::vector<QLaurent>>;

enum class GenTag { XPlus, XMinus, K };

inline QMatrix zero_matrix(int n) {
    return QMatrix(n, std::vector<QLaurent>(n));
}

inline QMatrix identity_matrix(int n) {
    QMatrix m = zero_matrix(n);
    for (int j = 0; j < n; ++j) m[j][j] = QLaurent(1);
    return m;
}

inline QMatrix mat_mul(const QMatrix& a, const QMatrix& b) {
    int n = static_cast<int>(a.size());
    QMatrix r = zero_matrix(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (int j = 0; j < n; ++j) {
                if (b[k][j].is_zero()) continue;
                r[i][j] += a[i][k] * b[k][j];
            }
        }
    return r;
}

inline QMatrix mat_sub(const QMatrix& a, const QMatrix& b) {
    QMatrix r = a;
    for (size_t i = 0; i < r.size(); ++i)
        for (size_t j = 0; j < r.size(); ++j) r[i][j] -= b[i][j];
    return r;
}

inline QMatrix mat_scale(const QMatrix& a, const QLaurent& c) {
    QMatrix r = a;
    for (auto& row : r)
        for (auto& x : row) x *= c;
    return r;
}

inline QMatrix commutator(const QMatrix& a, const QMatrix& b) {
    return mat_sub(mat_mul(a, b), mat_mul(b, a));
}

/// Matrix of a loop generator on the evaluation module, with the spectral
/// parameter realized as q^s:
///   X+_p : v_k -> q^{p(s+r-2k+1)} [r-k+1] v_{k-1}
///   X-_p : v_k -> q^{p(s+r-2k-1)} [k+1]   v_{k+1}
///   K    : v_k -> q^{r-2k} v_k
inline QMatrix generator_matrix(const EvalModule& m, GenTag tag, int p = 0) {
    const int n = m.dimension();
    QMatrix g = zero_matrix(n);
    switch (tag) {
    case GenTag::XPlus:
        for (int k = 1; k <= m.r; ++k)
            g[k - 1][k] = QLaurent::q_power(p * (m.s + m.r - 2 * k + 1)) * q_number(m.r - k + 1);
        break;
    case GenTag::XMinus:
        for (int k = 0; k < m.r; ++k)
            g[k + 1][k] = QLaurent::q_power(p * (m.s + m.r - 2 * k - 1)) * q_number(k + 1);
        break;
    case GenTag::K:
        for (int k = 0; k <= m.r; ++k) g[k][k] = QLaurent::q_power(m.r - 2 * k);
        break;
    }
    return g;
}

inline QMatrix k_matrix_inverse(const EvalModule& m) {
    QMatrix g = zero_matrix(m.dimension());
    for (int k = 0; k <= m.r; ++k) g[k][k] = QLaurent::q_power(2 * k - m.r);
    return g;
}

/// Diagonal matrix of Phi^+_p (p >= 0) or Phi^-_p (p <= 0), obtained from
/// K^{+-1} at p = 0 and otherwise from the commutator
/// (q - q^-1) [X^+_p, X^-_0], whose off-diagonal entries vanish by the band
/// structure.
inline QMatrix phi_matrix(const EvalModule& m, bool plus, int p) {
    if (plus && p < 0) throw std::invalid_argument("Phi^+ needs p >= 0");
    if (!plus && p > 0) throw std::invalid_argument("Phi^- needs p <= 0");
    if (p == 0) return plus ? generator_matrix(m, GenTag::K) : k_matrix_inverse(m);
    QLaurent unit = QLaurent::q_power(1) - QLaurent::q_power(-1);
    QMatrix c = commutator(generator_matrix(m, GenTag::XPlus, p),
                           generator_matrix(m, GenTag::XMinus, 0));
    QMatrix r = mat_scale(c, plus ? unit : -unit);
    return r;
}

/// Closed form of the Phi^+ eigenvalue on v_k for p > 0:
///   (q - q^-1)([k+1][r-k] q^{p(s+r-2k-1)} - [k][r-k+1] q^{p(s+r-2k+1)}).
inline QLaurent phi_plus_eigenvalue(const EvalModule& m, int k, int p) {
    if (p == 0) return QLaurent::q_power(m.r - 2 * k);
    QLaurent unit = QLaurent::q_power(1) - QLaurent::q_power(-1);
    QLaurent first = q_number(k + 1) * q_number(m.r - k) *
                     QLaurent::q_power(p * (m.s + m.r - 2 * k - 1));
    QLaurent second = q_number(k) * q_number(m.r - k + 1) *
                      QLaurent::q_power(p * (m.s + m.r - 2 * k + 1));
    return unit * (first - second);
}

namespace detail {

inline void require_parity(const EvalModule& m) {
    if ((m.r + m.s) % 2 != 0)
        throw std::invalid_argument("evaluation module leaves the fixed parity class");
}

} // namespace detail

/// Highest loop-weight, the q-string Y[1,s+r-1] Y[1,s+r-3] ... Y[1,s-r+1].
/// Requires r + s even so that the string stays in the odd level class.
inline LoopMonomial drinfeld_polynomial(const EvalModule& m) {
    detail::require_parity(m);
    LoopMonomial out = LoopMonomial::identity(1);
    for (int j = 1; j <= m.r; ++j) out *= LoopMonomial::Y(1, m.s + m.r - 2 * j + 1, 1);
    return out;
}

/// Loop-weight of the basis vector v_k:
///   prod_{j=k+1..r} Y[1,s+r-2j+1] * prod_{j=1..k} Y[1,s+r-2j+3]^-1.
inline LoopMonomial loop_weight(const EvalModule& m, int k) {
    detail::require_parity(m);
    if (k < 0 || k > m.r) throw std::out_of_range("basis index");
    LoopMonomial out = LoopMonomial::identity(1);
    for (int j = k + 1; j <= m.r; ++j) out *= LoopMonomial::Y(1, m.s + m.r - 2 * j + 1, 1);
    for (int j = 1; j <= k; ++j) out *= LoopMonomial::Y(1, m.s + m.r - 2 * j + 3, 1, -1);
    return out;
}

/// Closed q-character: the sum of the loop-weights over the basis.
inline LoopPolynomial q_character_closed(const EvalModule& m) {
    detail::require_parity(m);
    LoopPolynomial out(1);
    for (int k = 0; k <= m.r; ++k) out.add_term(loop_weight(m, k), 1);
    return out;
}

/// Verifies, to the given series order, that the eigenvalue series
/// sum_p psi^+_p u^p on v_k equals q^{deg Q - deg R} Q(q^-2 u) R(u) /
/// (Q(u) R(q^-2 u)) by cross-multiplication, where Q and R are read off the
/// loop-weight of v_k.
inline bool drinfeld_series_check(const EvalModule& m, int k, int order) {
    if (k < 0 || k > m.r) throw std::out_of_range("basis index");
    if (order < 1) throw std::invalid_argument("series order must be positive");

    // eigenvalue series from the matrices
    TruncatedSeries psi(order);
    for (int p = 0; p <= order; ++p) {
        QMatrix phi = phi_matrix(m, true, p);
        for (int a = 0; a <= m.r; ++a)
            for (int b = 0; b <= m.r; ++b)
                if (a != b && !phi[a][b].is_zero()) return false;
        psi.at(p) = phi[k][k];
    }

    // (1 - q^c u) factors of Q(u) and R(u); exponents from the loop-weight
    auto linear = [&](int c) {
        TruncatedSeries f = TruncatedSeries::constant(QLaurent(1), order);
        f.at(1) = -QLaurent::q_power(c);
        return f;
    };
    TruncatedSeries q_plain = TruncatedSeries::constant(QLaurent(1), order);
    TruncatedSeries q_shift = q_plain, r_plain = q_plain, r_shift = q_plain;
    int deg_q = 0, deg_r = 0;
    for (int j = k + 1; j <= m.r; ++j) {
        int c = m.s + m.r - 2 * j + 1;
        q_plain = q_plain * linear(c);
        q_shift = q_shift * linear(c - 2);
        ++deg_q;
    }
    for (int j = 1; j <= k; ++j) {
        int c = m.s + m.r - 2 * j + 3;
        r_plain = r_plain * linear(c);
        r_shift = r_shift * linear(c - 2);
        ++deg_r;
    }
    TruncatedSeries lhs = psi * q_plain * r_shift;
    TruncatedSeries rhs = q_shift * r_plain;
    for (int p = 0; p <= order; ++p) {
        QLaurent scaled = QLaurent::q_power(deg_q - deg_r) * rhs.at(p);
        if (lhs.at(p) != scaled) return false;
    }
    return true;
}

/// Outcome of the reducibility test for a tensor product of two evaluation
/// modules: the sign case, the witness p, and the four factor modules of the
/// submodule and the quotient.
struct SpecialPosition {
    int sign = +1; // +1 when s2 - s1 = r1 + r2 - 2p, -1 for the negative case
    int p = 0;
    EvalModule sub_first, sub_second;   // factors of the submodule
    EvalModule quot_first, quot_second; // factors of the quotient
};

/// Detects special position of V^{(r1)}(q^{s1}) and V^{(r2)}(q^{s2}):
/// some 0 <= p < min{r1,r2} with s2 - s1 = +-(r1 + r2 - 2p). Returns the
/// decomposition data, or nothing in general position.
inline std::optional<SpecialPosition> special_position(int r1, int r2, int s1, int s2) {
    if (r1 < 0 || r2 < 0) throw std::invalid_argument("negative spin numerator");
    for (int p = 0; p < std::min(r1, r2); ++p) {
        int gap = r1 + r2 - 2 * p;
        if (s2 - s1 == gap) {
            return SpecialPosition{+1, p,
                                   EvalModule(r1 - p - 1, s1 - p - 1),
                                   EvalModule(r2 - p - 1, s2 + p + 1),
                                   EvalModule(p, s1 + r1 - p),
                                   EvalModule(r1 + r2 - p, s2 - r1 + p)};
        }
        if (s2 - s1 == -gap) {
            return SpecialPosition{-1, p,
                                   EvalModule(p, s1 - r1 + p),
                                   EvalModule(r1 + r2 - p, s2 + r1 - p),
                                   EvalModule(r1 - p - 1, s1 + p + 1),
                                   EvalModule(r2 - p - 1, s2 - p - 1)};
        }
    }
    return std::nullopt;
}

/// Exact character identity for a special-position pair:
/// chi(V1) chi(V2) = chi(submodule factors) + chi(quotient factors).
inline bool tensor_identity_check(const SpecialPosition& d, int r1, int r2, int s1, int s2) {
    LoopPolynomial lhs = q_character_closed(EvalModule(r1, s1)) *
                         q_character_closed(EvalModule(r2, s2));
    LoopPolynomial sub = q_character_closed(d.sub_first) * q_character_closed(d.sub_second);
    LoopPolynomial quot = q_character_closed(d.quot_first) * q_character_closed(d.quot_second);
    return lhs == sub + quot;
}

} // namespace qaffine
