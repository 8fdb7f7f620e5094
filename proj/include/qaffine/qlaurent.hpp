#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qaffine/bigint.hpp"

namespace qaffine {

/// Laurent polynomial in the quantum parameter q with exact integer
/// coefficients. Zero coefficients are never stored, so equality is a
/// structural comparison.
class QLaurent {
public:
    QLaurent() = default;

    QLaurent(long constant) {
        if (constant != 0) coeff_[0] = constant;
    }

    QLaurent(const Int& constant) {
        if (constant != 0) coeff_[0] = constant;
    }

    /// c * q^e
    static QLaurent term(const Int& c, int e) {
        QLaurent p;
        if (c != 0) p.coeff_[e] = c;
        return p;
    }

    static QLaurent q_power(int e) { return term(1, e); }

    bool is_zero() const { return coeff_.empty(); }

    bool is_one() const {
        return coeff_.size() == 1 && coeff_.begin()->first == 0 &&
               coeff_.begin()->second == 1;
    }

    Int coefficient(int e) const {
        auto it = coeff_.find(e);
        return it == coeff_.end() ? Int(0) : it->second;
    }

    int min_exponent() const {
        if (is_zero()) throw std::domain_error("min_exponent of zero");
        return coeff_.begin()->first;
    }

    int max_exponent() const {
        if (is_zero()) throw std::domain_error("max_exponent of zero");
        return coeff_.rbegin()->first;
    }

    size_t term_count() const { return coeff_.size(); }

    QLaurent& operator+=(const QLaurent& o) {
        for (const auto& [e, c] : o.coeff_) add_term(e, c);
        return *this;
    }

    QLaurent& operator-=(const QLaurent& o) {
        for (const auto& [e, c] : o.coeff_) add_term(e, -c);
        return *this;
    }

    friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
    friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }

    QLaurent operator-() const {
        QLaurent r(*this);
        for (auto& [e, c] : r.coeff_) c = -c;
        return r;
    }

    friend QLaurent operator*(const QLaurent& a, const QLaurent& b) {
        QLaurent r;
        for (const auto& [ea, ca] : a.coeff_)
            for (const auto& [eb, cb] : b.coeff_) r.add_term(ea + eb, ca * cb);
        return r;
    }

    QLaurent& operator*=(const QLaurent& o) { return *this = *this * o; }

    QLaurent pow(unsigned n) const {
        QLaurent r(1);
        QLaurent base(*this);
        while (n) {
            if (n & 1) r *= base;
            base *= base;
            n >>= 1;
        }
        return r;
    }

    /// Bar involution q -> q^{-1}.
    QLaurent bar() const {
        QLaurent r;
        for (const auto& [e, c] : coeff_) r.coeff_[-e] = c;
        return r;
    }

    /// Specialization q = 1, i.e. the coefficient sum.
    Int eval_at_one() const {
        Int s = 0;
        for (const auto& [e, c] : coeff_) s += c;
        return s;
    }

    bool operator==(const QLaurent& o) const { return coeff_ == o.coeff_; }
    bool operator!=(const QLaurent& o) const { return !(*this == o); }

    /// Terms sorted by decreasing exponent, `c*q^e` with exponent 0 and
    /// coefficient 1 omitted, e.g. "q^2 + 1 + q^-2".
    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) {
            Int c = it->second;
            if (first) {
                if (c < 0) { os << "-"; c = -c; }
            } else {
                os << (c < 0 ? " - " : " + ");
                if (c < 0) c = -c;
            }
            first = false;
            int e = it->first;
            if (e == 0) {
                os << c.str();
            } else {
                if (c != 1) os << c.str() << "*";
                os << "q";
                if (e != 1) os << "^" << e;
            }
        }
        return os.str();
    }

    const std::map<int, Int>& terms() const { return coeff_; }

private:
    void add_term(int e, const Int& c) {
        if (c == 0) return;
        auto [it, inserted] = coeff_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coeff_.erase(it);
        }
    }

    std::map<int, Int> coeff_; // exponent -> nonzero coefficient
};

/// [n]_q = (q^n - q^-n)/(q - q^-1); [0]_q = 0 and [-n]_q = -[n]_q.
inline QLaurent q_number(int n) {
    if (n == 0) return QLaurent();
    if (n < 0) return -q_number(-n);
    QLaurent r;
    for (int e = n - 1; e >= 1 - n; e -= 2) r += QLaurent::q_power(e);
    return r;
}

/// [n]_q! = [n]_q [n-1]_q ... [1]_q.
inline QLaurent q_factorial(int n) {
    if (n < 0) throw std::invalid_argument("q_factorial: negative argument");
    QLaurent r(1);
    for (int m = 1; m <= n; ++m) r *= q_number(m);
    return r;
}

/// Gaussian binomial [n over k]_q, computed through the recurrence
/// [n,k] = q^{-k} [n-1,k] + q^{n-k} [n-1,k-1] with memoization.
inline QLaurent q_binomial(int n, int k) {
    if (k < 0 || n < k)
        throw std::invalid_argument("q_binomial: need n >= k >= 0");
    static thread_local std::map<std::pair<int, int>, QLaurent> memo;
    if (k == 0 || k == n) return QLaurent(1);
    auto key = std::make_pair(n, k);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    QLaurent r = QLaurent::q_power(-k) * q_binomial(n - 1, k) +
                 QLaurent::q_power(n - k) * q_binomial(n - 1, k - 1);
    memo[key] = r;
    return r;
}

/// Power series in an auxiliary variable u, truncated at u^{order},
/// with QLaurent coefficients. Arithmetic is exact modulo u^{order+1}.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order) : c_(order + 1) {
        if (order < 0) throw std::invalid_argument("negative series order");
    }

    static TruncatedSeries constant(const QLaurent& c, int order) {
        TruncatedSeries s(order);
        s.c_[0] = c;
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }

    QLaurent& at(int k) { return c_.at(k); }
    const QLaurent& at(int k) const { return c_.at(k); }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        check_order(o);
        for (size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
        return *this;
    }

    TruncatedSeries& operator-=(const TruncatedSeries& o) {
        check_order(o);
        for (size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
        return *this;
    }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.check_order(b);
        TruncatedSeries r(a.order());
        for (int i = 0; i <= a.order(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (int j = 0; i + j <= a.order(); ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }

    bool operator==(const TruncatedSeries& o) const {
        check_order(o);
        return c_ == o.c_;
    }

    /// Multiplicative inverse modulo u^{order+1}. The constant term must be
    /// +-q^e; found by Newton refinement s <- s(2 - a s).
    TruncatedSeries inverse() const {
        const QLaurent& a0 = c_[0];
        if (a0.term_count() != 1)
            throw std::domain_error("series inverse: constant term is not a unit");
        auto [e, c] = *a0.terms().begin();
        if (c != 1 && c != -1)
            throw std::domain_error("series inverse: constant term is not a unit");
        TruncatedSeries s(order());
        s.c_[0] = QLaurent::term(c, -e);
        TruncatedSeries two = constant(QLaurent(2), order());
        int precision = 1;
        while (precision <= order()) {
            s = s * (two - *this * s);
            precision *= 2;
        }
        return s;
    }

private:
    void check_order(const TruncatedSeries& o) const {
        if (c_.size() != o.c_.size())
            throw std::invalid_argument("series order mismatch");
    }

    std::vector<QLaurent> c_;
};

} // namespace qaffine
