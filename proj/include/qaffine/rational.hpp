#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

#include "qaffine/bigint.hpp"

namespace qaffine {

/// Exact rational number; denominator kept positive, fraction reduced.
struct Fraction {
    Int num = 0;
    Int den = 1;

    Fraction() = default;
    Fraction(long n) : num(n) {}
    Fraction(Int n, Int d) : num(std::move(n)), den(std::move(d)) { normalize(); }

    void normalize() {
        if (den == 0) throw std::domain_error("zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        Int g = boost::multiprecision::gcd(num < 0 ? Int(-num) : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    bool is_zero() const { return num == 0; }

    friend Fraction operator+(const Fraction& a, const Fraction& b) {
        return Fraction(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Fraction operator-(const Fraction& a, const Fraction& b) {
        return Fraction(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Fraction operator*(const Fraction& a, const Fraction& b) {
        return Fraction(a.num * b.num, a.den * b.den);
    }
    friend Fraction operator/(const Fraction& a, const Fraction& b) {
        if (b.num == 0) throw std::domain_error("division by zero");
        return Fraction(a.num * b.den, a.den * b.num);
    }
    bool operator==(const Fraction& o) const { return num == o.num && den == o.den; }

    std::string str() const {
        return den == 1 ? num.str() : num.str() + "/" + den.str();
    }
};

} // namespace qaffine
