#include <gtest/gtest.h>

#include "qaffine/qlaurent.hpp"

using namespace qaffine;

namespace {

QLaurent q(int e) { return QLaurent::q_power(e); }

// Ordinary binomial coefficient, the q=1 oracle.
Int binom(int n, int k) {
    Int r = 1;
    for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

} // namespace

TEST(QNumber, SmallValues) {
    EXPECT_TRUE(q_number(0).is_zero());
    EXPECT_EQ(q_number(1), QLaurent(1));
    EXPECT_EQ(q_number(3), q(2) + QLaurent(1) + q(-2));
    EXPECT_EQ(q_number(-3), -q_number(3));
}

TEST(QNumber, MatchesDefiningFraction) {
    // [n]_q (q - q^-1) == q^n - q^-n
    for (int n = 0; n <= 12; ++n) {
        QLaurent lhs = q_number(n) * (q(1) - q(-1));
        EXPECT_EQ(lhs, q(n) - q(-n)) << "n=" << n;
    }
}

TEST(QFactorial, SmallValues) {
    EXPECT_EQ(q_factorial(0), QLaurent(1));
    EXPECT_EQ(q_factorial(2), q(1) + q(-1));
    EXPECT_EQ(q_factorial(3), (q(1) + q(-1)) * (q(2) + QLaurent(1) + q(-2)));
    EXPECT_THROW(q_factorial(-1), std::invalid_argument);
}

TEST(QBinomial, FrozenValues) {
    EXPECT_EQ(q_binomial(5, 0), QLaurent(1));
    EXPECT_EQ(q_binomial(2, 1), q(1) + q(-1));
    EXPECT_EQ(q_binomial(4, 2), q(4) + q(2) + QLaurent(2) + q(-2) + q(-4));
    EXPECT_THROW(q_binomial(2, 3), std::invalid_argument);
    EXPECT_THROW(q_binomial(2, -1), std::invalid_argument);
}

TEST(QBinomial, FactorialIdentityCrossMultiplied) {
    // [n,k] [k]! [n-k]! == [n]!  -- the defining identity, division free.
    for (int n = 0; n <= 10; ++n)
        for (int k = 0; k <= n; ++k) {
            QLaurent lhs = q_binomial(n, k) * q_factorial(k) * q_factorial(n - k);
            EXPECT_EQ(lhs, q_factorial(n)) << "n=" << n << " k=" << k;
        }
}

TEST(QBinomial, PascalIdentity) {
    for (int r = 1; r <= 15; ++r)
        for (int k = 0; k <= r; ++k) {
            QLaurent rhs = q(-k) * ((k <= r - 1) ? q_binomial(r - 1, k) : QLaurent());
            if (k >= 1) rhs += q(r - k) * q_binomial(r - 1, k - 1);
            EXPECT_EQ(q_binomial(r, k), rhs) << "r=" << r << " k=" << k;
        }
}

TEST(QBinomial, AlternatingSumIdentity) {
    for (int r = 1; r <= 15; ++r) {
        QLaurent sum;
        for (int k = 0; k <= r; ++k) {
            QLaurent t = q_binomial(r, k) * q((1 - r) * k);
            sum += (k % 2 == 0) ? t : -t;
        }
        EXPECT_TRUE(sum.is_zero()) << "r=" << r;
    }
}

TEST(QBinomial, SymmetryAndBarInvariance) {
    for (int n = 0; n <= 12; ++n)
        for (int k = 0; k <= n; ++k) {
            EXPECT_EQ(q_binomial(n, k), q_binomial(n, n - k));
            EXPECT_EQ(q_binomial(n, k), q_binomial(n, k).bar());
        }
}

TEST(QBinomial, SpecializationAtOne) {
    for (int n = 0; n <= 12; ++n)
        for (int k = 0; k <= n; ++k)
            EXPECT_EQ(q_binomial(n, k).eval_at_one(), binom(n, k));
}

TEST(QLaurentRing, Axioms) {
    std::vector<QLaurent> sample = {QLaurent(), QLaurent(1), q(2) - q(-3),
                                    q_number(4), QLaurent(-7) * q(1) + QLaurent(2)};
    for (const auto& a : sample)
        for (const auto& b : sample) {
            EXPECT_EQ(a + b, b + a);
            EXPECT_EQ(a * b, b * a);
            EXPECT_EQ(a * QLaurent(1), a);
            for (const auto& c : sample) {
                EXPECT_EQ((a + b) + c, a + (b + c));
                EXPECT_EQ((a * b) * c, a * (b * c));
                EXPECT_EQ(a * (b + c), a * b + a * c);
            }
        }
}

TEST(QLaurentText, Rendering) {
    EXPECT_EQ((q(2) + QLaurent(1) + q(-2)).str(), "q^2 + 1 + q^-2");
    EXPECT_EQ(QLaurent().str(), "0");
    EXPECT_EQ((q(1) - q(-1)).str(), "q - q^-1");
    EXPECT_EQ((QLaurent(-2) * q(3)).str(), "-2*q^3");
}

TEST(TruncatedSeries, ProductAndIdentity) {
    // (1 + u)(1 - u) = 1 - u^2 at order 2
    TruncatedSeries a(2), b(2);
    a.at(0) = QLaurent(1);
    a.at(1) = QLaurent(1);
    b.at(0) = QLaurent(1);
    b.at(1) = QLaurent(-1);
    TruncatedSeries p = a * b;
    EXPECT_EQ(p.at(0), QLaurent(1));
    EXPECT_TRUE(p.at(1).is_zero());
    EXPECT_EQ(p.at(2), QLaurent(-1));

    TruncatedSeries one = TruncatedSeries::constant(QLaurent(1), 2);
    EXPECT_EQ(one * a, a);

    TruncatedSeries wrong(3);
    EXPECT_THROW(a * wrong, std::invalid_argument);
}

TEST(TruncatedSeries, GeometricInverseMatchesTermFormula) {
    // (1 - q^3 u)^{-1} = sum_k q^{3k} u^k, with the inverse obtained by
    // Newton refinement.
    const int N = 10;
    TruncatedSeries d(N);
    d.at(0) = QLaurent(1);
    d.at(1) = -q(3);
    TruncatedSeries inv = d.inverse();
    for (int k = 0; k <= N; ++k)
        EXPECT_EQ(inv.at(k), q(3 * k)) << "k=" << k;
    EXPECT_EQ(d * inv, TruncatedSeries::constant(QLaurent(1), N));
}
