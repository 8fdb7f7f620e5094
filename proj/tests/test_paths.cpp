#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "qaffine/paths.hpp"

using namespace qaffine;

namespace {

LoopMonomial Y(int i, int k, int l, int e = 1) { return LoopMonomial::Y(i, k, l, e); }

Int binom(int n, int k) {
    Int r = 1;
    for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

Snake random_snake(std::mt19937& rng, int rank, int max_len) {
    std::uniform_int_distribution<int> len(1, max_len), node(1, rank), slack(0, 2);
    int n = len(rng);
    std::vector<LatticePoint> pts;
    int i = node(rng);
    pts.push_back({i, i % 2});
    for (int t = 1; t < n; ++t) {
        int i2 = node(rng);
        int dk = std::abs(i2 - pts.back().i) + 2 + 2 * slack(rng);
        pts.push_back({i2, pts.back().k + dk});
    }
    return make_snake(std::move(pts), rank);
}

// weight -> total multiplicity, the restricted character
std::map<WeightVector, Int> weight_multiplicities(const LoopPolynomial& p) {
    std::map<WeightVector, Int> mult;
    for (const auto& [m, c] : p.terms()) mult[wt(m)] += c;
    return mult;
}

WeightVector simple_reflection(const WeightVector& v, int i, int l) {
    // s_i(lambda) = lambda - lambda_i * alpha_i in fundamental-weight coordinates
    WeightVector r = v;
    long long li = v[i - 1];
    r[i - 1] -= 2 * li;
    if (i > 1) r[i - 2] += li;
    if (i < l) r[i] += li;
    return r;
}

} // namespace

TEST(EnumeratePaths, CardinalityIsBinomial) {
    EXPECT_EQ(enumerate_paths(1, 0, 1).size(), 2u);
    EXPECT_EQ(enumerate_paths(1, 0, 2).size(), 3u);
    EXPECT_EQ(enumerate_paths(2, 0, 3).size(), 6u);
    for (int l = 1; l <= 6; ++l)
        for (int i = 1; i <= l; ++i)
            EXPECT_EQ(Int(enumerate_paths(i, i % 2, l).size()), binom(l + 1, i));
}

TEST(Corners, Examples) {
    // dominant path: descend to column i, then ascend
    const int l = 3, i = 2, k = 0;
    Path dom{l, {i, k}, {}};
    for (int x = 0; x <= i; ++x) dom.heights.push_back(i + k - x);
    for (int x = i + 1; x <= l + 1; ++x) dom.heights.push_back(k + (x - i));
    auto c = corners(dom);
    ASSERT_EQ(c.upper.size(), 1u);
    EXPECT_EQ(c.upper[0], (LatticePoint{i, k}));
    EXPECT_TRUE(c.lower.empty());
    EXPECT_EQ(path_monomial(dom), Y(i, k, l));

    Path up{1, {1, 0}, {1, 2, 1}};
    auto cu = corners(up);
    EXPECT_TRUE(cu.upper.empty());
    ASSERT_EQ(cu.lower.size(), 1u);
    EXPECT_EQ(cu.lower[0], (LatticePoint{1, 2}));
    EXPECT_EQ(path_monomial(up), Y(1, 2, 1, -1));

    Path mid{2, {1, 0}, {1, 2, 1, 2}};
    EXPECT_EQ(path_monomial(mid), Y(2, 1, 2) * Y(1, 2, 2, -1));
}

TEST(QCharacter, FundamentalExamples) {
    // single point (1,k) in A_1
    for (int k : {-1, 1, 3}) {
        LoopPolynomial expect(1);
        expect.add_term(Y(1, k, 1), 1);
        expect.add_term(Y(1, k + 2, 1, -1), 1);
        EXPECT_EQ(q_character(make_snake({{1, k}}, 1)), expect);
    }

    // single point (1,0) in A_2
    LoopPolynomial expect2(2);
    expect2.add_term(Y(1, 0, 2), 1);
    expect2.add_term(Y(1, 2, 2, -1) * Y(2, 1, 2), 1);
    expect2.add_term(Y(2, 3, 2, -1), 1);
    EXPECT_EQ(q_character(make_snake({{1, 0}}, 2)), expect2);

    // the KR snake ((1,0),(1,2)) in A_1
    LoopPolynomial expect3(1);
    expect3.add_term(Y(1, 0, 1) * Y(1, 2, 1), 1);
    expect3.add_term(Y(1, 0, 1) * Y(1, 4, 1, -1), 1);
    expect3.add_term(Y(1, 2, 1, -1) * Y(1, 4, 1, -1), 1);
    EXPECT_EQ(q_character(make_snake({{1, 0}, {1, 2}}, 1)), expect3);

    EXPECT_THROW(q_character(Snake{{{1, 0}, {1, 1}}, 2}), std::invalid_argument);
}

TEST(QCharacter, FundamentalDimensionTotals) {
    for (int l = 1; l <= 6; ++l)
        for (int i = 1; i <= l; ++i) {
            LoopPolynomial chi = q_character(make_snake({{i, i % 2}}, l));
            EXPECT_EQ(chi.coefficient_sum(), binom(l + 1, i));
            EXPECT_EQ(Int(chi.term_count()), binom(l + 1, i));
        }
}

TEST(QCharacter, ThinSpecialOnRandomSnakes) {
    std::mt19937 rng(23);
    for (int t = 0; t < 60; ++t) {
        int l = 1 + t % 4;
        Snake s = random_snake(rng, l, 5);
        LoopPolynomial chi = q_character(s);
        EXPECT_TRUE(chi.all_coefficients_one()) << s.str();
        auto dom = chi.dominant_monomials();
        auto anti = chi.antidominant_monomials();
        ASSERT_EQ(dom.size(), 1u) << s.str();
        EXPECT_EQ(anti.size(), 1u) << s.str();
        EXPECT_EQ(dom[0], s.highest_weight()) << s.str();
    }
}

TEST(QCharacter, HighestWeightFactorization) {
    std::mt19937 rng(29);
    for (int t = 0; t < 30; ++t) {
        int l = 1 + t % 4;
        Snake s = random_snake(rng, l, 4);
        LoopPolynomial chi = q_character(s);
        LoopMonomial top = s.highest_weight();
        for (const auto& [m, c] : chi.terms()) {
            auto f = factor_into_roots(m, top);
            ASSERT_TRUE(f.has_value()) << s.str() << " | " << m.str();
            for (const auto& [p, e] : *f) EXPECT_LE(e, 0);
        }
    }
}

TEST(QCharacter, WeylSymmetryOfRestrictedCharacter) {
    std::mt19937 rng(31);
    for (int t = 0; t < 24; ++t) {
        int l = 1 + t % 4;
        Snake s = random_snake(rng, l, 4);
        auto mult = weight_multiplicities(q_character(s));
        for (int i = 1; i <= l; ++i) {
            std::map<WeightVector, Int> reflected;
            for (const auto& [w, c] : mult) reflected[simple_reflection(w, i, l)] += c;
            EXPECT_EQ(reflected, mult) << s.str() << " s_" << i;
        }
    }
}

TEST(QCharacter, InjectivityOnSmallSnakes) {
    // distinct snakes of length <= 3 in A_2 within a bounded window give
    // distinct characters
    const int l = 2;
    std::vector<std::vector<LatticePoint>> all;
    std::vector<LatticePoint> window;
    for (int i = 1; i <= l; ++i)
        for (int k = -2; k <= 8; ++k)
            if ((i - k) % 2 == 0) window.push_back({i, k});
    for (auto a : window) {
        all.push_back({a});
        for (auto b : window) {
            if (!in_snake_position(a, b)) continue;
            all.push_back({a, b});
            for (auto c : window)
                if (in_snake_position(b, c)) all.push_back({a, b, c});
        }
    }
    std::map<std::string, std::string> seen; // character text -> snake text
    for (const auto& pts : all) {
        Snake s = make_snake(pts, l);
        std::string chi = q_character(s).str();
        auto [it, inserted] = seen.try_emplace(chi, s.str());
        EXPECT_TRUE(inserted) << "collision: " << s.str() << " vs " << it->second;
    }
    EXPECT_GT(seen.size(), 100u);
}

TEST(Moves, ExamplesAndInvolution) {
    Path dom{1, {1, 0}, {1, 0, 1}};
    auto lowered = lower_move(dom, {1, 1});
    ASSERT_TRUE(lowered.has_value());
    EXPECT_EQ(lowered->heights, (std::vector<int>{1, 2, 1}));
    EXPECT_EQ(path_monomial(*lowered), Y(1, 2, 1, -1));

    EXPECT_FALSE(lower_move(dom, {1, 3}).has_value());
    EXPECT_FALSE(raise_move(dom, {1, 1}).has_value());

    auto back = raise_move(*lowered, {1, 1});
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(*back, dom);
}

TEST(Moves, MonomialCompatibilityLemma) {
    // every eligible move multiplies the path monomial by the inverse root
    // (lowering) or the root (raising)
    for (int l = 1; l <= 4; ++l)
        for (int i = 1; i <= l; ++i) {
            int k = i % 2;
            for (const Path& p : enumerate_paths(i, k, l)) {
                for (int a = 1; a <= l; ++a)
                    for (int b = k - l - 2; b <= k + l + 2; ++b) {
                        if (auto low = lower_move(p, {a, b})) {
                            EXPECT_EQ(path_monomial(*low),
                                      path_monomial(p) * affine_root(a, b, l).inverse());
                            auto up = raise_move(*low, {a, b});
                            ASSERT_TRUE(up.has_value());
                            EXPECT_EQ(*up, p);
                        }
                        if (auto up = raise_move(p, {a, b})) {
                            EXPECT_EQ(path_monomial(*up),
                                      path_monomial(p) * affine_root(a, b, l));
                        }
                    }
            }
        }
}
