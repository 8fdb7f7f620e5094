#include <gtest/gtest.h>

#include <functional>

#include "qaffine/snakes.hpp"

using namespace qaffine;

namespace {

// All prime snakes of the given length with a fixed starting point,
// enumerated directly from the position windows.
void enumerate_prime_snakes(int rank, size_t len, std::vector<LatticePoint>& cur,
                            const std::function<void(const std::vector<LatticePoint>&)>& visit) {
    if (cur.size() == len) {
        visit(cur);
        return;
    }
    LatticePoint last = cur.back();
    for (int i2 = 1; i2 <= rank; ++i2) {
        int lo = std::abs(i2 - last.i) + 2;
        int hi = std::min(last.i + i2, 2 * rank + 2 - last.i - i2);
        for (int dk = lo; dk <= hi; dk += 2) {
            cur.push_back({i2, last.k + dk});
            enumerate_prime_snakes(rank, len, cur, visit);
            cur.pop_back();
        }
    }
}

} // namespace

TEST(SnakePredicates, Examples) {
    std::vector<LatticePoint> a = {{1, 0}, {1, 2}};
    EXPECT_TRUE(is_snake(a, 2));
    EXPECT_TRUE(is_minimal_snake(a, 2));
    EXPECT_TRUE(is_prime_snake(a, 2));

    std::vector<LatticePoint> b = {{1, 0}, {1, 6}};
    EXPECT_TRUE(is_snake(b, 2));
    EXPECT_FALSE(is_minimal_snake(b, 2));
    EXPECT_FALSE(is_prime_snake(b, 2));

    std::vector<LatticePoint> c = {{2, 0}};
    EXPECT_TRUE(is_snake(c, 3));
    EXPECT_TRUE(is_minimal_snake(c, 3));
    EXPECT_TRUE(is_prime_snake(c, 3));

    EXPECT_THROW(is_snake({{5, 1}}, 3), std::invalid_argument);
    EXPECT_THROW(is_snake({{1, 0}, {1, 3}}, 2), std::invalid_argument); // mixed parity
}

TEST(SnakePredicates, FlipSymmetry) {
    for (int l = 1; l <= 4; ++l)
        for (int i = 1; i <= l; ++i)
            for (int i2 = 1; i2 <= l; ++i2)
                for (int dk = 0; dk <= 2 * l + 4; ++dk) {
                    LatticePoint a{i, 0}, b{i2, dk};
                    LatticePoint fa{l + 1 - i, 0}, fb{l + 1 - i2, dk};
                    EXPECT_EQ(in_prime_snake_position(a, b, l),
                              in_prime_snake_position(fa, fb, l));
                    EXPECT_EQ(in_snake_position(a, b), in_snake_position(fa, fb));
                }
}

TEST(KrHighestWeight, Examples) {
    EXPECT_EQ(kr_highest_weight(1, 0, 0, 1), LoopMonomial::identity(1));
    EXPECT_EQ(kr_highest_weight(1, -1, 2, 1),
              LoopMonomial::Y(1, -1, 1) * LoopMonomial::Y(1, 1, 1));
    EXPECT_EQ(kr_highest_weight(2, 0, 3, 3),
              LoopMonomial::Y(2, 0, 3) * LoopMonomial::Y(2, 2, 3) * LoopMonomial::Y(2, 4, 3));
}

TEST(SnakeOfKr, ExamplesAndPrimeness) {
    EXPECT_EQ(snake_of_kr(1, 0, 1, 1).points, (std::vector<LatticePoint>{{1, 0}}));
    EXPECT_EQ(snake_of_kr(1, 0, 3, 1).points,
              (std::vector<LatticePoint>{{1, 0}, {1, 2}, {1, 4}}));
    for (int l = 1; l <= 4; ++l)
        for (int i = 1; i <= l; ++i)
            for (int r = 1; r <= 4; ++r) {
                Snake s = snake_of_kr(i, i % 2, r, l);
                EXPECT_TRUE(is_prime_snake(s.points, l));
                EXPECT_EQ(s.highest_weight(), kr_highest_weight(i, i % 2, r, l));
            }
}

TEST(NeighbouringSnakes, Examples) {
    // ((1,0),(1,2)) in A_2: first empty, second ((2,1))
    auto [x2, y2] = neighbouring_snakes(make_snake({{1, 0}, {1, 2}}, 2), 2);
    EXPECT_TRUE(x2.empty());
    ASSERT_EQ(y2.length(), 1u);
    EXPECT_EQ(y2.points[0], (LatticePoint{2, 1}));

    // same snake in A_1: both empty
    auto [x1, y1] = neighbouring_snakes(make_snake({{1, 0}, {1, 2}}, 1), 1);
    EXPECT_TRUE(x1.empty());
    EXPECT_TRUE(y1.empty());

    // ((2,0),(2,2)) in A_3: frozen regression values from the two case
    // formulas evaluated by hand
    auto [x3, y3] = neighbouring_snakes(make_snake({{2, 0}, {2, 2}}, 3), 3);
    ASSERT_EQ(x3.length(), 1u);
    EXPECT_EQ(x3.points[0], (LatticePoint{1, 1}));
    ASSERT_EQ(y3.length(), 1u);
    EXPECT_EQ(y3.points[0], (LatticePoint{3, 1}));

    EXPECT_THROW(neighbouring_snakes(make_snake({{1, 0}}, 2), 2), std::invalid_argument);
    EXPECT_THROW(neighbouring_snakes(make_snake({{1, 0}, {1, 6}}, 2), 2),
                 std::invalid_argument); // not prime
}

TEST(NeighbouringSnakes, EmittedSequencesAreSnakesInSameClass) {
    for (int l = 1; l <= 4; ++l) {
        for (int i1 = 1; i1 <= l; ++i1) {
            std::vector<LatticePoint> cur = {{i1, i1 % 2}};
            for (size_t len = 2; len <= 5; ++len) {
                enumerate_prime_snakes(l, len, cur, [&](const std::vector<LatticePoint>& pts) {
                    Snake s{pts, l};
                    auto [xs, ys] = neighbouring_snakes(s, l);
                    EXPECT_TRUE(is_snake(xs.points, l));
                    EXPECT_TRUE(is_snake(ys.points, l));
                    bool cls = in_class_X(pts[0]);
                    for (auto p : xs.points) EXPECT_EQ(in_class_X(p), cls);
                    for (auto p : ys.points) EXPECT_EQ(in_class_X(p), cls);
                });
            }
        }
    }
}

TEST(SnakeText, Grammar) {
    Snake s = make_snake({{1, 0}, {2, 3}, {1, 6}}, 2);
    EXPECT_EQ(s.str(), "1:0,2:3,1:6");
    EXPECT_EQ(parse_points("1:0,2:3,1:6"),
              (std::vector<LatticePoint>{{1, 0}, {2, 3}, {1, 6}}));
    EXPECT_EQ(parse_points("1:-4"), (std::vector<LatticePoint>{{1, -4}}));
    EXPECT_THROW(parse_points("1,2"), std::invalid_argument);
}
