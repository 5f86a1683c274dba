#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "frieze/orbit.hpp"

using namespace frieze;

namespace {

Quiver quiver(int n, const std::vector<Arrow>& arrows) { return load_quiver(n, arrows).quiver; }

Quiver a2() { return quiver(2, {{2, 1, 1}}); }
Quiver kronecker() { return quiver(2, {{2, 1, 2}}); }
Quiver a3_double() { return quiver(3, {{2, 1, 2}, {3, 2, 2}}); }

Point pt(std::initializer_list<long> xs) {
    Point p;
    for (long x : xs) p.push_back(Rational(x));
    return p;
}

std::mt19937 rng(7100);

Quiver random_quiver(int max_n) {
    int n = 2 + static_cast<int>(rng() % (max_n - 1));
    std::vector<Arrow> arrows;
    for (int i = 2; i <= n; ++i)
        for (int j = 1; j < i; ++j)
            if (rng() % 2) arrows.push_back({i, j, 1});
    return load_quiver(n, arrows).quiver;
}

Point random_positive_point(int n) {
    Point p;
    for (int i = 0; i < n; ++i)
        p.push_back(make_rational(1 + static_cast<int>(rng() % 5),
                                  1 + static_cast<int>(rng() % 4)));
    return p;
}

}  // namespace

TEST_CASE("A2 orbit: five points, then it repeats") {
    OrbitRecord r = iterate(a2(), pt({1, 1}), 5);
    REQUIRE(r.points.size() == 6);
    CHECK(r.points[0] == pt({1, 1}));
    CHECK(r.points[1] == pt({2, 3}));
    CHECK(r.points[2] == pt({2, 1}));
    CHECK(r.points[3] == pt({1, 2}));
    CHECK(r.points[4] == pt({3, 2}));
    CHECK(r.points[5] == pt({1, 1}));
    CHECK(r.period == 5);
}

TEST_CASE("Kronecker orbit prefix and monotone growth") {
    OrbitRecord r = iterate(kronecker(), pt({1, 1}), 20);
    CHECK(r.points[1] == pt({2, 5}));
    CHECK(r.points[2] == pt({13, 34}));
    CHECK_FALSE(detect_period(r).has_value());
    for (std::size_t t = 1; t < r.points.size(); ++t) {
        CHECK(r.points[t][0] > r.points[t - 1][0]);
        CHECK(r.points[t][1] > r.points[t - 1][1]);
    }
}

TEST_CASE("double-arrow A3 first step") {
    OrbitRecord r = iterate(a3_double(), pt({1, 1, 1}), 1);
    CHECK(r.points[1] == pt({2, 5, 26}));
}

TEST_CASE("detect_period") {
    CHECK(detect_period(iterate(a2(), pt({1, 1}), 10)) == 5);
    // A3 path quiver has period 6 from the all-ones point.
    Quiver a3 = quiver(3, {{2, 1, 1}, {3, 2, 1}});
    CHECK(detect_period(iterate(a3, pt({1, 1, 1}), 12)) == 6);
    // Starting elsewhere on the A2 cycle gives the same period.
    CHECK(detect_period(iterate(a2(), pt({2, 1}), 10)) == 5);
    // Single vertex: x -> 2/x swings with period 2 (the recurrence has no
    // rational fixed point, so period 1 is unreachable here).
    Quiver single(1, {{0}});
    CHECK(detect_period(iterate(single, pt({1}), 6)) == 2);
    CHECK(detect_period(iterate(single, pt({3}), 6)) == 2);
}

TEST_CASE("zero start and non-generic stops") {
    CHECK_THROWS_AS(iterate(a2(), pt({0, 1}), 1), ZeroStartCoordinate);

    // (-1, 1): the first exchange gives (1 + 1)/(-1) = -2, then
    // f2 = (1 + f1')/f2; engineered negative starts can reach zero.
    OrbitRecord r = iterate(a2(), pt({-1, 1}), 5);
    // f1(1) = (1+1)/(-1) = -2, f2(1) = (1-2)/1 = -1 -> P1=(-2,-1)
    // f1(2) = (1-1)/(-2) = 0: non-generic at step 2, vertex 1.
    REQUIRE(r.failure.has_value());
    CHECK(r.failure->step == 2);
    CHECK(r.failure->vertex == 1);
    CHECK(r.points.size() == 2);
    CHECK(r.generic_up_to == 2);
}

TEST_CASE("bit budget") {
    CHECK_THROWS_AS(iterate(kronecker(), pt({1, 1}), 2000, 64), BudgetExceeded);
}

TEST_CASE("inverse steps recover recorded points") {
    CHECK(inverse_step(a2(), pt({2, 3})) == pt({1, 1}));
    CHECK(inverse_step(kronecker(), pt({13, 34})) == pt({2, 5}));
    CHECK(inverse_step(a3_double(), pt({2, 5, 26})) == pt({1, 1, 1}));
}

TEST_CASE("property: inverse_step round trip on random positive points") {
    for (int trial = 0; trial < 100; ++trial) {
        Quiver q = random_quiver(5);
        Point p = random_positive_point(q.n());
        OrbitRecord r = iterate(q, p, 1);
        REQUIRE_FALSE(r.failure.has_value());
        CHECK(inverse_step(q, r.points[1]) == p);
    }
}

TEST_CASE("property: positivity is preserved") {
    for (int trial = 0; trial < 50; ++trial) {
        Quiver q = random_quiver(5);
        // Dense wild quivers gain bits per step at a much higher rate.
        long steps = q.arrows().size() > static_cast<std::size_t>(q.n()) ? 4 : 6;
        OrbitRecord r = iterate(q, random_positive_point(q.n()), steps, 1'000'000);
        REQUIRE_FALSE(r.failure.has_value());
        for (const Point& p : r.points)
            for (const Rational& c : p) CHECK(c > 0);
    }
}
