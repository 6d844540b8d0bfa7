#include <doctest.h>

#include <cmath>
#include <random>

#include "chewlab/errors.hpp"
#include "chewlab/geometry.hpp"
#include "chewlab/predicates.hpp"

using namespace chewlab;

TEST_CASE("circumcircle on known triangles") {
    const Circle c1 = circumcircle({0, 0}, {1, 0}, {0, 1});
    CHECK(c1.center.x == doctest::Approx(0.5));
    CHECK(c1.center.y == doctest::Approx(0.5));
    CHECK(c1.radius == doctest::Approx(std::sqrt(2.0) / 2.0));

    const Circle c2 = circumcircle({-1, 0}, {1, 0}, {0, 1});
    CHECK(c2.center.x == doctest::Approx(0.0));
    CHECK(c2.center.y == doctest::Approx(0.0));
    CHECK(c2.radius == doctest::Approx(1.0));

    // Perpendicular-bisector intersection solved by hand: bisector of
    // (0,0)-(4,0) is x = 2; bisector of (0,0)-(1,3) gives y = (10-2x)/6 = 1.
    const Circle c3 = circumcircle({0, 0}, {4, 0}, {1, 3});
    CHECK(c3.center.x == doctest::Approx(2.0));
    CHECK(c3.center.y == doctest::Approx(1.0));
    CHECK(c3.radius == doctest::Approx(std::sqrt(5.0)));

    CHECK_THROWS_AS(circumcircle({0, 0}, {1, 1}, {2, 2}), DegenerateTriangleError);
}

TEST_CASE("circumcircle passes through its vertices within tolerance") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-100.0, 100.0);
    for (int i = 0; i < 2000; ++i) {
        const Point a{u(rng), u(rng)}, b{u(rng), u(rng)}, c{u(rng), u(rng)};
        if (orient(a, b, c) == 0) continue;
        const Circle cc = circumcircle(a, b, c);
        CHECK(cc.contains_on_boundary(a));
        CHECK(cc.contains_on_boundary(b));
        CHECK(cc.contains_on_boundary(c));
    }
}

TEST_CASE("incircle agrees with circumcircle distances away from the boundary") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    for (int i = 0; i < 5000; ++i) {
        Point a{u(rng), u(rng)}, b{u(rng), u(rng)}, c{u(rng), u(rng)}, p{u(rng), u(rng)};
        if (orient(a, b, c) == 0) continue;
        if (orient(a, b, c) < 0) std::swap(b, c);
        const Circle cc = circumcircle(a, b, c);
        const double gap = cc.radius - distance(p, cc.center);
        if (std::abs(gap) <= 10.0 * on_circle_tolerance(cc.radius)) continue;
        CHECK(incircle(a, b, c, p) == (gap > 0 ? 1 : -1));
    }
}

TEST_CASE("circle segment intersections") {
    const Circle unit{{0, 0}, 1.0};
    auto hits = circle_segment_intersections(unit, {-2, 0}, {2, 0});
    REQUIRE(hits.size() == 2);
    CHECK(hits[0].x == doctest::Approx(-1.0));
    CHECK(hits[1].x == doctest::Approx(1.0));

    hits = circle_segment_intersections(unit, {-2, 1}, {2, 1});
    REQUIRE(hits.size() == 1);
    CHECK(hits[0].x == doctest::Approx(0.0));
    CHECK(hits[0].y == doctest::Approx(1.0));

    hits = circle_segment_intersections(unit, {-2, 3}, {2, 3});
    CHECK(hits.empty());

    // Clipped by the segment range.
    hits = circle_segment_intersections(unit, {0, 0}, {2, 0});
    REQUIRE(hits.size() == 1);
    CHECK(hits[0].x == doctest::Approx(1.0));
}

TEST_CASE("arc between points on a circle") {
    const Circle unit{{0, 0}, 1.0};
    const Arc quarter = arc_between(unit, {1, 0}, {0, 1}, Orientation::counterclockwise);
    CHECK(quarter.length() == doctest::Approx(kPi / 2));
    const Arc rest = arc_between(unit, {1, 0}, {0, 1}, Orientation::clockwise);
    CHECK(rest.length() == doctest::Approx(3 * kPi / 2));
    const Arc zero = arc_between(unit, {1, 0}, {1, 0}, Orientation::clockwise);
    CHECK(zero.length() == 0.0);
    CHECK_THROWS_AS(arc_between(unit, {1, 0}, {0.5, 0.5}, Orientation::clockwise),
                    OffCircleError);
}

TEST_CASE("arc sweep complements add to full circle") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> ang(0.0, kTwoPi);
    std::uniform_real_distribution<double> rad(0.1, 50.0);
    for (int i = 0; i < 5000; ++i) {
        const Circle c{{ang(rng), ang(rng)}, rad(rng)};
        const double a1 = ang(rng), a2 = ang(rng);
        const Point p{c.center.x + c.radius * std::cos(a1),
                      c.center.y + c.radius * std::sin(a1)};
        const Point q{c.center.x + c.radius * std::cos(a2),
                      c.center.y + c.radius * std::sin(a2)};
        if (p == q) continue;
        for (auto dir : {Orientation::clockwise, Orientation::counterclockwise}) {
            const double total =
                arc_between(c, p, q, dir).length() + arc_between(c, q, p, dir).length();
            CHECK(total == doctest::Approx(kTwoPi * c.radius).epsilon(1e-9));
        }
    }
}

TEST_CASE("snail curve lengths") {
    const SnailCurve s1 = snail_curve({0, 0}, {1, 0});
    CHECK(s1.length == doctest::Approx(1.0 + 1.5 * kPi));
    CHECK(s1.tangent_circle.center.x == doctest::Approx(1.0));
    CHECK(s1.tangent_circle.center.y == doctest::Approx(1.0));
    CHECK(s1.vertical_top.x == doctest::Approx(0.0));
    CHECK(s1.vertical_top.y == doctest::Approx(1.0));

    CHECK(snail_curve({0, 0}, {2, 0}).length == doctest::Approx(2.0 * (1.0 + 1.5 * kPi)));
    CHECK(snail_curve({3, 1}, {3.5, 1}).length == doctest::Approx(0.5 * (1.0 + 1.5 * kPi)));
    CHECK_THROWS_AS(snail_curve({1, 0}, {0, 0}), InvalidPairError);
    CHECK_THROWS_AS(snail_curve({0, 0}, {1, 1}), InvalidPairError);
}

TEST_CASE("snail curve translation invariance and linear scaling") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(-20.0, 20.0);
    std::uniform_real_distribution<double> w(0.01, 10.0);
    for (int i = 0; i < 2000; ++i) {
        const double x0 = u(rng), y0 = u(rng), dx = w(rng), s = w(rng);
        const double base = snail_curve({0, 0}, {dx, 0}).length;
        const double moved = snail_curve({x0, y0}, {x0 + dx, y0}).length;
        CHECK(moved == doctest::Approx(base).epsilon(1e-12));
        const double scaled = snail_curve({0, 0}, {s * dx, 0}).length;
        CHECK(scaled == doctest::Approx(s * base).epsilon(1e-12));
    }
}

TEST_CASE("snail polyline length converges to the closed form") {
    const SnailCurve s = snail_curve({-2, 1.5}, {3, 1.5});
    const auto pts = s.polyline(4096);
    double len = 0.0;
    for (size_t i = 1; i < pts.size(); ++i) len += distance(pts[i - 1], pts[i]);
    CHECK(len == doctest::Approx(s.length).epsilon(1e-6));
}
