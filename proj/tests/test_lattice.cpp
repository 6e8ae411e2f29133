#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "polyech/lattice.hpp"

using namespace polyech;

TEST_CASE("primitive_of extracts the gcd")
{
    CHECK(primitive_of({3, 0}) == std::make_pair(Direction{1, 0}, (i64)3));
    CHECK(primitive_of({-2, -2}) == std::make_pair(Direction{-1, -1}, (i64)2));
    CHECK(primitive_of({0, 5}) == std::make_pair(Direction{0, 1}, (i64)5));
    CHECK_THROWS_AS(primitive_of({0, 0}), DomainError);
}

TEST_CASE("angle order")
{
    CHECK(angle_less(ExtendedAngle{0, {1, 0}}, ExtendedAngle{0, {0, 1}}));
    CHECK(angle_less(ExtendedAngle{0, {1, 0}}, GenericAngle{0, {1, 0}}));
    CHECK_FALSE(angle_less(ExtendedAngle{1, {-1, 0}}, ExtendedAngle{0, {1, 1}}));
    CHECK(angle_less(GenericAngle{0, {1, 0}}, ExtendedAngle{0, {5, 1}}));
    CHECK(angle_less(ExtendedAngle{0, {0, -1}}, ExtendedAngle{1, {1, 0}}));
}

TEST_CASE("angle order is a strict total order on random mixed angles")
{
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> c(-4, 4), l(-1, 1), e(0, 1);
    std::vector<AngleKey> keys;
    while (keys.size() < 60) {
        Vec v{c(rng), c(rng)};
        if (!is_primitive(v)) continue;
        keys.emplace_back(l(rng), v, e(rng));
    }
    for (auto& a : keys) {
        CHECK_FALSE(angle_less(a, a));
        for (auto& b : keys) {
            if (a == b) continue;
            CHECK(angle_less(a, b) != angle_less(b, a));
            for (auto& d : keys)
                if (angle_less(a, b) && angle_less(b, d)) CHECK(angle_less(a, d));
        }
    }
}

TEST_CASE("plus_pi and gap comparison")
{
    AngleKey a(ExtendedAngle{0, {0, -1}});
    AngleKey b = plus_pi(a);
    CHECK(b.lap == 1);
    CHECK(b.dir == Vec{0, 1});
    CHECK(compare_gap_with_pi(AngleKey(ExtendedAngle{0, {1, 0}}), AngleKey(ExtendedAngle{0, {-1, 0}})) == 0);
    CHECK(compare_gap_with_pi(AngleKey(ExtendedAngle{0, {1, 0}}), AngleKey(ExtendedAngle{0, {-1, -1}})) == 1);
    CHECK(compare_gap_with_pi(AngleKey(ExtendedAngle{0, {1, 0}}), AngleKey(ExtendedAngle{0, {-1, 1}})) == -1);
}

TEST_CASE("lattice points in triangles")
{
    std::vector<Vec> unimod{{0, 0}, {0, 1}, {1, 0}};
    CHECK(lattice_points_in_triangle({0, 0}, {1, 0}, {0, 1}) == unimod);
    auto six = lattice_points_in_triangle({0, 0}, {2, 0}, {0, 2});
    CHECK(six == oracle::triangle_scan({0, 0}, {2, 0}, {0, 2}));
    CHECK(six.size() == 6);
    std::vector<Vec> seg{{0, 0}, {2, 1}};
    CHECK(lattice_points_in_triangle({0, 0}, {2, 1}, {0, 0}) == seg);
}

TEST_CASE("lattice points agree with the bounding-box scan oracle")
{
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> c(-10, 10);
    for (int it = 0; it < 400; ++it) {
        Vec a{c(rng), c(rng)}, b{c(rng), c(rng)}, d{c(rng), c(rng)};
        if (it % 10 == 0) d = a + 2 * (b - a);  // force collinear cases
        REQUIRE(lattice_points_in_triangle(a, b, d) == oracle::triangle_scan(a, b, d));
    }
}

TEST_CASE("hull chains")
{
    std::vector<Vec> r1{{0, 1}, {1, 0}};
    CHECK(hull_chain({{0, 1}, {1, 0}}, {0, 1}, {1, 0}) == r1);
    std::vector<Vec> col{{1, 0}, {2, 1}, {3, 2}};
    CHECK(hull_chain(col, {1, 0}, {3, 2}) == col);
    std::vector<Vec> single{{0, 0}};
    CHECK(hull_chain(single, {0, 0}, {0, 0}) == single);
    CHECK_THROWS_AS(hull_chain({{0, 0}, {2, 0}, {0, 2}, {1, 1}}, {5, 5}, {0, 0}), DomainError);
}

TEST_CASE("hull chain output is convex and encloses the input")
{
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> c(-5, 5);
    for (int it = 0; it < 200; ++it) {
        Vec a{c(rng), c(rng)}, b{c(rng), c(rng)}, d{c(rng), c(rng)};
        if (cross(b - a, d - a) <= 0) continue;
        auto pts = lattice_points_in_triangle(a, b, d);
        pts.erase(std::remove(pts.begin(), pts.end(), b), pts.end());
        if (pts.size() < 2) continue;
        auto ch = hull_chain(pts, a, d);
        REQUIRE(ch.front() == a);
        REQUIRE(ch.back() == d);
        for (std::size_t i = 0; i + 2 < ch.size(); ++i) CHECK(cross(ch[i + 1] - ch[i], ch[i + 2] - ch[i + 1]) >= 0);
        // every point lies left of (or on) each chain edge and of the closing edge d -> a
        std::vector<Vec> loop = ch;
        loop.push_back(a);
        for (const Vec& p : pts)
            for (std::size_t i = 0; i + 1 < loop.size(); ++i) CHECK(cross(loop[i + 1] - loop[i], p - loop[i]) >= 0);
    }
}

TEST_CASE("theta order")
{
    GenericAngle cut{0, {1, 0}};
    // (0,1) comes before (0,0) when viewed from just past angle 0.
    CHECK_FALSE(theta_order_less({0, 0}, {0, 1}, cut));
    CHECK(theta_order_less({0, 1}, {0, 0}, cut));
    CHECK_FALSE(theta_order_less({3, 3}, {3, 3}, cut));
    // tie along the cut direction
    CHECK(theta_order_less({0, 0}, {1, 0}, cut));
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> c(-4, 4);
    std::vector<Vec> pts;
    for (int x = -3; x <= 3; ++x)
        for (int y = -3; y <= 3; ++y) pts.push_back({x, y});
    for (int it = 0; it < 20; ++it) {
        Vec d{c(rng), c(rng)};
        if (!is_primitive(d)) continue;
        GenericAngle g{0, d};
        for (auto& p : pts)
            for (auto& q : pts) {
                if (p == q) continue;
                CHECK(theta_order_less(p, q, g) != theta_order_less(q, p, g));
                for (auto& r : {pts[3], pts[17], pts[40]})
                    if (theta_order_less(p, q, g) && theta_order_less(q, r, g)) CHECK(theta_order_less(p, r, g));
            }
    }
}
