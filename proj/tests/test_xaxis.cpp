#include "doctest.h"
#include "polyech/cycles.hpp"
#include "polyech/differential.hpp"
#include "polyech/flatten.hpp"
#include "polyech/sampling.hpp"
#include "polyech/xaxis.hpp"

using namespace polyech;

namespace {

Chain xg(const std::vector<i64>& seq, const std::vector<std::uint8_t>& lab, i64 n)
{
    auto [g, s] = x_generator(seq, lab, n);
    return Chain(g, s);
}

std::vector<Generator> generators_below(const AdmissiblePath& p)
{
    std::vector<Generator> out;
    for (const auto& q : enumerate_below(p))
        for (auto& g : all_labelings(q)) out.push_back(std::move(g));
    return out;
}

}  // namespace

TEST_CASE("slot form round trip")
{
    Rng rng(2);
    for (int t = 0; t < 200; ++t) {
        Generator g = random_x_generator(rng, 1 + t % 3, 4);
        SlotForm f = slot_form(g);
        CHECK(xg(f.seq, f.labels, g.path.kind.n) == f.sign * Chain(g));
    }
    // A single 'h' on the lap-0 right edge is first canonically and last by slot.
    auto g = x_generator({2, 0, 1, 0}, {1, 0, 0, 1}, 2);
    CHECK(g.second == -1);
}

TEST_CASE("splice example")
{
    Chain s = splice(xg({1, 0}, {0, 0}, 1));
    Chain want;
    for (i64 i = 0; i <= 1; ++i)
        for (i64 j = 0; j <= 1; ++j) want += xg({1, i, i + j + 1, j}, {0, 1, 1, 0}, 2);
    CHECK(s == want);
    CHECK(s.size() == 4);
}

TEST_CASE("splice preserves the index and lowers j by two")
{
    Rng rng(6);
    for (int t = 0; t < 300; ++t) {
        Generator g = random_x_generator(rng, 1 + t % 3, 4);
        Chain s = splice(g);
        for (const auto& [b, c] : s.terms()) {
            CHECK(c == 1);
            CHECK(index(b) == index(g));
            CHECK(j_grading(b) == j_grading(g) - 2);
            CHECK(b.path.kind.n == g.path.kind.n + 1);
        }
        CHECK(differential(s) == splice(differential(g)));
    }
}

TEST_CASE("SU = US with the corners rounded by U")
{
    Rng rng(31);
    for (int t = 0; t < 300; ++t) {
        i64 n = 1 + t % 3;
        Generator g = random_x_generator(rng, n, 4);
        Chain lhs = splice(u_map(g, slot_corner_cut(2 * n - 1)));
        Chain rhs = u_map(splice(g), slot_corner_cut(2 * n));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("theta order of the pentagon points")
{
    auto pent = n_convex({{0, 0}, {2, 0}, {3, 2}, {1, 3}, {0, 1}}, 1);
    GenericAngle cut{0, {1, 0}};
    auto pts = theta_sorted(enclosed_points(pent), cut);
    std::vector<Vec> want{{1, 3}, {1, 2}, {2, 2}, {3, 2}, {0, 1}, {1, 1}, {2, 1}, {0, 0}, {1, 0}, {2, 0}};
    CHECK(pts == want);
    auto b = block_edges(pts, pts[7], pts[2]);
    std::vector<std::pair<Direction, i64>> inner{{{2, 1}, 1}, {{1, 1}, 1}, {{-1, 0}, 1}};
    CHECK(b == inner);
}

TEST_CASE("flattening maps E and H to E and H")
{
    Rng rng(3);
    for (int t = 0; t < 30; ++t) {
        i64 n = 1 + t % 2;
        AdmissiblePath lam = random_n_convex(rng, 3, n);
        i64 k = (i64)enclosed_points(lam).size();
        AdmissiblePath lam0 = x_axis_convex(k, n);
        GenericAngle cut{t % n, t % 3 == 0 ? Direction{1, 0} : t % 3 == 1 ? Direction{2, 1} : Direction{-1, 3}};
        CHECK(flatten(e_cycle(lam0), lam0, lam, cut) == e_cycle(lam));
        CHECK(flatten(h_cycle(lam0), lam0, lam, cut) == h_cycle(lam));
    }
}

TEST_CASE("flattening onto the x-axis itself is the identity")
{
    for (i64 n = 1; n <= 2; ++n)
        for (i64 k = 1; k <= 3; ++k) {
            auto lam0 = x_axis_convex(k, n);
            for (const auto& g : generators_below(lam0))
                CHECK(flatten(g, lam0, lam0, GenericAngle{0, {1, 0}}) == Chain(g));
        }
}

TEST_CASE("flattening is a chain map")
{
    Rng rng(19);
    for (int t = 0; t < 8; ++t) {
        i64 n = 1 + t % 2;
        auto poly = random_polygon(rng, 2, 4);
        if (polygon_lattice_points(poly).size() > (n == 1 ? 5u : 4u)) continue;
        AdmissiblePath lam = n_convex(poly, n);
        i64 k = (i64)enclosed_points(lam).size();
        AdmissiblePath lam0 = x_axis_convex(k, n);
        GenericAngle cut{0, t % 2 ? Direction{1, 2} : Direction{-2, -1}};
        for (const auto& g : generators_below(lam0)) {
            Chain f = flatten(g, lam0, lam, cut);
            CHECK(differential(f) == flatten(differential(g), lam0, lam, cut));
            for (const auto& [b, c] : f.terms()) {
                CHECK(index(b) == index(g));
                CHECK(b.num_h() == g.num_h());
                CHECK(leq(b.path, lam));
            }
        }
    }
}
