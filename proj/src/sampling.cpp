#include "polyech/sampling.hpp"

#include <algorithm>

namespace polyech {

std::vector<Vec> random_polygon(Rng& rng, i64 B, std::size_t max_pts)
{
    std::uniform_int_distribution<i64> c(0, B);
    std::uniform_int_distribution<std::size_t> cnt(1, max_pts);
    std::vector<Vec> pts(cnt(rng));
    for (auto& p : pts) p = {c(rng), c(rng)};
    return convex_hull(pts);
}

AdmissiblePath random_n_convex(Rng& rng, i64 B, i64 n) { return n_convex(random_polygon(rng, B), n); }

AdmissiblePath random_descent(Rng& rng, AdmissiblePath p, int max_steps)
{
    std::uniform_int_distribution<int> steps(0, max_steps);
    int k = steps(rng);
    for (int i = 0; i < k; ++i) {
        std::vector<Corner> cs;
        for (const Corner& c : corners(p))
            if (c.roundable()) cs.push_back(c);
        if (cs.empty()) break;
        p = round_corner(p, pick(rng, cs));
    }
    return p;
}

// A short random descent keeps the sample cheap while reaching kinks.
AdmissiblePath random_closed(Rng& rng, i64 B, i64 n) { return random_descent(rng, random_n_convex(rng, B, n), 6); }

AdmissiblePath random_periodic(Rng& rng, i64 B, i64 n)
{
    std::uniform_int_distribution<i64> side(1, std::max<i64>(B, 1)), per(1, 2);
    AdmissiblePath p = box_path(side(rng), side(rng), per(rng), n);
    std::uniform_int_distribution<int> which(0, 2);
    static const Mat2 shears[] = {{1, 0, 0, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}};
    p = act_symmetry(p, shears[which(rng)], 0);
    return random_descent(rng, p, 6);
}

namespace {

std::vector<Vec> polygon_with_edges(Rng& rng, i64 B, std::size_t min_vertices)
{
    for (int tries = 0; tries < 1000; ++tries) {
        auto h = random_polygon(rng, B, 6);
        if (h.size() >= min_vertices) return h;
    }
    return {{0, 0}, {1, 0}, {0, 1}};
}

}  // namespace

AdmissiblePath random_open_distinct(Rng& rng, i64 B)
{
    auto h = polygon_with_edges(rng, B, 2);
    std::size_t m = h.size();
    std::uniform_int_distribution<std::size_t> s(0, m - 1), len(1, m - 1);
    std::size_t start = s(rng), l = len(rng);
    std::vector<Vec> chain;
    for (std::size_t i = 0; i <= l; ++i) chain.push_back(h[(start + i) % m]);
    return random_descent(rng, open_chain(chain), 4);
}

AdmissiblePath random_open_closed_up(Rng& rng, i64 B)
{
    auto h = polygon_with_edges(rng, B, 2);
    std::size_t m = h.size();
    std::uniform_int_distribution<std::size_t> s(0, m - 1);
    std::size_t start = s(rng);
    std::vector<Vec> chain;
    for (std::size_t i = 0; i <= m; ++i) chain.push_back(h[(start + i) % m]);
    return random_descent(rng, open_chain(chain), 4);
}

Generator random_x_generator(Rng& rng, i64 n, i64 M)
{
    std::uniform_int_distribution<i64> c(0, M);
    std::vector<i64> seq(2 * n);
    for (i64 i = 0; i < 2 * n; i += 2) seq[i] = c(rng);
    for (i64 i = 1; i < 2 * n; i += 2) {
        i64 top = std::min(seq[i - 1], seq[(i + 1) % (2 * n)]);
        seq[i] = std::uniform_int_distribution<i64>(0, top)(rng);
    }
    return random_labels(rng, x_axis_path(seq, n));
}

Generator random_labels(Rng& rng, const AdmissiblePath& p)
{
    Generator g = all_e(p);
    std::bernoulli_distribution coin(0.5);
    for (auto& l : g.labels) l = coin(rng) ? 1 : 0;
    return g;
}

}  // namespace polyech
