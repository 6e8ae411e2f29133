#include "polyech/cycles.hpp"

namespace polyech {

Chain e_cycle(const AdmissiblePath& path) { return Chain(all_e(path)); }

Chain h_cycle(const AdmissiblePath& path)
{
    Chain out;
    for (std::size_t i = 0; i < path.edges.size(); ++i) {
        Generator g = all_e(path);
        g.labels[i] = 1;
        out.add(g, 1);
    }
    return out;
}

Chain wrap_chain(Vec a, const ExtendedAngle& first, i64 count, i64 n, const std::vector<std::uint8_t>& labels)
{
    PathKind kind = PathKind::closed(n);
    if (count == 0) return Chain(all_e(from_walk(kind, a, AngleKey(0, {1, 0}, 1), {})));
    std::vector<WalkEdge> walk;
    AngleKey t(first);
    for (i64 j = 0; j < count; ++j) {
        walk.push_back({{t.lap, t.dir}, 1});
        t = plus_pi(t);
    }
    // A cut inside the corner before the first edge.
    AngleKey last = AngleKey(walk.back().first);
    AngleKey start(last.lap - n, last.dir, 1);
    AdmissiblePath path = from_walk(kind, a, start, walk);
    std::vector<std::uint8_t> lab(path.edges.size(), 0);
    std::vector<int> order;
    for (i64 j = 0; j < count; ++j) {
        int idx = path.find_edge(walk[j].first);
        if (idx < 0 || path.edges[idx].mult != 1) throw DomainError("wrap_chain: wrapping does not close up");
        lab[idx] = labels[j];
        if (labels[j]) order.push_back(idx);
    }
    auto [g, s] = make_generator(path, lab, order);
    return Chain(g, s);
}

Chain z_cycle(i64 n, Vec a, Vec b)
{
    if (a == b) return {};
    auto [d, k] = primitive_of(b - a);
    Chain out;
    for (i64 i = 0; i < k; ++i) {
        Vec u = a + i * d;
        ExtendedAngle first{0, d};
        out += wrap_chain(u, first, 2 * n, n, std::vector<std::uint8_t>(2 * n, 1));
    }
    return out;
}

Chain p_gen(Vec a, const ExtendedAngle& theta, i64 n)
{
    if (!is_primitive(theta.dir)) throw DomainError("p_gen: direction must be primitive");
    return wrap_chain(a, theta, 2 * n - 2, n, std::vector<std::uint8_t>(2 * n - 2, 1));
}

Chain e_gen(Vec a, const ExtendedAngle& theta, i64 n)
{
    if (!is_primitive(theta.dir)) throw DomainError("e_gen: direction must be primitive");
    if (n < 1) throw DomainError("e_gen: n must be positive");
    std::vector<std::uint8_t> lab(2 * n, 1);
    lab.back() = 0;
    return wrap_chain(a, theta, 2 * n, n, lab);
}

Chain q_cycle(Vec a, Vec b, i64 n)
{
    Vec d = b - a;
    if (!is_primitive(d)) throw DomainError("q_cycle: b - a must be primitive");
    AngleKey t(ExtendedAngle{0, d});
    Chain out;
    for (i64 i = 0; i < n; ++i) {
        AngleKey t0 = plus_laps(t, i);
        AngleKey t1 = plus_pi(t0);
        out += e_gen(a, {t0.lap, t0.dir}, n);
        out += e_gen(b, {t1.lap, t1.dir}, n);
    }
    return out;
}

Generator concatenate(const Generator& a, const Generator& b)
{
    const PathKind &ka = a.path.kind, &kb = b.path.kind;
    if (ka.type != PathType::Open || kb.type != PathType::Open) throw DomainError("concatenate: open paths only");
    if (!(ka.hi == kb.lo)) throw DomainError("concatenate: intervals do not meet");
    if (a.path.end_point() != b.path.anchor) throw DomainError("concatenate: endpoints do not meet");
    std::vector<Edge> edges = a.path.edges;
    edges.insert(edges.end(), b.path.edges.begin(), b.path.edges.end());
    Generator g;
    g.path = make_path(PathKind::open(ka.lo, kb.hi), edges, a.path.anchor);
    g.labels = a.labels;
    g.labels.insert(g.labels.end(), b.labels.begin(), b.labels.end());
    return g;
}

Chain concatenate(const Chain& a, const Chain& b)
{
    Chain out;
    for (const auto& [ga, ca] : a.terms())
        for (const auto& [gb, cb] : b.terms()) out.add(concatenate(ga, gb), ca * cb);
    return out;
}

}  // namespace polyech
