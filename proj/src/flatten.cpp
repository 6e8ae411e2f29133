#include "polyech/flatten.hpp"

#include <algorithm>
#include <map>

namespace polyech {

std::vector<Vec> theta_corner_sequence(const AdmissiblePath& lambda, const GenericAngle& cut)
{
    if (!lambda.kind.cyclic()) throw DomainError("theta_corner_sequence: closed or periodic path required");
    std::vector<Vec> out;
    AngleKey t(cut);
    for (i64 i = 0; i <= 2 * lambda.kind.n; ++i) {
        out.push_back(lambda.value_at(t));
        t = plus_pi(t);
    }
    return out;
}

std::vector<Vec> theta_sorted(std::vector<Vec> pts, const GenericAngle& cut)
{
    std::sort(pts.begin(), pts.end(), [&](Vec p, Vec q) { return theta_order_less(p, q, cut); });
    return pts;
}

AdmissiblePath x_axis_convex(i64 k, i64 n)
{
    if (k < 1) throw DomainError("x_axis_convex: k must be positive");
    return n_convex({{0, 0}, {k - 1, 0}}, n);
}

std::vector<std::pair<Direction, i64>> block_edges(const std::vector<Vec>& sorted_pts, Vec p, Vec q)
{
    auto ip = std::find(sorted_pts.begin(), sorted_pts.end(), p), iq = std::find(sorted_pts.begin(), sorted_pts.end(), q);
    if (ip == sorted_pts.end() || iq == sorted_pts.end()) throw DomainError("block_edges: endpoint not in P");
    if (p == q) return {};
    auto lo = std::min(ip, iq), hi = std::max(ip, iq);
    std::vector<Vec> between(lo, hi + 1);
    auto chain = hull_chain(between, p, q);
    std::vector<std::pair<Direction, i64>> out;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        auto [d, k] = primitive_of(chain[i + 1] - chain[i]);
        if (!out.empty() && out.back().first == d)
            out.back().second += k;
        else
            out.push_back({d, k});
    }
    return out;
}

Chain flatten(const Generator& a0, const AdmissiblePath& lambda0, const AdmissiblePath& lambda, const GenericAngle& cut)
{
    const i64 n = lambda.kind.n;
    if (lambda.kind.type != PathType::Closed || !(lambda0.kind == lambda.kind) || !(a0.path.kind == lambda.kind))
        throw DomainError("flatten: closed paths of equal rotation number required");
    auto pts0 = theta_sorted(enclosed_points(lambda0), cut);
    auto pts = theta_sorted(enclosed_points(lambda), cut);
    if (pts0.size() != pts.size()) throw DomainError("flatten: lattice point counts differ");
    std::map<Vec, std::size_t> rank0;
    for (std::size_t i = 0; i < pts0.size(); ++i) rank0[pts0[i]] = i;
    auto image = [&](Vec v) {
        auto it = rank0.find(v);
        if (it == rank0.end()) throw DomainError("flatten: generator leaves P of the source path");
        return pts[it->second];
    };

    auto seq = theta_corner_sequence(a0.path, cut);
    // Which edge of a0 lies in each interval (cut + i pi, cut + (i+1) pi).
    std::vector<int> src_edge(2 * n, -1);
    for (std::size_t e = 0; e < a0.path.edges.size(); ++e) {
        AngleKey k = a0.path.domain_angle(e);
        // Lift into (cut, cut + 2 pi n).
        i64 shift = floor_div(k.lap - cut.lap, n) * n;
        k = plus_laps(k, -shift);
        while (!key_less(AngleKey(cut), k)) k = plus_laps(k, n);
        while (key_less(plus_laps(AngleKey(cut), n), k)) k = plus_laps(k, -n);
        AngleKey t(cut);
        for (i64 i = 0; i < 2 * n; ++i) {
            AngleKey u = plus_pi(t);
            if (key_less(t, k) && key_less(k, u)) {
                if (src_edge[i] >= 0) throw DomainError("flatten: source path is not on the x-axis");
                src_edge[i] = (int)e;
            }
            t = u;
        }
    }

    std::vector<WalkEdge> walk;
    std::vector<std::vector<ExtendedAngle>> block(2 * n);
    AngleKey t(cut);
    for (i64 i = 0; i < 2 * n; ++i) {
        AngleKey u = plus_pi(t);
        AngleKey cur = t;
        for (const auto& [d, k] : block_edges(pts, image(seq[i]), image(seq[i + 1]))) {
            ExtendedAngle a = lift_after(d, cur);
            if (!key_less(AngleKey(a), u)) throw std::logic_error("flatten: block edge outside its interval");
            walk.push_back({a, k});
            block[i].push_back(a);
            cur = AngleKey(a);
        }
        if (block[i].empty() != (src_edge[i] < 0)) throw std::logic_error("flatten: block and source edge disagree");
        t = u;
    }
    AdmissiblePath path = from_walk(lambda.kind, image(seq[0]), AngleKey(cut), walk);

    // One 'h' per H block; h-order follows the source's canonical order.
    std::vector<int> h_slots;
    for (int e : a0.h_edges())
        for (i64 i = 0; i < 2 * n; ++i)
            if (src_edge[i] == e) h_slots.push_back((int)i);
    std::vector<std::vector<int>> choices;
    for (int s : h_slots) {
        std::vector<int> idx;
        for (const auto& a : block[s]) idx.push_back(path.find_edge(a));
        choices.push_back(idx);
    }
    Chain out;
    std::vector<std::size_t> pick(choices.size(), 0);
    while (true) {
        std::vector<std::uint8_t> labels(path.edges.size(), 0);
        std::vector<int> order;
        for (std::size_t c = 0; c < choices.size(); ++c) {
            labels[choices[c][pick[c]]] = 1;
            order.push_back(choices[c][pick[c]]);
        }
        auto [g, s] = make_generator(path, labels, order);
        out.add(g, s);
        std::size_t c = 0;
        while (c < pick.size() && ++pick[c] == choices[c].size()) pick[c++] = 0;
        if (c == pick.size()) break;
    }
    return out;
}

Chain flatten(const Chain& x, const AdmissiblePath& lambda0, const AdmissiblePath& lambda, const GenericAngle& cut)
{
    return apply_linear(x, [&](const Generator& g) { return flatten(g, lambda0, lambda, cut); });
}

}  // namespace polyech
