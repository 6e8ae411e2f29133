#include "polyech/differential.hpp"

#include <algorithm>

namespace polyech {

namespace {

// Index in `b` of each edge of `a` that survives a rounding unchanged.
std::vector<int> carry_over(const AdmissiblePath& a, const AdmissiblePath& b, int skip1, int skip2)
{
    std::vector<int> map(a.edges.size(), -1);
    for (std::size_t i = 0; i < a.edges.size(); ++i) {
        if ((int)i == skip1 || (int)i == skip2) continue;
        map[i] = b.find_edge(a.edges[i].angle);
        if (map[i] < 0) throw std::logic_error("rounding lost an unaffected edge");
    }
    return map;
}

int sign_of_count(int k) { return k % 2 ? -1 : 1; }

// Relabel edge i of a as 'h' and put it last.
Chain relabel_last(const Generator& a, int i)
{
    Generator g = a;
    g.labels[i] = 1;
    int after = 0;
    for (std::size_t j = i + 1; j < a.labels.size(); ++j) after += a.labels[j];
    return Chain(g, sign_of_count(after));
}

}  // namespace

Chain differential_at(const Generator& a, const Corner& c, const DifferentialOptions& opt)
{
    Chain out;
    if (!c.roundable()) return out;
    const int pe = c.prev_edge, ne = c.next_edge;
    const bool hp = a.labels[pe], hn = a.labels[ne];
    if (!hp && !hn) return out;
    RoundingResult r = round_corner_detail(a.path, c);
    const AdmissiblePath& bp = r.path;
    auto map = carry_over(a.path, bp, pe, ne);
    std::vector<int> arc;
    for (const auto& ang : r.arc) arc.push_back(bp.find_edge(ang));

    auto hs = a.h_edges();
    const int H = (int)hs.size();
    auto pos = [&](int e) { return (int)(std::find(hs.begin(), hs.end(), e) - hs.begin()); };

    Generator base{bp, std::vector<std::uint8_t>(bp.edges.size(), 0)};
    for (std::size_t i = 0; i < a.labels.size(); ++i)
        if (map[i] >= 0) base.labels[map[i]] = a.labels[i];

    if (hp != hn) {
        int theta = hp ? pe : ne;
        int s = sign_of_count(H - 1 - pos(theta)) * (theta == ne ? 1 : -1);
        std::vector<int> order;
        for (int e : hs)
            if (e != theta) order.push_back(map[e]);
        out.add(base, s * permutation_sign(order));
        return out;
    }
    // Both adjacent edges are 'h': one of them is consumed, the other moves.
    int theta = opt.two_h_use_preceding ? pe : ne;
    int other = opt.two_h_use_preceding ? ne : pe;
    int s = sign_of_count(H - 1 - pos(theta)) * (theta == ne ? 1 : -1);
    for (int x : arc) {
        Generator b = base;
        b.labels[x] = 1;
        std::vector<int> order;
        for (int e : hs) {
            if (e == theta) continue;
            order.push_back(e == other ? x : map[e]);
        }
        out.add(b, s * permutation_sign(order));
    }
    return out;
}

Chain differential(const Generator& a, const DifferentialOptions& opt)
{
    Chain out;
    for (const Corner& c : corners(a.path)) out += differential_at(a, c, opt);
    return out;
}

Chain differential(const Chain& x)
{
    return apply_linear(x, [](const Generator& g) { return differential(g); });
}

Chain u_map(const Generator& a, const GenericAngle& cut)
{
    Chain out;
    Corner c = corner_containing(a.path, cut);
    if (!c.roundable()) return out;
    AngleKey t = lift_into(a.path, c, cut);
    RoundingResult r = round_corner_detail(a.path, c);
    const AdmissiblePath& bp = r.path;
    const int pe = c.prev_edge, ne = c.next_edge;
    auto map = carry_over(a.path, bp, pe, ne);
    std::vector<int> before, after;
    for (std::size_t i = 0; i < r.arc.size(); ++i) {
        int idx = bp.find_edge(r.arc[i]);
        (key_less(r.arc_lifted[i], t) ? before : after).push_back(idx);
    }
    const bool hp = a.labels[pe], hn = a.labels[ne];
    if ((hp && before.empty()) || (hn && after.empty())) return out;
    Generator base{bp, std::vector<std::uint8_t>(bp.edges.size(), 0)};
    for (std::size_t i = 0; i < a.labels.size(); ++i)
        if (map[i] >= 0) base.labels[map[i]] = a.labels[i];
    std::vector<int> xs = hp ? before : std::vector<int>{-1};
    std::vector<int> ys = hn ? after : std::vector<int>{-1};
    auto hs = a.h_edges();
    for (int x : xs)
        for (int y : ys) {
            Generator b = base;
            if (x >= 0) b.labels[x] = 1;
            if (y >= 0) b.labels[y] = 1;
            std::vector<int> order;
            for (int e : hs) order.push_back(e == pe ? x : e == ne ? y : map[e]);
            out.add(b, permutation_sign(order));
        }
    return out;
}

Chain u_map(const Chain& x, const GenericAngle& cut)
{
    return apply_linear(x, [&](const Generator& g) { return u_map(g, cut); });
}

Chain k_homotopy_lifted(const Generator& a, const AngleKey& k1, const AngleKey& k2)
{
    Chain out;
    const AdmissiblePath& p = a.path;
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
        if (a.labels[i]) continue;
        AngleKey t = p.domain_angle(i);
        if (p.kind.cyclic()) {
            i64 n = p.kind.n;
            t = plus_laps(t, -floor_div(t.lap - k1.lap, n) * n);
            while (!key_less(k1, t)) t = plus_laps(t, n);
            while (key_less(k1, plus_laps(t, -n))) t = plus_laps(t, -n);
        }
        if (key_less(k1, t) && key_less(t, k2)) out += relabel_last(a, (int)i);
    }
    return out;
}

Chain k_homotopy(const Generator& a, const GenericAngle& cut1, const GenericAngle& cut2)
{
    AngleKey k1(cut1), k2(cut2);
    if (a.path.kind.cyclic()) {
        i64 n = a.path.kind.n;
        while (!key_less(k1, k2)) k2 = plus_laps(k2, n);
        while (key_less(plus_laps(k1, n), k2)) k2 = plus_laps(k2, -n);
    }
    return k_homotopy_lifted(a, k1, k2);
}

Chain k_homotopy(const Chain& x, const GenericAngle& cut1, const GenericAngle& cut2)
{
    return apply_linear(x, [&](const Generator& g) { return k_homotopy(g, cut1, cut2); });
}

Chain delta_prime(const Generator& a)
{
    Chain out;
    for (std::size_t i = 0; i < a.labels.size(); ++i)
        if (!a.labels[i]) out += relabel_last(a, (int)i);
    return out;
}

Chain delta_prime(const Chain& x)
{
    return apply_linear(x, [](const Generator& g) { return delta_prime(g); });
}

TwistedChain delta_twisted(const Generator& a)
{
    TwistedChain out = to_twisted(differential(a));
    Laurent one_minus_t = Laurent(1) - Laurent::monomial(1, 1);
    out.add(to_twisted(delta_prime(a)), one_minus_t);
    return out;
}

TwistedChain delta_twisted(const TwistedChain& x)
{
    TwistedChain out;
    for (const auto& [g, c] : x.terms()) out.add(delta_twisted(g), c);
    return out;
}

}  // namespace polyech
