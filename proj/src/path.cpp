#include "polyech/path.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <unordered_set>

namespace polyech {

PathKind PathKind::open(GenericAngle lo, GenericAngle hi)
{
    PathKind k;
    k.type = PathType::Open;
    k.lo = lo;
    k.hi = hi;
    k.n = 0;
    return k;
}

PathKind PathKind::closed(i64 n)
{
    PathKind k;
    k.type = PathType::Closed;
    k.n = n;
    return k;
}

PathKind PathKind::periodic(i64 n, Vec gamma)
{
    PathKind k;
    k.type = PathType::Periodic;
    k.n = n;
    k.gamma = gamma;
    return k;
}

namespace {

auto kind_tuple(const PathKind& k)
{
    return std::make_tuple((int)k.type, k.lo.lap, k.lo.dir, k.hi.lap, k.hi.dir, k.n, k.gamma);
}

}  // namespace

bool operator==(const PathKind& a, const PathKind& b) { return kind_tuple(a) == kind_tuple(b); }
bool operator<(const PathKind& a, const PathKind& b) { return kind_tuple(a) < kind_tuple(b); }

bool operator==(const AdmissiblePath& a, const AdmissiblePath& b)
{
    return a.anchor == b.anchor && a.edges == b.edges && a.kind == b.kind;
}

bool operator<(const AdmissiblePath& a, const AdmissiblePath& b)
{
    if (!(a.kind == b.kind)) return a.kind < b.kind;
    if (a.anchor != b.anchor) return a.anchor < b.anchor;
    if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
    for (std::size_t i = 0; i < a.edges.size(); ++i) {
        const Edge &x = a.edges[i], &y = b.edges[i];
        auto tx = std::make_tuple(x.angle.lap, x.angle.dir, x.mult);
        auto ty = std::make_tuple(y.angle.lap, y.angle.dir, y.mult);
        if (tx != ty) return tx < ty;
    }
    return false;
}

std::size_t PathHash::operator()(const AdmissiblePath& p) const noexcept
{
    std::size_t h = std::hash<i64>()(p.anchor.x * 31 + p.anchor.y) ^ ((std::size_t)p.kind.type << 3);
    for (const Edge& e : p.edges) {
        std::size_t v = (std::size_t)(e.angle.lap * 1315423911u) ^ (std::size_t)(e.angle.dir.x * 2654435761u) ^
                        (std::size_t)(e.angle.dir.y * 97531u) ^ (std::size_t)(e.mult * 7919u);
        h = h * 1000003u ^ v;
    }
    return h;
}

std::ostream& operator<<(std::ostream& os, const AdmissiblePath& p)
{
    switch (p.kind.type) {
    case PathType::Open: os << "open" << p.kind.lo << p.kind.hi; break;
    case PathType::Closed: os << "closed(n=" << p.kind.n << ")"; break;
    case PathType::Periodic: os << "periodic(n=" << p.kind.n << ",G=" << p.kind.gamma << ")"; break;
    }
    os << " @" << p.anchor << " {";
    for (const Edge& e : p.edges) os << ' ' << e.angle << 'x' << e.mult;
    return os << " }";
}

ExtendedAngle reduce_angle(const PathKind& kind, const ExtendedAngle& a)
{
    if (!kind.cyclic()) return a;
    i64 l = a.lap % kind.n;
    if (l < 0) l += kind.n;
    return {l, a.dir};
}

AngleKey domain_key(const PathKind& kind, const ExtendedAngle& a)
{
    if (!kind.cyclic()) return AngleKey(a);
    return AngleKey(reduce_angle(kind, a));
}

i64 AdmissiblePath::total_mult() const
{
    i64 s = 0;
    for (const Edge& e : edges) s += e.mult;
    return s;
}

AngleKey AdmissiblePath::domain_angle(std::size_t i) const { return domain_key(kind, edges[i].angle); }

AngleKey AdmissiblePath::domain_start() const
{
    if (!kind.cyclic()) return AngleKey(kind.lo);
    return AngleKey(0, {1, 0}, -1);
}

AngleKey AdmissiblePath::domain_end() const
{
    if (!kind.cyclic()) return AngleKey(kind.hi);
    return AngleKey(kind.n, {1, 0}, -1);
}

std::vector<Vec> AdmissiblePath::vertices() const
{
    std::vector<Vec> v;
    v.reserve(edges.size() + 1);
    Vec p = anchor;
    v.push_back(p);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        p = p + edge_vector(i);
        v.push_back(p);
    }
    return v;
}

Vec AdmissiblePath::end_point() const
{
    Vec p = anchor;
    for (std::size_t i = 0; i < edges.size(); ++i) p = p + edge_vector(i);
    return p;
}

Vec AdmissiblePath::value_at(const AngleKey& cut) const
{
    if (!kind.cyclic()) {
        if (!key_less(AngleKey(kind.lo), cut) && !(AngleKey(kind.lo) == cut))
            throw DomainError("value_at: cut outside the open interval");
        Vec p = anchor;
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (key_less(domain_angle(i), cut)) p = p + edge_vector(i);
        return p;
    }
    // Shift the cut into [start, start + 2 pi n).
    AngleKey start = domain_start();
    i64 q = floor_div(cut.lap, kind.n);
    AngleKey t = plus_laps(cut, -q * kind.n);
    if (key_less(t, start)) { t = plus_laps(t, kind.n); --q; }
    Vec p = anchor;
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (key_less(domain_angle(i), t)) p = p + edge_vector(i);
    return p + q * kind.period();
}

int AdmissiblePath::find_edge(const ExtendedAngle& a) const
{
    ExtendedAngle r = reduce_angle(kind, a);
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (edges[i].angle == r) return (int)i;
    return -1;
}

int AdmissiblePath::find_edge_lifted(const AngleKey& a) const
{
    if (a.eps != 0) return -1;
    return find_edge(ExtendedAngle{a.lap, a.dir});
}

namespace {

void check_edges_sorted(const PathKind& kind, const std::vector<Edge>& edges)
{
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        if (!is_primitive(e.angle.dir)) throw DomainError("make_path: edge direction not primitive");
        if (e.mult < 1) throw DomainError("make_path: multiplicity must be positive");
        if (kind.cyclic() && (e.angle.lap < 0 || e.angle.lap >= kind.n))
            throw DomainError("make_path: lap outside 0..n-1");
        if (i > 0) {
            AngleKey a = domain_key(kind, edges[i - 1].angle), b = domain_key(kind, e.angle);
            if (!key_less(a, b)) throw DomainError("make_path: edges not strictly increasing (or duplicated)");
        }
    }
}

}  // namespace

AdmissiblePath make_path(const PathKind& kind, std::vector<Edge> edges, Vec anchor)
{
    if (kind.cyclic() && kind.n < 1) throw DomainError("make_path: rotation number must be positive");
    if (kind.type == PathType::Periodic && kind.gamma == Vec{})
        throw DomainError("make_path: periodic path needs nonzero period");
    if (kind.type == PathType::Open && !key_less(AngleKey(kind.lo), AngleKey(kind.hi)))
        throw DomainError("make_path: open interval must satisfy lo < hi");
    // Angles are distinct within a domain, so any listing order is accepted.
    std::sort(edges.begin(), edges.end(), [&](const Edge& x, const Edge& y) {
        return key_less(domain_key(kind, x.angle), domain_key(kind, y.angle));
    });
    check_edges_sorted(kind, edges);
    if (kind.type == PathType::Open) {
        for (const Edge& e : edges)
            if (!key_less(AngleKey(kind.lo), AngleKey(e.angle)) || !key_less(AngleKey(e.angle), AngleKey(kind.hi)))
                throw DomainError("make_path: edge outside the open interval");
    } else {
        Vec s{};
        for (const Edge& e : edges) s = s + e.mult * e.angle.dir;
        if (s != kind.period()) throw DomainError("make_path: edge sum does not match the period");
    }
    AdmissiblePath p;
    p.kind = kind;
    p.edges = std::move(edges);
    p.anchor = anchor;
    return p;
}

AdmissiblePath from_walk(const PathKind& kind, Vec start, const AngleKey& start_cut,
                         const std::vector<WalkEdge>& walk)
{
    AdmissiblePath p;
    p.kind = kind;
    if (!kind.cyclic()) {
        p.anchor = start;
        for (const auto& [a, m] : walk)
            if (m > 0) p.edges.push_back({a, m});
        std::sort(p.edges.begin(), p.edges.end(),
                  [](const Edge& x, const Edge& y) { return key_less(x.angle, y.angle); });
        return p;
    }
    // Smallest domain cut (lap multiple of n, just before (1,0)) beyond start_cut.
    i64 L = floor_div(start_cut.lap, kind.n) * kind.n;
    while (!key_less(start_cut, AngleKey(L, {1, 0}, -1))) L += kind.n;
    AngleKey kappa(L, {1, 0}, -1);
    Vec anchor = start;
    std::map<std::pair<i64, Vec>, i64> acc;
    for (const auto& [a, m] : walk) {
        if (m == 0) continue;
        if (key_less(AngleKey(a), kappa)) anchor = anchor + m * a.dir;
        ExtendedAngle r = reduce_angle(kind, a);
        acc[{r.lap, r.dir}] += m;
    }
    // kappa lies L/n periods after the domain start.
    p.anchor = anchor - (L / kind.n) * kind.period();
    for (const auto& [k, m] : acc)
        if (m > 0) p.edges.push_back({{k.first, k.second}, m});
    std::sort(p.edges.begin(), p.edges.end(), [&](const Edge& x, const Edge& y) {
        return key_less(domain_key(kind, x.angle), domain_key(kind, y.angle));
    });
    return p;
}

Walk walk_of(const AdmissiblePath& p)
{
    Walk w;
    w.start = p.anchor;
    w.start_cut = p.domain_start();
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
        AngleKey k = p.domain_angle(i);
        w.edges.push_back({{k.lap, k.dir}, p.edges[i].mult});
    }
    return w;
}

std::vector<Corner> corners(const AdmissiblePath& p)
{
    std::vector<Corner> out;
    const std::size_t m = p.edges.size();
    auto verts = p.vertices();
    if (!p.kind.cyclic()) {
        for (std::size_t k = 0; k <= m; ++k) {
            Corner c;
            c.index = (int)k;
            c.at = verts[k];
            c.prev = k == 0 ? AngleKey(p.kind.lo) : p.domain_angle(k - 1);
            c.next = k == m ? AngleKey(p.kind.hi) : p.domain_angle(k);
            c.prev_edge = k == 0 ? -1 : (int)k - 1;
            c.next_edge = k == m ? -1 : (int)k;
            if (c.prev_edge >= 0 && c.next_edge >= 0) c.is_kink = compare_gap_with_pi(c.prev, c.next) > 0;
            out.push_back(c);
        }
        return out;
    }
    if (m == 0) {
        Corner c;
        c.at = p.anchor;
        c.prev = plus_laps(p.domain_start(), -p.kind.n);
        c.next = p.domain_end();
        c.is_kink = true;
        out.push_back(c);
        return out;
    }
    for (std::size_t k = 0; k < m; ++k) {
        Corner c;
        c.index = (int)k;
        c.at = verts[k];
        c.prev_edge = (int)((k + m - 1) % m);
        c.next_edge = (int)k;
        c.prev = k == 0 ? plus_laps(p.domain_angle(m - 1), -p.kind.n) : p.domain_angle(k - 1);
        c.next = p.domain_angle(k);
        c.is_kink = compare_gap_with_pi(c.prev, c.next) > 0;
        out.push_back(c);
    }
    return out;
}

Corner corner_containing(const AdmissiblePath& p, const GenericAngle& cut)
{
    AngleKey t(cut);
    if (p.kind.cyclic()) {
        i64 q = floor_div(t.lap, p.kind.n);
        t = plus_laps(t, -q * p.kind.n);
        if (key_less(t, p.domain_start())) t = plus_laps(t, p.kind.n);
    }
    auto cs = corners(p);
    for (const Corner& c : cs)
        if (key_less(c.prev, t) && key_less(t, c.next)) return c;
    // The wrap corner also covers cuts just before the end of the domain.
    if (p.kind.cyclic())
        for (const Corner& c : cs) {
            AngleKey u = plus_laps(t, -p.kind.n);
            if (key_less(c.prev, u) && key_less(u, c.next)) return c;
        }
    throw DomainError("corner_containing: cut outside the path's domain");
}

AngleKey lift_into(const AdmissiblePath& p, const Corner& c, const GenericAngle& cut)
{
    AngleKey t(cut);
    if (!p.kind.cyclic()) return t;
    i64 n = p.kind.n;
    t = plus_laps(t, -floor_div(t.lap - c.prev.lap, n) * n);
    while (!key_less(c.prev, t)) t = plus_laps(t, n);
    while (key_less(c.next, t)) t = plus_laps(t, -n);
    if (!key_less(c.prev, t) || !key_less(t, c.next)) throw DomainError("lift_into: cut not inside corner");
    return t;
}

namespace {

// New edges replacing corner point c with adjacent primitive directions d1, d2.
std::vector<std::pair<Direction, i64>> rounding_chain(Vec c, Direction d1, Direction d2)
{
    Vec from = c - d1, to = c + d2;
    if (from == to) return {};
    auto pts = lattice_points_in_triangle(from, c, to);
    pts.erase(std::remove(pts.begin(), pts.end(), c), pts.end());
    auto chain = hull_chain(pts, from, to);
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

}  // namespace

RoundingResult round_corner_detail(const AdmissiblePath& p, const Corner& c)
{
    if (c.prev_edge < 0 || c.next_edge < 0) throw DomainError("round_corner: end corner of an open path");
    if (c.is_kink) throw DomainError("round_corner: corner is a kink");
    const std::size_t m = p.edges.size();
    const Edge& e1 = p.edges[c.prev_edge];
    const Edge& e2 = p.edges[c.next_edge];
    auto chain = rounding_chain(c.at, e1.angle.dir, e2.angle.dir);

    // Lifted angles of the new edges, strictly between c.prev and c.next.
    std::vector<WalkEdge> fresh;
    AngleKey cur = c.prev;
    for (const auto& [d, k] : chain) {
        ExtendedAngle a = lift_after(d, cur);
        if (!key_less(AngleKey(a), c.next)) throw std::logic_error("round_corner: new edge outside corner");
        fresh.push_back({a, k});
        cur = AngleKey(a);
    }
    ExtendedAngle a1{c.prev.lap, c.prev.dir}, a2{c.next.lap, c.next.dir};

    RoundingResult res;
    std::vector<WalkEdge> walk;
    Vec start;
    AngleKey start_cut;
    if (!p.kind.cyclic()) {
        start = p.anchor;
        start_cut = AngleKey(p.kind.lo);
        for (int i = 0; i < c.prev_edge; ++i) walk.push_back({p.edges[i].angle, p.edges[i].mult});
        walk.push_back({a1, e1.mult - 1});
        for (auto& f : fresh) walk.push_back(f);
        walk.push_back({a2, e2.mult - 1});
        for (std::size_t i = c.next_edge + 1; i < m; ++i) walk.push_back({p.edges[i].angle, p.edges[i].mult});
    } else {
        // Start right after the following edge; that point is unchanged.
        const std::size_t ne = c.next_edge;
        auto verts = p.vertices();
        start = verts[ne + 1];
        start_cut = p.domain_angle(ne);
        for (std::size_t s = ne + 1; s < ne + m; ++s) {
            std::size_t idx = s % m;
            AngleKey k = plus_laps(p.domain_angle(idx), s >= m ? p.kind.n : 0);
            i64 mult = p.edges[idx].mult - (idx == (std::size_t)c.prev_edge ? 1 : 0);
            walk.push_back({{k.lap, k.dir}, mult});
        }
        // The walk sees the previous edge one period later than the corner does.
        for (auto& f : fresh) walk.push_back({{f.first.lap + p.kind.n, f.first.dir}, f.second});
        AngleKey k2 = plus_laps(p.domain_angle(ne), p.kind.n);
        walk.push_back({{k2.lap, k2.dir}, e2.mult - 1});
    }
    res.path = from_walk(p.kind, start, start_cut, walk);

    if (e1.mult > 1) {
        res.arc.push_back(reduce_angle(p.kind, a1));
        res.arc_lifted.push_back(AngleKey(a1));
    }
    for (auto& f : fresh) {
        res.arc.push_back(reduce_angle(p.kind, f.first));
        res.arc_lifted.push_back(AngleKey(f.first));
    }
    if (e2.mult > 1) {
        res.arc.push_back(reduce_angle(p.kind, a2));
        res.arc_lifted.push_back(AngleKey(a2));
    }
    res.first_is_old = e1.mult > 1;
    res.last_is_old = e2.mult > 1;
    return res;
}

AdmissiblePath round_corner(const AdmissiblePath& p, const Corner& c) { return round_corner_detail(p, c).path; }

bool same_type(const AdmissiblePath& a, const AdmissiblePath& b)
{
    if (!(a.kind == b.kind)) return false;
    if (a.kind.type == PathType::Open) return a.anchor == b.anchor && a.end_point() == b.end_point();
    return true;
}

namespace {

// det(u_t, v) >= 0 for every t in the open interval (a, b).
bool interval_ok(const AngleKey& a, const AngleKey& b, Vec v)
{
    if (v == Vec{}) return true;
    auto [d, k] = primitive_of(v);
    (void)k;
    ExtendedAngle phi = lift_after(d, a);
    if (compare_gap_with_pi(a, AngleKey(phi)) > 0) return false;
    return !key_less(AngleKey(phi), b);
}

}  // namespace

bool leq(const AdmissiblePath& lower, const AdmissiblePath& upper)
{
    if (!same_type(lower, upper)) throw DomainError("leq: paths of different type");
    // Merge breakpoints of both paths over the fundamental domain.
    std::vector<AngleKey> br;
    for (std::size_t i = 0; i < lower.edges.size(); ++i) br.push_back(lower.domain_angle(i));
    for (std::size_t i = 0; i < upper.edges.size(); ++i) br.push_back(upper.domain_angle(i));
    std::sort(br.begin(), br.end(), key_less);
    br.erase(std::unique(br.begin(), br.end()), br.end());
    auto check = [&](const AngleKey& a, const AngleKey& b, const AngleKey& sample) {
        Vec v = lower.value_at(sample) - upper.value_at(sample);
        return interval_ok(a, b, v);
    };
    if (!lower.kind.cyclic()) {
        AngleKey a(lower.kind.lo);
        for (std::size_t i = 0; i <= br.size(); ++i) {
            AngleKey b = i < br.size() ? br[i] : AngleKey(lower.kind.hi);
            AngleKey sample = i == 0 ? AngleKey(lower.kind.lo) : AngleKey(a.lap, a.dir, 1);
            if (!check(a, b, sample)) return false;
            a = b;
        }
        return true;
    }
    i64 n = lower.kind.n;
    if (br.empty()) {
        return check(AngleKey(0, {1, 0}, 0), AngleKey(n, {1, 0}, 0), lower.domain_start());
    }
    for (std::size_t i = 0; i < br.size(); ++i) {
        AngleKey a = i == 0 ? plus_laps(br.back(), -n) : br[i - 1];
        AngleKey b = br[i];
        AngleKey sample(a.lap, a.dir, 1);
        if (!check(a, b, sample)) return false;
    }
    return true;
}

std::vector<AdmissiblePath> enumerate_below(const AdmissiblePath& p)
{
    std::unordered_set<AdmissiblePath, PathHash> seen;
    std::deque<AdmissiblePath> queue;
    seen.insert(p);
    queue.push_back(p);
    while (!queue.empty()) {
        AdmissiblePath cur = std::move(queue.front());
        queue.pop_front();
        for (const Corner& c : corners(cur)) {
            if (!c.roundable()) continue;
            AdmissiblePath q = round_corner(cur, c);
            if (seen.insert(q).second) queue.push_back(std::move(q));
        }
    }
    std::vector<AdmissiblePath> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

AdmissiblePath translate(const AdmissiblePath& p, Vec w)
{
    AdmissiblePath q = p;
    q.anchor = p.anchor + w;
    return q;
}

AdmissiblePath canonical_translation(const AdmissiblePath& p)
{
    auto verts = p.vertices();
    Vec lo = *std::min_element(verts.begin(), verts.end());
    return translate(p, -lo);
}

AngleKey symmetry_angle(const Mat2& A, i64 lift, const AngleKey& a)
{
    Direction img = apply(A, a.dir);
    Direction base = apply(A, Direction{1, 0});
    i64 wrap = (img == base || dir_less(base, img)) ? 0 : 1;
    return AngleKey(a.lap + lift + wrap, img, a.eps);
}

AdmissiblePath act_symmetry(const AdmissiblePath& p, const Mat2& A, i64 lift)
{
    if (A[0] * A[3] - A[1] * A[2] != 1) throw DomainError("act_symmetry: determinant must be 1");
    PathKind kind = p.kind;
    if (kind.type == PathType::Open) {
        AngleKey lo = symmetry_angle(A, lift, AngleKey(kind.lo));
        AngleKey hi = symmetry_angle(A, lift, AngleKey(kind.hi));
        kind.lo = {lo.lap, lo.dir};
        kind.hi = {hi.lap, hi.dir};
    } else if (kind.type == PathType::Periodic) {
        kind.gamma = apply(A, kind.gamma);
    }
    Walk w = walk_of(p);
    std::vector<WalkEdge> edges;
    for (const auto& [a, m] : w.edges) {
        AngleKey k = symmetry_angle(A, lift, AngleKey(a));
        edges.push_back({{k.lap, k.dir}, m});
    }
    return from_walk(kind, apply(A, w.start), symmetry_angle(A, lift, w.start_cut), edges);
}

std::vector<Vec> convex_hull(const std::vector<Vec>& input)
{
    std::vector<Vec> pts = input;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;
    std::vector<Vec> h(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

std::vector<Vec> polygon_lattice_points(const std::vector<Vec>& vertices)
{
    auto h = convex_hull(vertices);
    std::set<Vec> pts;
    if (h.size() <= 2) {
        Vec a = h.front(), b = h.back();
        for (const Vec& q : lattice_points_in_triangle(a, b, a)) pts.insert(q);
    } else {
        for (std::size_t i = 1; i + 1 < h.size(); ++i)
            for (const Vec& q : lattice_points_in_triangle(h[0], h[i], h[i + 1])) pts.insert(q);
    }
    return {pts.begin(), pts.end()};
}

AdmissiblePath n_convex(const std::vector<Vec>& vertices, i64 n)
{
    if (n < 1) throw DomainError("n_convex: n must be positive");
    if (vertices.empty()) throw DomainError("n_convex: empty polygon");
    auto h = convex_hull(vertices);
    PathKind kind = PathKind::closed(n);
    if (h.size() == 1) return from_walk(kind, h[0], AngleKey(0, {1, 0}, 1), {});
    // Lap-0 edges of the boundary, sorted by angle.
    std::vector<std::pair<Vec, std::pair<Direction, i64>>> es;
    for (std::size_t i = 0; i < h.size(); ++i) es.push_back({h[i], primitive_of(h[(i + 1) % h.size()] - h[i])});
    std::sort(es.begin(), es.end(), [](const auto& x, const auto& y) { return dir_less(x.second.first, y.second.first); });
    Vec start = es.front().first;
    AngleKey cut(-1, es.back().second.first, 0);
    std::vector<WalkEdge> walk;
    for (i64 l = 0; l < n; ++l)
        for (const auto& e : es) walk.push_back({{l, e.second.first}, e.second.second});
    return from_walk(kind, start, cut, walk);
}

std::vector<Vec> enclosed_points(const AdmissiblePath& p)
{
    auto v = p.vertices();
    return polygon_lattice_points(v);
}

AdmissiblePath box_path(i64 a, i64 b, i64 k, i64 n)
{
    if (a < 1 || b < 1 || k < 1 || n < 1) throw DomainError("box_path: a, b, k, n must be positive");
    std::vector<WalkEdge> walk;
    for (i64 l = 0; l < n; ++l) {
        walk.push_back({{l, {0, 1}}, b - 1});
        walk.push_back({{l, {-1, 0}}, a - 1});
        walk.push_back({{l, {0, -1}}, b - 1});
        walk.push_back({{l + 1, {1, 0}}, a - 1 + (l == n - 1 ? k : 0)});
    }
    return from_walk(PathKind::periodic(n, {k, 0}), {a - 1, 0}, AngleKey(0, {1, 0}, 1), walk);
}

AdmissiblePath x_axis_path(const std::vector<i64>& seq_in, i64 n)
{
    std::vector<i64> seq = seq_in;
    if ((i64)seq.size() == 2 * n + 1) {
        if (seq.back() != seq.front()) throw DomainError("x_axis_path: sequence must close up");
        seq.pop_back();
    }
    if ((i64)seq.size() != 2 * n) throw DomainError("x_axis_path: sequence length must be 2n");
    std::vector<WalkEdge> walk;
    for (i64 i = 0; i < 2 * n; ++i) {
        i64 from = seq[i], to = seq[(i + 1) % (2 * n)];
        if (i % 2 == 0) {
            if (from < to) throw DomainError("x_axis_path: sequence must alternate a0 >= a1 <= a2 ...");
            walk.push_back({{i / 2, {-1, 0}}, from - to});
        } else {
            if (from > to) throw DomainError("x_axis_path: sequence must alternate a0 >= a1 <= a2 ...");
            walk.push_back({{(i + 1) / 2, {1, 0}}, to - from});
        }
    }
    return from_walk(PathKind::closed(n), {seq[0], 0}, AngleKey(0, {0, 1}, 1), walk);
}

bool is_x_axis(const AdmissiblePath& p)
{
    if (p.kind.type != PathType::Closed || p.anchor.y != 0) return false;
    for (const Edge& e : p.edges)
        if (e.angle.dir.y != 0) return false;
    return true;
}

std::vector<i64> x_corner_sequence(const AdmissiblePath& p)
{
    if (!is_x_axis(p)) throw DomainError("x_corner_sequence: path is not on the x-axis");
    std::vector<i64> out;
    for (i64 i = 0; i < 2 * p.kind.n; ++i) {
        AngleKey cut = i % 2 == 0 ? AngleKey(i / 2, {0, 1}, 1) : AngleKey((i - 1) / 2, {0, -1}, 1);
        out.push_back(p.value_at(cut).x);
    }
    return out;
}

AdmissiblePath open_chain(const std::vector<Vec>& chain, std::optional<GenericAngle> lo)
{
    if (chain.empty()) throw DomainError("open_chain: empty chain");
    std::vector<std::pair<Direction, i64>> es;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        if (chain[i] == chain[i + 1]) continue;
        auto pk = primitive_of(chain[i + 1] - chain[i]);
        if (!es.empty() && es.back().first == pk.first)
            es.back().second += pk.second;
        else
            es.push_back(pk);
    }
    if (es.empty()) {
        GenericAngle l = lo.value_or(GenericAngle{0, {1, 0}});
        return make_path(PathKind::open(l, {l.lap + 1, l.dir}), {}, chain.front());
    }
    std::vector<Edge> edges;
    AngleKey cur = lo ? AngleKey(*lo) : AngleKey(-1, {1, 0}, 1);
    for (const auto& [d, k] : es) {
        ExtendedAngle a = lo || !edges.empty() ? lift_after(d, cur) : ExtendedAngle{0, d};
        edges.push_back({a, k});
        cur = AngleKey(a);
    }
    GenericAngle l = lo ? *lo : GenericAngle{edges.back().angle.lap - 1, edges.back().angle.dir};
    GenericAngle hi{edges.back().angle.lap, edges.back().angle.dir};
    if (lo) hi = {l.lap + 1, l.dir};
    return make_path(PathKind::open(l, hi), edges, chain.front());
}

}  // namespace polyech
