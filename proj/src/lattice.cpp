#include "polyech/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace polyech {

i64 checked_add(i64 a, i64 b)
{
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("lattice coordinate overflow");
    return r;
}

i64 checked_mul(i64 a, i64 b)
{
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("lattice coordinate overflow");
    return r;
}

i64 narrow(i128 v)
{
    if (v > (i128)INT64_MAX || v < (i128)INT64_MIN) throw std::overflow_error("value exceeds 64 bits");
    return (i64)v;
}

std::ostream& operator<<(std::ostream& os, Vec v) { return os << '(' << v.x << ',' << v.y << ')'; }

std::ostream& operator<<(std::ostream& os, const ExtendedAngle& a)
{
    return os << "[lap " << a.lap << ' ' << a.dir << ']';
}

std::ostream& operator<<(std::ostream& os, const GenericAngle& a)
{
    return os << "[lap " << a.lap << ' ' << a.dir << "+]";
}

std::pair<Direction, i64> primitive_of(Vec v)
{
    if (v.x == 0 && v.y == 0) throw DomainError("primitive_of: zero vector");
    i64 g = std::gcd(v.x, v.y);
    return {{v.x / g, v.y / g}, g};
}

bool is_primitive(Vec v) { return !(v.x == 0 && v.y == 0) && std::gcd(v.x, v.y) == 1; }

AngleKey plus_pi(const AngleKey& a)
{
    return AngleKey(a.lap + half_of(a.dir), -a.dir, a.eps);
}

ExtendedAngle lift_after(Direction d, const AngleKey& a)
{
    AngleKey k(a.lap, d, 0);
    if (key_less(a, k)) return {a.lap, d};
    return {a.lap + 1, d};
}

int compare_gap_with_pi(const AngleKey& a, const AngleKey& b)
{
    AngleKey p = plus_pi(a);
    if (key_less(b, p)) return -1;
    if (key_less(p, b)) return 1;
    return 0;
}

i64 floor_div(i64 a, i64 b)
{
    i64 q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

i64 ceil_div(i64 a, i64 b) { return -floor_div(-a, b); }

namespace {

std::vector<Vec> segment_points(Vec a, Vec b)
{
    if (a == b) return {a};
    auto [d, k] = primitive_of(b - a);
    std::vector<Vec> out;
    out.reserve(k + 1);
    for (i64 i = 0; i <= k; ++i) out.push_back(a + i * d);
    return out;
}

}  // namespace

std::vector<Vec> lattice_points_in_triangle(Vec a, Vec b, Vec c)
{
    i128 area = cross(b - a, c - a);
    if (area == 0) {
        // Collinear: the hull is the segment between the two farthest points.
        Vec p = a, q = b;
        i128 best = dot(b - a, b - a);
        if (dot(c - a, c - a) > best) { q = c; best = dot(c - a, c - a); }
        if (dot(c - b, c - b) > best) { p = b; q = c; }
        auto pts = segment_points(p, q);
        std::sort(pts.begin(), pts.end());
        return pts;
    }
    if (area < 0) std::swap(b, c);
    const Vec v[3] = {a, b, c};
    i64 ylo = std::min({a.y, b.y, c.y}), yhi = std::max({a.y, b.y, c.y});
    i64 xlo = std::min({a.x, b.x, c.x}), xhi = std::max({a.x, b.x, c.x});
    std::vector<Vec> out;
    for (i64 y = ylo; y <= yhi; ++y) {
        i64 lo = xlo, hi = xhi;
        for (int i = 0; i < 3; ++i) {
            Vec p = v[i], e = v[(i + 1) % 3] - v[i];
            // cross(e, (x,y)-p) >= 0  <=>  -e.y * x + (e.x*(y-p.y) + e.y*p.x) >= 0
            i64 coef = -e.y;
            i64 rest = checked_add(checked_mul(e.x, y - p.y), checked_mul(e.y, p.x));
            if (coef == 0) {
                if (rest < 0) { lo = 1; hi = 0; }
            } else if (coef > 0) {
                lo = std::max(lo, ceil_div(-rest, coef));
            } else {
                hi = std::min(hi, floor_div(rest, -coef));
            }
        }
        for (i64 x = lo; x <= hi; ++x) out.push_back({x, y});
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Strict hull vertices, counterclockwise, starting at the lowest-leftmost point.
std::vector<Vec> strict_hull(std::vector<Vec> pts)
{
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

bool on_segment(Vec p, Vec a, Vec b)
{
    if (cross(b - a, p - a) != 0) return false;
    return dot(p - a, b - a) >= 0 && dot(p - b, a - b) >= 0;
}

}  // namespace

std::vector<Vec> hull_chain(const std::vector<Vec>& points, Vec from, Vec to)
{
    if (points.empty()) throw DomainError("hull_chain: empty point set");
    auto hull = strict_hull(points);
    if (from == to) {
        if (std::find(points.begin(), points.end(), from) == points.end())
            throw DomainError("hull_chain: endpoint not in point set");
        return {from};
    }
    // Cyclic boundary sequence including collinear input points.
    std::vector<Vec> boundary;
    std::size_t h = hull.size();
    for (std::size_t i = 0; i < h; ++i) {
        Vec a = hull[i], b = hull[(i + 1) % h];
        std::vector<Vec> on;
        for (const Vec& p : points)
            if (p != a && on_segment(p, a, b)) on.push_back(p);
        std::sort(on.begin(), on.end(), [&](Vec p, Vec q) { return dot(p - a, p - a) < dot(q - a, q - a); });
        on.erase(std::unique(on.begin(), on.end()), on.end());
        boundary.push_back(a);
        for (const Vec& p : on)
            if (p != b) boundary.push_back(p);
    }
    auto it = std::find(boundary.begin(), boundary.end(), from);
    if (it == boundary.end()) throw DomainError("hull_chain: `from` is not on the hull boundary");
    std::size_t start = it - boundary.begin(), m = boundary.size();
    std::vector<Vec> chain;
    for (std::size_t s = 0; s < m; ++s) {
        Vec p = boundary[(start + s) % m];
        chain.push_back(p);
        if (p == to) return chain;
    }
    throw DomainError("hull_chain: `to` is not on the hull boundary");
}

bool theta_order_less(Vec p, Vec q, const GenericAngle& cut)
{
    if (p == q) return false;
    Vec w = p - q;
    i128 c = cross(cut.dir, w);
    if (c != 0) return c > 0;
    // w is parallel to the cut direction; the cut sits just counterclockwise of it.
    return dot(cut.dir, w) < 0;
}

}  // namespace polyech
