#pragma once
// Independent reference implementations used only by the tests.

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "polyech/lattice.hpp"

namespace oracle {

using polyech::Vec;
using polyech::i64;

// Every point of the bounding box that lies in the closed triangle, by
// barycentric sign tests in plain 64-bit arithmetic.
inline std::vector<Vec> triangle_scan(Vec a, Vec b, Vec c)
{
    auto cr = [](Vec o, Vec p, Vec q) { return (p.x - o.x) * (q.y - o.y) - (p.y - o.y) * (q.x - o.x); };
    std::vector<Vec> out;
    i64 x0 = std::min({a.x, b.x, c.x}), x1 = std::max({a.x, b.x, c.x});
    i64 y0 = std::min({a.y, b.y, c.y}), y1 = std::max({a.y, b.y, c.y});
    for (i64 x = x0; x <= x1; ++x)
        for (i64 y = y0; y <= y1; ++y) {
            Vec p{x, y};
            i64 s1 = cr(a, b, p), s2 = cr(b, c, p), s3 = cr(c, a, p);
            bool area0 = cr(a, b, c) == 0;
            if (area0) {
                // on some segment between two of the corners
                auto seg = [&](Vec u, Vec v) {
                    return cr(u, v, p) == 0 && std::min(u.x, v.x) <= x && x <= std::max(u.x, v.x) &&
                           std::min(u.y, v.y) <= y && y <= std::max(u.y, v.y);
                };
                if (seg(a, b) || seg(b, c) || seg(a, c)) out.push_back(p);
            } else if ((s1 >= 0 && s2 >= 0 && s3 >= 0) || (s1 <= 0 && s2 <= 0 && s3 <= 0)) {
                out.push_back(p);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

// Lattice-convex subsets of a small point set: S with conv(S) containing no
// other lattice point.  Plain bitmask enumeration with a brute-force hull test.
inline std::vector<std::vector<Vec>> convex_subsets(const std::vector<Vec>& pts)
{
    auto inside_hull = [](const std::vector<Vec>& s, Vec p) {
        // p lies in conv(s) iff it is in some triangle (or segment) spanned by s.
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i; j < s.size(); ++j)
                for (std::size_t k = j; k < s.size(); ++k) {
                    auto t = triangle_scan(s[i], s[j], s[k]);
                    if (std::binary_search(t.begin(), t.end(), p)) return true;
                }
        return false;
    };
    std::vector<std::vector<Vec>> out;
    const std::size_t n = pts.size();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<Vec> s, rest;
        for (std::size_t i = 0; i < n; ++i) (mask >> i & 1 ? s : rest).push_back(pts[i]);
        bool ok = true;
        for (Vec p : rest)
            if (inside_hull(s, p)) { ok = false; break; }
        if (ok) out.push_back(s);
    }
    return out;
}

}  // namespace oracle
