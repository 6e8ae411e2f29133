#include "polyech/generator.hpp"

#include <algorithm>

namespace polyech {

int Generator::num_h() const
{
    int k = 0;
    for (auto l : labels) k += l;
    return k;
}

std::vector<int> Generator::h_edges() const
{
    std::vector<int> out;
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i]) out.push_back((int)i);
    return out;
}

std::size_t GeneratorHash::operator()(const Generator& g) const noexcept
{
    std::size_t h = PathHash()(g.path);
    for (auto l : g.labels) h = h * 31 + l;
    return h;
}

std::ostream& operator<<(std::ostream& os, const Generator& g)
{
    os << g.path << " [";
    for (auto l : g.labels) os << (l ? 'h' : 'e');
    return os << ']';
}

int permutation_sign(const std::vector<int>& keys)
{
    int inv = 0;
    for (std::size_t i = 0; i < keys.size(); ++i)
        for (std::size_t j = i + 1; j < keys.size(); ++j)
            if (keys[i] > keys[j]) ++inv;
    return inv % 2 ? -1 : 1;
}

std::pair<Generator, int> make_generator(const AdmissiblePath& path, const std::vector<std::uint8_t>& labels,
                                         const std::vector<int>& ordering)
{
    if (labels.size() != path.edges.size()) throw DomainError("make_generator: one label per edge required");
    std::vector<int> h;
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i]) h.push_back((int)i);
    std::vector<int> sorted = ordering;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != h) throw DomainError("make_generator: ordering is not a permutation of the h edges");
    Generator g{path, labels};
    for (auto& l : g.labels) l = l ? 1 : 0;
    return {g, permutation_sign(ordering)};
}

Generator all_e(const AdmissiblePath& path) { return Generator{path, std::vector<std::uint8_t>(path.edges.size(), 0)}; }

std::vector<Generator> all_labelings(const AdmissiblePath& path)
{
    const std::size_t m = path.edges.size();
    if (m >= 31) throw DomainError("all_labelings: too many edges");
    std::vector<Generator> out;
    out.reserve(std::size_t{1} << m);
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        Generator g = all_e(path);
        for (std::size_t i = 0; i < m; ++i) g.labels[i] = (mask >> i) & 1;
        out.push_back(std::move(g));
    }
    return out;
}

namespace {

i128 loop_integral(const std::vector<Vec>& pts)
{
    i128 s = 0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        s += (i128)(pts[i].x + pts[i + 1].x) * (pts[i + 1].y - pts[i].y);
    return s;
}

}  // namespace

i64 twice_area(const AdmissiblePath& path)
{
    if (path.kind.type == PathType::Periodic) throw DomainError("twice_area: periodic path encloses no area");
    auto v = path.vertices();
    v.push_back(v.front());
    return narrow(loop_integral(v));
}

i64 index(const Generator& g)
{
    if (g.path.kind.type == PathType::Periodic) throw DomainError("index: absolute index needs period zero");
    return twice_area(g.path) + g.path.total_mult() - g.num_h();
}

i64 relative_index(const Generator& a, const Generator& b)
{
    if (!(a.path.kind == b.path.kind)) throw DomainError("relative_index: generators of different kinds");
    if (a.path.kind.type != PathType::Periodic) return index(a) - index(b);
    auto pa = a.path.vertices();
    auto pb = b.path.vertices();
    std::vector<Vec> loop = pa;
    for (auto it = pb.rbegin(); it != pb.rend(); ++it) loop.push_back(*it);
    loop.push_back(pa.front());
    i128 s = loop_integral(loop);
    return narrow(s) + (a.path.total_mult() - a.num_h()) - (b.path.total_mult() - b.num_h());
}

Laurent Laurent::monomial(i64 coef, i64 exp)
{
    Laurent l;
    if (coef) l.c[exp] = coef;
    return l;
}

Laurent& Laurent::operator+=(const Laurent& o)
{
    for (const auto& [e, v] : o.c) {
        i64 r = (c[e] += v);
        if (r == 0) c.erase(e);
    }
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o)
{
    for (const auto& [e, v] : o.c) {
        i64 r = (c[e] -= v);
        if (r == 0) c.erase(e);
    }
    return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b)
{
    Laurent r;
    for (const auto& [ea, va] : a.c)
        for (const auto& [eb, vb] : b.c) r += Laurent::monomial(checked_mul(va, vb), ea + eb);
    return r;
}

std::ostream& operator<<(std::ostream& os, const Laurent& l)
{
    if (l.c.empty()) return os << '0';
    bool first = true;
    for (const auto& [e, v] : l.c) {
        if (!first) os << " + ";
        first = false;
        os << v;
        if (e) os << "t^" << e;
    }
    return os;
}

std::ostream& operator<<(std::ostream& os, const Chain& c)
{
    if (c.empty()) return os << "0\n";
    for (const auto& [g, v] : c.terms()) os << (v > 0 ? "+" : "") << v << " * " << g << '\n';
    return os;
}

TwistedChain to_twisted(const Chain& x)
{
    TwistedChain t;
    for (const auto& [g, c] : x.terms()) t.add(g, Laurent(c));
    return t;
}

Chain translate(const Chain& x, Vec w)
{
    return apply_linear(x, [&](const Generator& g) { return Chain(Generator{translate(g.path, w), g.labels}); });
}

Chain act_symmetry(const Generator& g, const Mat2& A, i64 lift)
{
    AdmissiblePath q = act_symmetry(g.path, A, lift);
    std::vector<std::uint8_t> labels(q.edges.size(), 0);
    std::vector<int> order;
    for (std::size_t i = 0; i < g.labels.size(); ++i) {
        AngleKey k = symmetry_angle(A, lift, g.path.domain_angle(i));
        int j = q.find_edge({k.lap, k.dir});
        if (j < 0) throw std::logic_error("act_symmetry: edge has no image");
        labels[j] = g.labels[i];
        if (g.labels[i]) order.push_back(j);
    }
    auto [h, s] = make_generator(q, labels, order);
    return Chain(h, s);
}

Chain act_symmetry(const Chain& x, const Mat2& A, i64 lift)
{
    return apply_linear(x, [&](const Generator& g) { return act_symmetry(g, A, lift); });
}

}  // namespace polyech
