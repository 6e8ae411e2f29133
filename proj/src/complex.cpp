#include "polyech/complex.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "polyech/differential.hpp"
#include "polyech/parallel.hpp"
#include "polyech/xaxis.hpp"

namespace polyech {

const char* spec_kind_name(SpecKind k)
{
    switch (k) {
    case SpecKind::Below: return "below";
    case SpecKind::BelowComponent: return "below-component";
    case SpecKind::Bar: return "bar";
    case SpecKind::XAxis: return "xaxis";
    case SpecKind::Periodic: return "periodic";
    }
    return "?";
}

SpecKind spec_kind_from_name(const std::string& s)
{
    for (SpecKind k : {SpecKind::Below, SpecKind::BelowComponent, SpecKind::Bar, SpecKind::XAxis, SpecKind::Periodic})
        if (s == spec_kind_name(k)) return k;
    throw DomainError("unknown complex kind: " + s);
}

Mat2 shear_to(Vec gamma)
{
    auto [g, k] = primitive_of(gamma);
    (void)k;
    // Solve g.x * v - u * g.y = 1 by the extended Euclidean algorithm.
    i64 r0 = g.x, r1 = g.y, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
        i64 q = floor_div(r0, r1);
        std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
        std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
        std::tie(t0, t1) = std::pair{t1, t0 - q * t1};
    }
    // s0 * g.x + t0 * g.y = r0 = +-1
    i64 v = s0 * r0, u = -t0 * r0;
    return {g.x, u, g.y, v};
}

AdmissiblePath periodic_region_path(const ComplexSpec& spec)
{
    auto [g, k] = primitive_of(spec.gamma);
    (void)g;
    AdmissiblePath box = translate(box_path(spec.width, spec.depth + 1, k, spec.n), {0, -spec.depth});
    return act_symmetry(box, shear_to(spec.gamma), 0);
}

Generator periodic_reference(const ComplexSpec& spec)
{
    auto [g, k] = primitive_of(spec.gamma);
    (void)g;
    AdmissiblePath ref = act_symmetry(box_path(1, 1, k, spec.n), shear_to(spec.gamma), 0);
    return all_e(ref);
}

i64 GradedComplex::degree_of(const Generator& g) const
{
    if (reference) return relative_index(g, *reference);
    return index(g);
}

Generator GradedComplex::normalize(const Generator& g) const
{
    if (!modulo_translation) return g;
    return Generator{canonical_translation(g.path), g.labels};
}

Chain GradedComplex::normalize(const Chain& x) const
{
    if (!modulo_translation) return x;
    Chain out;
    for (const auto& [g, c] : x.terms()) out.add(normalize(g), c);
    return out;
}

std::optional<std::pair<i64, std::size_t>> GradedComplex::locate(const Generator& g) const
{
    auto it = lookup.find(normalize(g));
    if (it == lookup.end()) return std::nullopt;
    return it->second;
}

std::size_t GradedComplex::size(i64 d) const
{
    auto it = basis.find(d);
    return it == basis.end() ? 0 : it->second.size();
}

std::size_t GradedComplex::total_size() const
{
    std::size_t s = 0;
    for (const auto& [d, b] : basis) s += b.size();
    return s;
}

bool GradedComplex::is_partial(i64 d) const
{
    return reliable && (d < reliable->first || d > reliable->second);
}

IntVector GradedComplex::to_vector(const Chain& x, i64 d) const
{
    IntVector v(size(d));
    for (const auto& [g, c] : x.terms()) {
        auto loc = locate(g);
        if (!loc || loc->first != d) throw DomainError("chain term outside the complex basis in this degree");
        v[loc->second] += c;
    }
    return v;
}

Chain GradedComplex::to_chain(const IntVector& v, i64 d) const
{
    Chain out;
    const auto& b = basis.at(d);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) {
            if (!v[i].fits_slong_p()) throw std::overflow_error("coefficient exceeds 64 bits");
            out.add(b[i], v[i].get_si());
        }
    return out;
}

IntVector GradedComplex::apply_boundary(const IntVector& v, i64 d) const
{
    IntVector out(size(d - 1));
    auto it = boundary.find(d);
    if (it == boundary.end()) return out;
    for (const auto& [ij, val] : it->second.entries)
        if (v[ij.second] != 0) out[ij.first] += val * v[ij.second];
    return out;
}

std::vector<std::vector<Vec>> convex_point_sets(i64 D, std::size_t max_points)
{
    auto normalized = [](std::vector<Vec> s) {
        i64 mx = s[0].x, my = s[0].y;
        for (const Vec& p : s) { mx = std::min(mx, p.x); my = std::min(my, p.y); }
        for (Vec& p : s) p = p - Vec{mx, my};
        std::sort(s.begin(), s.end());
        return s;
    };
    std::vector<std::vector<Vec>> all;
    if (max_points == 0) return all;
    std::vector<std::vector<Vec>> level{{{0, 0}}};
    while (!level.empty()) {
        all.insert(all.end(), level.begin(), level.end());
        if (level.front().size() >= max_points) break;
        std::set<std::vector<Vec>> next;
        for (const auto& s : level) {
            i64 x0 = 0, y0 = 0, x1 = 0, y1 = 0;
            for (const Vec& p : s) { x1 = std::max(x1, p.x); y1 = std::max(y1, p.y); }
            for (i64 x = x1 - D; x <= x0 + D; ++x)
                for (i64 y = y1 - D; y <= y0 + D; ++y) {
                    Vec p{x, y};
                    if (std::binary_search(s.begin(), s.end(), p)) continue;
                    std::vector<Vec> t = s;
                    t.push_back(p);
                    if (polygon_lattice_points(t).size() != t.size()) continue;
                    next.insert(normalized(t));
                }
        }
        level.assign(next.begin(), next.end());
    }
    return all;
}

namespace {

std::vector<Generator> x_axis_generators(i64 n, i64 M, i64 max_length)
{
    std::vector<Generator> out;
    std::vector<i64> seq(2 * n);
    // Enumerate corner sequences slot by slot with the alternation constraint.
    std::function<void(i64, i64)> rec = [&](i64 i, i64 len) {
        if (len > max_length) return;
        if (i == 2 * n) {
            if (seq[2 * n - 1] > seq[0]) return;
            i64 total = len + (seq[0] - seq[2 * n - 1]);
            if (total > max_length) return;
            std::vector<int> slots;
            for (i64 s = 0; s < 2 * n; ++s)
                if (seq[s] != seq[(s + 1) % (2 * n)]) slots.push_back((int)s);
            for (unsigned mask = 0; mask < (1u << slots.size()); ++mask) {
                std::vector<std::uint8_t> lab(2 * n, 0);
                for (std::size_t b = 0; b < slots.size(); ++b) lab[slots[b]] = (mask >> b) & 1;
                out.push_back(x_generator(seq, lab, n).first);
            }
            return;
        }
        for (i64 v = 0; v <= M; ++v) {
            if (i > 0) {
                if (i % 2 == 1 && v > seq[i - 1]) continue;
                if (i % 2 == 0 && v < seq[i - 1]) continue;
            }
            seq[i] = v;
            rec(i + 1, i > 0 ? len + (v > seq[i - 1] ? v - seq[i - 1] : seq[i - 1] - v) : 0);
        }
    };
    rec(0, 0);
    return out;
}

std::vector<Generator> below_generators(const AdmissiblePath& p)
{
    std::vector<Generator> out;
    for (const auto& q : enumerate_below(p))
        for (auto& g : all_labelings(q)) out.push_back(std::move(g));
    return out;
}

}  // namespace

GradedComplex build_complex(const ComplexSpec& spec)
{
    GradedComplex c;
    c.spec = spec;
    std::vector<Generator> gens;
    std::optional<std::pair<i64, i64>> window = spec.degrees;
    switch (spec.kind) {
    case SpecKind::Below:
    case SpecKind::BelowComponent:
        if (!spec.path) throw DomainError("below complexes need a path");
        if (spec.kind == SpecKind::BelowComponent && !spec.j) throw DomainError("below-component needs j");
        if (spec.path->kind.type == PathType::Periodic) c.reference = all_e(*spec.path);
        gens = below_generators(*spec.path);
        window.reset();
        break;
    case SpecKind::Periodic:
        if (spec.n < 1 || spec.width < 1 || spec.depth < 0) throw DomainError("periodic: bad window");
        c.reference = periodic_reference(spec);
        gens = below_generators(periodic_region_path(spec));
        window.reset();
        break;
    case SpecKind::Bar: {
        if (!window) throw DomainError("bar complexes need a degree window");
        if (spec.diameter < 0 || spec.n < 1) throw DomainError("bar: bad parameters");
        c.modulo_translation = true;
        i64 top = window->second + 1;
        if (spec.n == 1) {
            // 2(#L - 1) - #h >= #L - 2 for polygons, so #L <= top + 2 suffices.
            std::size_t max_points = (std::size_t)std::max<i64>(1, top + 2);
            for (const auto& s : convex_point_sets(spec.diameter, max_points))
                for (auto& g : all_labelings(n_convex(s, 1))) gens.push_back(std::move(g));
        } else {
            std::vector<Vec> box{{0, 0}, {spec.diameter, 0}, {spec.diameter, spec.diameter}, {0, spec.diameter}};
            std::set<AdmissiblePath> seen;
            for (const auto& q : enumerate_below(n_convex(box, spec.n))) {
                auto r = canonical_translation(q);
                if (!seen.insert(r).second) continue;
                for (auto& g : all_labelings(r)) gens.push_back(std::move(g));
            }
        }
        for (auto& g : gens) g = c.normalize(g);
        break;
    }
    case SpecKind::XAxis: {
        if (!window) throw DomainError("xaxis complexes need a degree window");
        if (spec.n < 1 || spec.box < 0) throw DomainError("xaxis: bad parameters");
        // index = length - #h and #h <= 2n
        gens = x_axis_generators(spec.n, spec.box, window->second + 1 + 2 * spec.n);
        break;
    }
    }

    if (window) c.reliable = window;
    for (auto& g : gens) {
        if (spec.j && j_grading(g) != *spec.j) continue;
        i64 d = c.degree_of(g);
        if (window && (d < window->first - 1 || d > window->second + 1)) continue;
        c.basis[d].push_back(std::move(g));
    }
    if (window)
        for (i64 d = window->first - 1; d <= window->second + 1; ++d) c.basis[d];
    for (auto& [d, b] : c.basis) {
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
    }
    if (!c.basis.empty() && !window)
        for (i64 d = c.basis.begin()->first; d <= c.basis.rbegin()->first; ++d) c.basis[d];
    for (const auto& [d, b] : c.basis)
        for (std::size_t i = 0; i < b.size(); ++i) c.lookup.emplace(b[i], std::pair{d, i});

    for (const auto& [d, b] : c.basis) {
        if (!c.basis.count(d - 1)) continue;
        std::size_t rows = c.size(d - 1);
        std::vector<std::vector<std::pair<std::size_t, i64>>> cols(b.size());
        parallel_for(b.size(), [&](std::size_t k) {
            Chain dx = c.normalize(differential(b[k]));
            for (const auto& [g, v] : dx.terms()) {
                auto loc = c.locate(g);
                if (!loc || loc->first != d - 1) {
                    std::ostringstream os;
                    os << "differential leaves the truncation: " << b[k] << " -> " << g;
                    throw NotClosedError(os.str());
                }
                cols[k].push_back({loc->second, v});
            }
        });
        SparseIntMatrix m(rows, b.size());
        for (std::size_t k = 0; k < cols.size(); ++k)
            for (const auto& [r, v] : cols[k]) m.add(r, k, v);
        c.boundary.emplace(d, std::move(m));
    }
    return c;
}

void write_triplets(std::ostream& os, const SparseIntMatrix& m)
{
    os << m.rows << ' ' << m.cols << ' ' << m.nnz() << '\n';
    for (const auto& [ij, v] : m.entries) os << ij.first << ' ' << ij.second << ' ' << v << '\n';
}

}  // namespace polyech
