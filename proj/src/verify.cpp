#include "polyech/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <iomanip>
#include <limits>
#include <random>
#include <set>
#include <sstream>

#include "polyech/cycles.hpp"
#include "polyech/differential.hpp"
#include "polyech/flatten.hpp"
#include "polyech/parallel.hpp"
#include "polyech/sampling.hpp"
#include "polyech/xaxis.hpp"

namespace polyech {

const char* status_name(CheckStatus s)
{
    switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Flagged: return "flagged";
    }
    return "?";
}

std::size_t SuiteReport::count(CheckStatus s) const
{
    return (std::size_t)std::count_if(checks.begin(), checks.end(), [&](const CheckRecord& c) { return c.status == s; });
}

const CheckRecord* SuiteReport::find(const std::string& id) const
{
    for (const auto& c : checks)
        if (c.id == id) return &c;
    return nullptr;
}

namespace {

using clock_type = std::chrono::steady_clock;

template <class T>
std::string show(const T& v)
{
    std::ostringstream os;
    os << v;
    return os.str();
}

struct Tally {
    i64 checked = 0, failed = 0;
    std::string example;

    template <class F>
    void expect(bool ok, F&& describe)
    {
        ++checked;
        if (ok) return;
        if (!failed) example = describe();
        ++failed;
    }
    void error(const std::string& what)
    {
        ++checked;
        if (!failed) example = what;
        ++failed;
    }
    void merge(const Tally& o)
    {
        if (o.failed && !failed) example = o.example;
        checked += o.checked;
        failed += o.failed;
    }
};

class Suite {
public:
    Suite(std::string name, const VerifyOptions& opt, clock_type::time_point start)
        : name_(std::move(name)), opt_(opt), start_(start)
    {
    }

    Rng rng(std::uint64_t salt, std::uint64_t i) const
    {
        std::seed_seq s{(std::uint32_t)opt_.seed, (std::uint32_t)(opt_.seed >> 32), (std::uint32_t)salt, (std::uint32_t)i};
        return Rng(s);
    }

    double remaining() const
    {
        return opt_.budget - std::chrono::duration<double>(clock_type::now() - start_).count();
    }

    // Runs f(i, tallies, rng) for n samples in parallel; tallies merge in sample order.
    template <std::size_t K, class F>
    std::array<Tally, K> sampled(std::uint64_t salt, std::size_t n, F&& f) const
    {
        std::vector<std::array<Tally, K>> parts(n);
        parallel_for(n, [&](std::size_t i) {
            Rng r = rng(salt, i);
            try {
                f(i, parts[i], r);
            } catch (const std::exception& e) {
                parts[i][0].error(std::string("sample ") + std::to_string(i) + ": " + e.what());
            }
        });
        std::array<Tally, K> out;
        for (const auto& p : parts)
            for (std::size_t k = 0; k < K; ++k) out[k].merge(p[k]);
        return out;
    }

    void record(const std::string& check, const std::string& desc, const Tally& t, json data = json::object())
    {
        data["checked"] = t.checked;
        data["failed"] = t.failed;
        if (t.failed) data["example"] = t.example;
        CheckStatus s = t.failed || !t.checked ? CheckStatus::Fail : CheckStatus::Pass;
        add(check, desc, s, std::move(data));
    }

    void add(const std::string& check, const std::string& desc, CheckStatus s, json data)
    {
        checks.push_back({name_ + "." + check, desc, s, std::move(data)});
    }

    std::vector<CheckRecord> checks;

private:
    std::string name_;
    VerifyOptions opt_;
    clock_type::time_point start_;
};

ComplexSpec below_spec(const AdmissiblePath& p, std::optional<i64> j = std::nullopt)
{
    ComplexSpec s;
    s.kind = j ? SpecKind::BelowComponent : SpecKind::Below;
    s.path = p;
    s.j = j;
    return s;
}

// Hull of random points in [0,B]^2 with a lattice point count in [min_k, max_k].
std::vector<Vec> polygon_with_points(Rng& rng, i64 B, std::size_t min_k, std::size_t max_k)
{
    for (int t = 0; t < 20000; ++t) {
        auto h = random_polygon(rng, B, 6);
        auto k = polygon_lattice_points(h).size();
        if (k >= min_k && k <= max_k) return h;
    }
    throw std::runtime_error("no polygon with the requested point count");
}

// Closed (n <= 3) or open paths with at most ten lattice points in the top polygon.
AdmissiblePath below_sample(Rng& rng, std::size_t i)
{
    switch (i % 5) {
    case 0: return random_descent(rng, n_convex(polygon_with_points(rng, 4, 1, 10), 1), 6);
    case 1: return random_descent(rng, n_convex(polygon_with_points(rng, 3, 1, 6), 2), 6);
    case 2: return random_descent(rng, n_convex(polygon_with_points(rng, 2, 1, 4), 3), 6);
    case 3: return random_open_distinct(rng, 3);
    default: return random_open_closed_up(rng, 3);
    }
}

AdmissiblePath any_path(Rng& rng, std::size_t i)
{
    switch (i % 5) {
    case 0: return random_closed(rng, 4, 1);
    case 1: return random_closed(rng, 3, 2 + (i / 5) % 2);
    case 2: return random_periodic(rng, 3, 1 + (i / 5) % 2);
    case 3: return random_open_distinct(rng, 3);
    default: return random_open_closed_up(rng, 3);
    }
}

// A cut inside some corner of p; for open paths it stays strictly inside (lo, hi).
GenericAngle random_cut(Rng& rng, const AdmissiblePath& p)
{
    static const Direction dirs[] = {{1, 0}, {2, 1}, {1, 1}, {0, 1}, {-1, 2}, {-1, 0}, {-2, -1}, {0, -1}, {3, -1}};
    std::uniform_int_distribution<int> d(0, 8);
    if (!p.kind.cyclic()) {
        std::uniform_int_distribution<int> e(-1, (int)p.edges.size() - 1);
        int i = e(rng);
        if (i >= 0 && key_less(AngleKey(GenericAngle{p.edges[i].angle.lap, p.edges[i].angle.dir}), AngleKey(p.kind.hi)))
            return {p.edges[i].angle.lap, p.edges[i].angle.dir};
        AngleKey k = plus_pi(AngleKey(p.kind.lo));
        return {k.lap, k.dir};
    }
    std::uniform_int_distribution<i64> l(0, p.kind.n - 1);
    return {l(rng), dirs[d(rng)]};
}

GenericAngle inside(const Corner& c) { return {c.prev.lap, c.prev.dir}; }

bool d_squared_zero(const GradedComplex& c)
{
    for (const auto& [d, m] : c.boundary) {
        auto it = c.boundary.find(d - 1);
        if (it != c.boundary.end() && (it->second * m).nnz() != 0) return false;
    }
    return true;
}

std::string pair_text(const Generator& a, const Generator& b) { return show(a) + " -> " + show(b); }

// ---------------------------------------------------------------- delta-squared

void suite_delta_squared(Suite& s)
{
    const std::size_t n = 120;
    auto t = s.sampled<4>(1, n, [](std::size_t i, std::array<Tally, 4>& t, Rng& rng) {
        AdmissiblePath p = below_sample(rng, i);
        GradedComplex c = build_complex(below_spec(p));
        t[0].expect(d_squared_zero(c), [&] { return "boundary squared nonzero below " + show(p); });
        for (const auto& [d, m] : c.boundary)
            for (const auto& [ij, v] : m.entries) {
                const Generator& a = c.basis.at(d)[ij.second];
                const Generator& b = c.basis.at(d - 1)[ij.first];
                t[1].expect(relative_index(a, b) == 1 && (v == 1 || v == -1), [&] { return pair_text(a, b); });
            }
        for (const auto& q : enumerate_below(p))
            for (const Corner& cr : corners(q)) {
                if (!cr.roundable()) continue;
                AdmissiblePath r = round_corner(q, cr);
                std::array<std::pair<Generator, Generator>, 2> pairs{
                    std::pair{all_e(q), all_e(r)}, std::pair{random_labels(rng, q), random_labels(rng, r)}};
                for (const auto& [a, b] : pairs)
                    t[2].expect(relative_index(a, b) == 2 - a.num_h() + b.num_h(), [&] { return pair_text(a, b); });
            }
        t[3].checked += (i64)c.total_size();
    });
    json gens{{"generators", t[3].checked}, {"paths", n}};
    s.record("below", "boundary squared is zero on every generator of sampled below-path complexes", t[0], gens);
    s.record("degree", "every nonzero coefficient is +-1 and lowers the index by exactly one", t[1]);
    s.record("single-rounding-index", "I(a,b) = 2 - #h(a) + #h(b) whenever b rounds one corner of a", t[2]);

    Tally bar;
    ComplexSpec spec;
    spec.kind = SpecKind::Bar;
    spec.diameter = 3;
    spec.degrees = std::pair<i64, i64>{0, 3};
    GradedComplex c = build_complex(spec);
    bar.expect(d_squared_zero(c), [] { return std::string("bar truncation"); });
    for (const auto& [d, m] : c.boundary)
        for (const auto& [ij, v] : m.entries) {
            const Generator& a = c.basis.at(d)[ij.second];
            const Generator& b = c.basis.at(d - 1)[ij.first];
            bar.expect(relative_index(a, b) == 1, [&] { return pair_text(a, b); });
        }
    s.record("bar", "boundary squared is zero on the bar truncation n=1, D=3", bar,
             {{"generators", c.total_size()}});
}

// ---------------------------------------------------------------- axioms

struct EdgeInfo {
    AngleKey angle;
    Vec from, to;
    i64 mult;
    bool h;
};

std::vector<EdgeInfo> edge_info(const Generator& g)
{
    auto v = g.path.vertices();
    std::vector<EdgeInfo> out;
    for (std::size_t i = 0; i < g.path.num_edges(); ++i)
        out.push_back({g.path.domain_angle(i), v[i], v[i + 1], g.path.edges[i].mult, g.labels[i] != 0});
    return out;
}

int find_angle(const std::vector<EdgeInfo>& es, const AngleKey& a)
{
    for (std::size_t i = 0; i < es.size(); ++i)
        if (es[i].angle == a) return (int)i;
    return -1;
}

bool agree(const EdgeInfo& a, const EdgeInfo& b) { return a.from == b.from && a.to == b.to; }
bool partially_agree(const EdgeInfo& a, const EdgeInfo& b) { return cross(a.angle.dir, b.from - a.from) == 0; }

// D(a, b) as marks on the alternating sequence of event angles and the
// intervals between them.  Element 2i is the i-th event, 2i+1 the interval
// after it; open paths get a leading interval, stored last.
struct Disagreement {
    std::vector<AngleKey> events;
    std::vector<bool> marked;
    bool cyclic;

    bool connected() const
    {
        std::size_t m = marked.size();
        if (m == 0) return true;
        std::vector<bool> seq;
        if (cyclic) {
            seq = marked;
        } else {
            seq.push_back(marked.back());
            seq.insert(seq.end(), marked.begin(), marked.end() - 1);
        }
        if (std::all_of(seq.begin(), seq.end(), [](bool b) { return b; })) return true;
        std::size_t runs = 0;
        for (std::size_t i = 0; i < seq.size(); ++i) {
            bool prev = i ? seq[i - 1] : (cyclic ? seq.back() : false);
            if (seq[i] && !prev) ++runs;
        }
        return runs <= 1;
    }

    bool contains_event(const AngleKey& a) const
    {
        for (std::size_t i = 0; i < events.size(); ++i)
            if (events[i] == a) return marked[2 * i];
        return false;
    }
};

Disagreement disagreement(const Generator& a, const Generator& b)
{
    auto ea = edge_info(a), eb = edge_info(b);
    Disagreement D;
    D.cyclic = a.path.kind.cyclic();
    for (const auto& e : ea) D.events.push_back(e.angle);
    for (const auto& e : eb) D.events.push_back(e.angle);
    std::sort(D.events.begin(), D.events.end(), key_less);
    D.events.erase(std::unique(D.events.begin(), D.events.end()), D.events.end());
    std::size_t m = D.events.size();
    std::vector<bool> raw(2 * m + (D.cyclic ? 0 : 1), false);
    for (std::size_t i = 0; i < m; ++i) {
        int x = find_angle(ea, D.events[i]), y = find_angle(eb, D.events[i]);
        raw[2 * i] = x < 0 || y < 0 || !agree(ea[x], eb[y]);
        AngleKey after(D.events[i].lap, D.events[i].dir, 1);
        raw[2 * i + 1] = a.path.value_at(after) != b.path.value_at(after);
    }
    if (!D.cyclic) raw.back() = a.path.value_at(AngleKey(a.path.kind.lo)) != b.path.value_at(AngleKey(a.path.kind.lo));
    if (m == 0 && D.cyclic) raw.push_back(a.path.anchor != b.path.anchor);
    // closure: a marked interval marks its end events
    D.marked = raw;
    for (std::size_t i = 0; i < m; ++i) {
        if (!raw[2 * i + 1]) continue;
        D.marked[2 * i] = true;
        if (i + 1 < m) D.marked[2 * i + 2] = true;
        else if (D.cyclic) D.marked[0] = true;
    }
    if (!D.cyclic && m > 0 && raw.back()) D.marked[0] = true;
    return D;
}

// Removes matching edges; returns the coefficient of the reduced pair in the
// ordering with matched h edges first, or none when not applicable.
struct LocalityResult {
    i64 original;
    i64 reduced;
};

std::optional<LocalityResult> locality(const Generator& a, const Generator& b, i64 coef)
{
    auto ea = edge_info(a), eb = edge_info(b);
    std::vector<bool> keep_a(ea.size(), true), keep_b(eb.size(), true);
    std::vector<i64> mult_a(ea.size());
    std::vector<std::uint8_t> lab_a(ea.size());
    for (std::size_t i = 0; i < ea.size(); ++i) {
        mult_a[i] = ea[i].mult;
        lab_a[i] = ea[i].h;
    }
    std::vector<std::pair<int, int>> matched;
    for (std::size_t i = 0; i < ea.size(); ++i) {
        int j = find_angle(eb, ea[i].angle);
        if (j < 0) continue;
        if (agree(ea[i], eb[j])) {
            keep_a[i] = keep_b[j] = false;
            if (ea[i].h != eb[j].h) return std::nullopt;
            if (ea[i].h) matched.push_back({(int)i, j});
        } else if (partially_agree(ea[i], eb[j])) {
            if (eb[j].h && !ea[i].h) return std::nullopt;
            keep_b[j] = false;
            mult_a[i] -= eb[j].mult;
            if (mult_a[i] <= 0) return std::nullopt;
            lab_a[i] = ea[i].h && !eb[j].h;
            if (ea[i].h && eb[j].h) matched.push_back({(int)i, j});
        }
    }
    auto order_of = [](const Generator& g, const std::vector<int>& first) {
        std::vector<int> o = first;
        for (int e : g.h_edges())
            if (std::find(first.begin(), first.end(), e) == first.end()) o.push_back(e);
        return o;
    };
    std::vector<int> fa, fb;
    for (auto [i, j] : matched) {
        fa.push_back(i);
        fb.push_back(j);
    }
    auto oa = order_of(a, fa), ob = order_of(b, fb);
    int sa = make_generator(a.path, a.labels, oa).second;
    int sb = make_generator(b.path, b.labels, ob).second;

    auto reduce = [&](const Generator& g, const std::vector<EdgeInfo>& es, const std::vector<bool>& keep,
                      const std::vector<i64>& mult, const std::vector<std::uint8_t>& lab, const std::vector<int>& order,
                      std::size_t skip) -> std::pair<Generator, int> {
        std::vector<Edge> edges;
        std::vector<std::uint8_t> labels;
        std::vector<int> newidx(es.size(), -1);
        Vec disp{};
        for (std::size_t i = 0; i < es.size(); ++i) {
            if (!keep[i]) continue;
            newidx[i] = (int)edges.size();
            edges.push_back({{es[i].angle.lap, es[i].angle.dir}, mult[i]});
            labels.push_back(lab[i]);
            disp = disp + mult[i] * es[i].angle.dir;
        }
        std::vector<int> o;
        for (std::size_t k = skip; k < order.size(); ++k)
            if (newidx[order[k]] >= 0 && labels[newidx[order[k]]]) o.push_back(newidx[order[k]]);
        PathKind kind = g.path.kind;
        if (kind.cyclic()) kind = disp == Vec{} ? PathKind::closed(kind.n) : PathKind::periodic(kind.n, disp);
        AdmissiblePath p = make_path(kind, edges, g.path.anchor);
        return make_generator(p, labels, o);
    };
    std::vector<std::uint8_t> lab_b(eb.size());
    std::vector<i64> mult_b(eb.size());
    for (std::size_t j = 0; j < eb.size(); ++j) {
        lab_b[j] = eb[j].h;
        mult_b[j] = eb[j].mult;
    }
    try {
        auto [a2, sa2] = reduce(a, ea, keep_a, mult_a, lab_a, oa, matched.size());
        auto [b2, sb2] = reduce(b, eb, keep_b, mult_b, lab_b, ob, matched.size());
        return LocalityResult{sa * sb * coef, sa2 * sb2 * differential(a2).coef(b2)};
    } catch (const DomainError&) {
        return std::nullopt;
    }
}

void suite_axioms(Suite& s)
{
    const std::size_t n = 60;
    enum { Nest, Label, Conn, Double, Local, Simple, Degen, Pairs, LocalSkip };
    auto t = s.sampled<9>(2, n, [](std::size_t i, std::array<Tally, 9>& t, Rng& rng) {
        AdmissiblePath p;
        switch (i % 4) {
        case 0: p = random_closed(rng, 3, 1); break;
        case 1: p = random_closed(rng, 2, 2); break;
        case 2: p = random_periodic(rng, 2, 1 + (i / 4) % 2); break;
        default: p = random_open_distinct(rng, 3); break;
        }
        GradedComplex c = build_complex(below_spec(p));
        for (const auto& [d, m] : c.boundary)
            for (const auto& [ij, v] : m.entries) {
                const Generator& a = c.basis.at(d)[ij.second];
                const Generator& b = c.basis.at(d - 1)[ij.first];
                auto why = [&] { return pair_text(a, b); };
                ++t[Pairs].checked;
                t[Nest].expect(leq(b.path, a.path), why);
                auto ea = edge_info(a), eb = edge_info(b);
                bool labels_ok = true;
                for (std::size_t x = 0; x < ea.size(); ++x) {
                    int y = find_angle(eb, ea[x].angle);
                    if (y < 0) continue;
                    if (agree(ea[x], eb[y])) labels_ok &= ea[x].h == eb[y].h;
                    else if (partially_agree(ea[x], eb[y]) && eb[y].h) labels_ok &= ea[x].h;
                }
                t[Label].expect(labels_ok, why);
                Disagreement D = disagreement(a, b);
                t[Conn].expect(D.connected(), why);
                int in_d = 0;
                for (const auto& e : ea) in_d += D.contains_event(e.angle);
                t[Double].expect(in_d < 3, why);
                auto loc = locality(a, b, v.get_si());
                if (loc) t[Local].expect(loc->original == loc->reduced, why);
                else ++t[LocalSkip].checked;
            }
        // Simple and degenerate roundings that lose one h.
        for (const auto& [d, gens] : c.basis)
            for (const Generator& a : gens) {
                Chain full = differential(a);
                for (const Corner& cr : corners(a.path)) {
                    if (!cr.roundable()) continue;
                    auto rr = round_corner_detail(a.path, cr);
                    std::size_t fresh = rr.arc.size() - rr.first_is_old - rr.last_is_old;
                    bool degenerate = compare_gap_with_pi(cr.prev, cr.next) == 0;
                    bool simple = false;
                    if (fresh == 1) {
                        int e = rr.path.find_edge(rr.arc[rr.first_is_old ? 1 : 0]);
                        simple = e >= 0 && rr.path.edges[e].mult == 1;
                    }
                    if (!simple && !degenerate) continue;
                    Chain local = differential_at(a, cr);
                    for (const auto& [b, v] : local.terms()) {
                        if (b.num_h() != a.num_h() - 1) continue;
                        auto why = [&] { return pair_text(a, b); };
                        t[degenerate ? Degen : Simple].expect((v == 1 || v == -1) && full.coef(b) == v, why);
                    }
                }
            }
    });
    json pairs{{"pairs", t[Pairs].checked}, {"paths", n}};
    s.record("nesting", "b <= a whenever <da, b> != 0", t[Nest], pairs);
    s.record("label-matching", "agreeing edges carry equal labels; a partially agreeing h edge of b meets an h edge of a",
             t[Label]);
    s.record("connectedness", "the disagreement set D(a,b) is connected", t[Conn]);
    s.record("no-double-rounding", "a has at most two edges in D(a,b)", t[Double]);
    s.record("locality", "removing matching edges preserves the coefficient", t[Local],
             {{"not-applicable", t[LocalSkip].checked}});
    s.record("simple-rounding", "simple roundings losing one h have coefficient +-1", t[Simple]);
    s.record("degenerate-rounding", "degenerate roundings losing one h have coefficient +-1", t[Degen]);
}

// ---------------------------------------------------------------- rounding-commute

void suite_rounding_commute(Suite& s)
{
    const std::size_t n = 220;
    auto t = s.sampled<2>(3, n, [](std::size_t i, std::array<Tally, 2>& t, Rng& rng) {
        AdmissiblePath p = any_path(rng, i);
        auto cs = corners(p);
        for (const Corner& a : cs) {
            if (!a.roundable()) continue;
            AdmissiblePath ra = round_corner(p, a);
            for (const Corner& b : cs) {
                if (b.index == a.index || b.prev_edge < 0 || b.next_edge < 0) continue;
                ++t[1].checked;
                Corner b1 = corner_containing(ra, inside(b));
                if (!b1.roundable()) continue;
                auto why = [&] { return show(p) + " corners " + std::to_string(a.index) + "," + std::to_string(b.index); };
                if (!b.roundable()) {
                    t[0].expect(false, why);
                    continue;
                }
                AdmissiblePath rb = round_corner(p, b);
                Corner a1 = corner_containing(rb, inside(a));
                if (!a1.roundable()) {
                    t[0].expect(false, why);
                    continue;
                }
                t[0].expect(round_corner(ra, b1) == round_corner(rb, a1), why);
            }
        }
    });
    s.record("commute", "rounding two corners in either order gives the same path", t[0],
             {{"corner-pairs", t[1].checked}, {"paths", n}});
}

// ---------------------------------------------------------------- u-chainmap, homotopy

void suite_u_chainmap(Suite& s)
{
    const std::size_t n = 150;
    auto t = s.sampled<3>(4, n, [](std::size_t i, std::array<Tally, 3>& t, Rng& rng) {
        Generator g = random_labels(rng, any_path(rng, i));
        GenericAngle cut = random_cut(rng, g.path);
        Chain u = u_map(Chain(g), cut);
        auto why = [&] { return show(g) + " cut " + show(cut); };
        bool graded = true;
        for (const auto& [b, c] : u.terms()) graded &= relative_index(g, b) == 2 && b.num_h() == g.num_h();
        t[0].expect(graded, why);
        t[1].expect(differential(u) == u_map(differential(Chain(g)), cut), why);
        AdmissiblePath p = g.path;
        Corner c = corner_containing(p, cut);
        if (c.roundable()) {
            AdmissiblePath r = round_corner(p, c);
            t[2].expect(u_map(e_cycle(p), cut) == e_cycle(r) && u_map(h_cycle(p), cut) == h_cycle(r), why);
        } else if (c.is_kink) {
            t[2].expect(u_map(e_cycle(p), cut).empty(), why);
        }
    });
    s.record("index", "every term of U lowers the index by two and keeps the number of h edges", t[0], {{"samples", n}});
    s.record("chain-map", "dU = Ud", t[1]);
    s.record("e-h-cycles", "U sends E and H to E and H of the rounded path", t[2]);
}

void suite_homotopy(Suite& s)
{
    const std::size_t n = 150;
    auto t = s.sampled<5>(5, n, [](std::size_t i, std::array<Tally, 5>& t, Rng& rng) {
        Generator g = random_labels(rng, any_path(rng, i));
        Chain x(g);
        auto c1 = random_cut(rng, g.path), c2 = random_cut(rng, g.path);
        if (!g.path.kind.cyclic() && !key_less(AngleKey(c1), AngleKey(c2))) std::swap(c1, c2);
        auto why = [&] { return show(g) + " cuts " + show(c1) + " " + show(c2); };
        if (!(c1 == c2)) {
            Chain k = k_homotopy(x, c1, c2);
            t[0].expect(differential(k) + k_homotopy(differential(x), c1, c2) == u_map(x, c1) - u_map(x, c2), why);
        }
        if (g.path.kind.cyclic()) t[1].expect(k_homotopy(x, c1, c1) == delta_prime(x), why);
        Chain dp = delta_prime(x);
        t[2].expect((differential(dp) + delta_prime(differential(x))).empty(), why);
        t[3].expect(delta_prime(dp).empty(), why);
        t[4].expect(delta_twisted(delta_twisted(to_twisted(x))).empty(), why);
    });
    s.record("homotopy", "dK + Kd = U(c1) - U(c2)", t[0], {{"samples", n}});
    s.record("full-turn", "K over a full turn is d'", t[1]);
    s.record("anticommute", "d'd + dd' = 0", t[2]);
    s.record("d-prime-squared", "d'd' = 0", t[3]);
    s.record("twisted-squared", "the twisted differential squares to zero", t[4]);
}

// ---------------------------------------------------------------- cycles

Mat2 random_sl2(Rng& rng)
{
    std::uniform_int_distribution<i64> k(-2, 2);
    std::uniform_int_distribution<int> w(0, 1);
    Mat2 m{1, 0, 0, 1};
    for (int s = 0; s < 3; ++s) {
        i64 v = k(rng);
        Mat2 e = w(rng) ? Mat2{1, v, 0, 1} : Mat2{1, 0, v, 1};
        m = {m[0] * e[0] + m[1] * e[2], m[0] * e[1] + m[1] * e[3], m[2] * e[0] + m[3] * e[2], m[2] * e[1] + m[3] * e[3]};
    }
    return m;
}

void suite_cycles(Suite& s)
{
    const std::size_t n = 120;
    auto t = s.sampled<5>(6, n, [](std::size_t i, std::array<Tally, 5>& t, Rng& rng) {
        AdmissiblePath p = any_path(rng, i);
        t[0].expect(differential(e_cycle(p)).empty() && differential(h_cycle(p)).empty(), [&] { return show(p); });

        std::uniform_int_distribution<i64> c(-3, 3);
        i64 nn = 1 + (i64)(i % 3);
        Vec a{c(rng), c(rng)}, b{c(rng), c(rng)};
        if (a == b) b.x += 1;
        Chain z = z_cycle(nn, a, b);
        t[1].expect(!z.empty() && differential(z).empty() && (z + z_cycle(nn, b, a)).empty(),
                    [&] { return "Z(" + show(a) + "," + show(b) + ")"; });

        Vec d{c(rng), c(rng)};
        if (d == Vec{}) d = {1, 0};
        d = primitive_of(d).first;
        ExtendedAngle th{0, d};
        AngleKey opp = plus_pi(AngleKey(th));
        Vec bb = a + d;
        auto why = [&] { return show(a) + " dir " + show(d) + " n=" + std::to_string(nn); };
        t[2].expect(differential(p_gen(a, th, nn)).empty() && differential(q_cycle(a, bb, nn)).empty(), why);
        t[3].expect(differential(e_gen(a, th, nn)) == p_gen(bb, {opp.lap, opp.dir}, nn) - p_gen(a, th, nn), why);
    });
    s.record("e-h", "E and H are cycles", t[0], {{"samples", n}});
    s.record("z", "Z_n(a,b) is a nonzero cycle with Z_n(a,b) + Z_n(b,a) = 0", t[1]);
    s.record("p-q", "p(a,t) and q(a,b) are cycles", t[2]);
    s.record("e", "d e(a,t) = p(b,t+pi) - p(a,t)", t[3]);

    const std::size_t tri = 12;
    auto w = s.sampled<1>(7, tri, [](std::size_t i, std::array<Tally, 1>& t, Rng& rng) {
        i64 nn = 1 + (i64)(i % 2);
        Mat2 m = random_sl2(rng);
        std::uniform_int_distribution<i64> c(-2, 2);
        Vec o{c(rng), c(rng)};
        Vec a = o, b = o + apply(m, {1, 0}), cc = o + apply(m, {0, 1});
        GradedComplex cx = build_complex(below_spec(n_convex({a, b, cc}, nn)));
        HomologyEngine e(cx);
        Chain rel = z_cycle(nn, a, b) + z_cycle(nn, b, cc) + z_cycle(nn, cc, a);
        auto y = e.boundary_witness(rel);
        t[0].expect(y && differential(*y) == rel, [&] { return show(a) + show(b) + show(cc) + " n=" + std::to_string(nn); });
    });
    s.record("triangle-relation", "Z_n(a,b) + Z_n(b,c) + Z_n(c,a) bounds for simple triangles (witness checked)", w[0],
             {{"triangles", tri}});
}

// ---------------------------------------------------------------- theorem-5

i64 total_rank(HomologyEngine& e, bool& torsion)
{
    i64 r = 0;
    for (const auto& [d, b] : e.complex().basis) {
        auto h = e.group(d);
        r += h.rank;
        torsion |= !h.torsion.empty();
    }
    return r;
}

// Infinite order class that is not a boundary.
bool free_class(HomologyEngine& e, const Chain& x)
{
    if (e.boundary_witness(x)) return false;
    i64 d = e.complex().degree_of(x.terms().begin()->first);
    auto coords = e.coordinates(e.complex().to_vector(x, d), d);
    if (!coords) return false;
    const auto& orders = e.basis(d).orders;
    for (std::size_t i = 0; i < orders.size(); ++i)
        if (orders[i] == 0 && (*coords)[i] != 0) return true;
    return false;
}

void suite_theorem_5(Suite& s)
{
    const std::size_t nd = 24, ne = 12;
    auto open = s.sampled<2>(8, nd + ne, [&](std::size_t i, std::array<Tally, 2>& t, Rng& rng) {
        auto h = polygon_with_points(rng, 4, 2, 12);
        std::size_t m = h.size();
        std::uniform_int_distribution<std::size_t> st(0, m - 1), len(1, std::max<std::size_t>(1, m - 1));
        std::size_t a = st(rng);
        std::vector<Vec> chain;
        bool closed_up = i >= nd;
        std::size_t l = closed_up ? m : len(rng);
        for (std::size_t k = 0; k <= l; ++k) chain.push_back(h[(a + k) % m]);
        AdmissiblePath p = open_chain(chain);
        GradedComplex c = build_complex(below_spec(p));
        HomologyEngine e(c);
        bool torsion = false;
        i64 r = total_rank(e, torsion);
        auto why = [&] { return show(p) + " rank " + std::to_string(r); };
        if (closed_up) {
            t[1].expect(r == 3 && !torsion, why);
        } else {
            t[0].expect(r == 2 && !torsion && free_class(e, e_cycle(p)) && free_class(e, h_cycle(p)), why);
        }
    });
    s.record("open-distinct", "convex open path, distinct ends: free of rank 2 on the classes of E and H", open[0],
             {{"samples", nd}});
    s.record("open-equal", "convex open path, equal ends: free of rank 3", open[1], {{"samples", ne}});

    const std::size_t per_k = 3;
    auto closed = s.sampled<3>(9, 5 * per_k, [&](std::size_t i, std::array<Tally, 3>& t, Rng& rng) {
        std::size_t k = 2 + i / per_k;
        AdmissiblePath p = n_convex(polygon_with_points(rng, 4, k, k), 1);
        GradedComplex c = build_complex(below_spec(p));
        HomologyEngine e(c);
        i64 top = 2 * ((i64)k - 1);
        bool ok = true;
        std::ostringstream got;
        for (const auto& [d, b] : c.basis) {
            auto h = e.group(d);
            i64 want = d == 0 ? (i64)k : (d >= 1 && d <= top ? 1 : 0);
            ok &= h.rank == want && h.torsion.empty();
            got << ' ' << h;
        }
        t[0].expect(ok, [&] { return show(p) + got.str(); });
        GradedComplex z = build_complex(below_spec(p, -2));
        HomologyEngine ez(z);
        bool zok = true;
        for (const auto& [d, b] : z.basis) {
            auto h = ez.group(d);
            zok &= h.torsion.empty() && h.rank == (d == 0 ? (i64)k - 1 : 0);
        }
        t[1].expect(zok, [&] { return show(p); });
        // the same count for a doubly wrapped polygon
        if (k <= 4) {
            AdmissiblePath p2 = n_convex(polygon_with_points(rng, 2, k, k), 2);
            GradedComplex c2 = build_complex(below_spec(p2, -4));
            HomologyEngine e2(c2);
            auto h = e2.group(0);
            t[2].expect(h.rank == (i64)k - 1 && h.torsion.empty(), [&] { return show(p2); });
        }
    });
    s.record("closed-rotation-one", "rotation one, k points: H_0 = Z^k, H_i = Z for 1 <= i <= 2(k-1), else 0",
             closed[0], {{"k", {2, 6}}, {"per-k", per_k}});
    s.record("zero-homology", "the j = -2 piece is Z^(k-1) in degree 0 and vanishes elsewhere", closed[1]);
    s.record("zero-homology-n2", "the j = -4 piece of a 2-convex path is Z^(k-1) in degree 0", closed[2]);
}

// ---------------------------------------------------------------- flattening

std::set<i64> j_values(const GradedComplex& c)
{
    std::set<i64> js;
    for (const auto& [d, b] : c.basis)
        for (const auto& g : b) js.insert(j_grading(g));
    return js;
}

void suite_flattening(Suite& s)
{
    const std::size_t per_n = 8;
    static const Direction dirs[] = {{2, 1}, {1, 2}, {-1, 3}, {3, -1}, {1, 1}, {-2, 1}};
    auto t = s.sampled<2>(10, 2 * per_n, [&](std::size_t i, std::array<Tally, 2>& t, Rng& rng) {
        i64 n = 1 + (i64)(i / per_n);
        AdmissiblePath lam = n_convex(polygon_with_points(rng, 3, 2, 5), n);
        i64 k = (i64)enclosed_points(lam).size();
        AdmissiblePath lam0 = x_axis_convex(k, n);
        std::uniform_int_distribution<int> d(0, 5);
        std::uniform_int_distribution<i64> l(0, n - 1);
        GenericAngle cut{l(rng), dirs[d(rng)]};
        auto js = j_values(build_complex(below_spec(lam0)));
        auto js1 = j_values(build_complex(below_spec(lam)));
        js.insert(js1.begin(), js1.end());
        auto f = [&](const Generator& g) { return flatten(g, lam0, lam, cut); };
        for (i64 j : js) {
            GradedComplex c0 = build_complex(below_spec(lam0, j)), c1 = build_complex(below_spec(lam, j));
            HomologyEngine e0(c0), e1(c1);
            i64 lo = std::numeric_limits<i64>::max(), hi = std::numeric_limits<i64>::min();
            for (const auto* c : {&c0, &c1})
                for (const auto& [dd, b] : c->basis)
                    if (!b.empty()) lo = std::min(lo, dd), hi = std::max(hi, dd);
            for (i64 dd = lo; dd <= hi; ++dd) {
                auto why = [&] { return show(lam) + " j=" + std::to_string(j) + " i=" + std::to_string(dd); };
                try {
                    auto m = induced_map(f, e0, e1, dd);
                    t[0].expect(true, why);
                    t[1].expect(m.iso, why);
                } catch (const ChainMapError& e) {
                    t[0].expect(false, [&] { return why() + ": " + e.what(); });
                }
            }
        }
    });
    s.record("chain-map", "flattening commutes with the boundary", t[0], {{"paths", 2 * per_n}});
    s.record("iso", "flattening induces isomorphisms in every (i, j) with i, j in range", t[1]);
}

// ---------------------------------------------------------------- splicing

ComplexSpec xaxis_spec(i64 n, i64 M, i64 j)
{
    ComplexSpec s;
    s.kind = SpecKind::XAxis;
    s.n = n;
    s.box = M;
    s.j = j;
    s.degrees = std::pair<i64, i64>{0, 4};
    return s;
}

i64 expected_hx(i64 i, i64 j, i64 n)
{
    if (i < 0) return 0;
    return j == 2 * (i / 2) - 2 * n + 2 ? 1 : 0;
}

void suite_splicing(Suite& s, double budget)
{
    const std::size_t n = 300;
    auto t = s.sampled<2>(11, n, [](std::size_t i, std::array<Tally, 2>& t, Rng& rng) {
        i64 nn = 1 + (i64)(i % 3);
        Generator g = random_x_generator(rng, nn, 4);
        auto why = [&] { return show(g); };
        Chain sg = splice(g);
        bool graded = true;
        for (const auto& [b, c] : sg.terms())
            graded &= index(b) == index(g) && j_grading(b) == j_grading(g) - 2 && b.path.kind.n == nn + 1;
        t[0].expect(graded && differential(sg) == splice(differential(g)), why);
        Chain lhs = splice(u_map(g, slot_corner_cut(2 * nn - 1)));
        Chain rhs = u_map(sg, slot_corner_cut(2 * nn));
        t[1].expect(lhs == rhs, why);
    });
    s.record("chain-map", "dS = Sd, S keeps the index and lowers j by two", t[0], {{"samples", n}});
    s.record("su-us", "SU = US with U at the corner before the splice", t[1]);

    auto start = clock_type::now();
    auto left = [&] { return budget - std::chrono::duration<double>(clock_type::now() - start).count(); };
    std::map<std::pair<i64, i64>, i64> stage1;
    for (i64 nn = 1; nn <= 2; ++nn) {
        json table = json::array();
        CheckStatus st = CheckStatus::Pass;
        for (i64 j = -2 * nn; j <= 8 - 2 * nn; j += 2)
            for (i64 i = 0; i <= 4; ++i) {
                if (i == 0 && j == -2 * nn) continue;
                auto r = stabilize([&](i64 M) { return xaxis_spec(nn, M, j); }, i, 2, 1, 8, std::max(0.0, left()));
                i64 want = expected_hx(i, j, nn);
                bool match = r.group.rank == want && r.group.torsion.empty();
                if (!r.stabilized && st == CheckStatus::Pass) st = CheckStatus::Flagged;
                if (r.stabilized && !match) st = CheckStatus::Fail;
                if (nn == 1) stage1[{i, j}] = r.stage;
                table.push_back({{"i", i}, {"j", j}, {"rank", r.group.rank}, {"expected", want},
                                 {"torsion", r.group.torsion.size()}, {"stage", r.stage}, {"stabilized", r.stabilized}});
            }
        s.add("pattern-n" + std::to_string(nn),
              "stabilized x-axis homology is Z exactly at i = 2k, 2k+1 with j = 2k - 2n + 2 (i <= 4)", st,
              {{"groups", table}});
    }

    // S on homology at a box size past every stabilization stage.  The new
    // slot of S(x) is at most 2M + 1, which fixes the target box.  H_0 at the
    // lowest j grows with the box and is skipped.
    i64 M = 2;
    for (const auto& [ij, stg] : stage1) M = std::max(M, stg + 1);
    M = std::min<i64>(M, 8);
    Tally iso;
    json maps = json::array();
    for (i64 j = -2; j <= 6; j += 2) {
        GradedComplex c1 = build_complex(xaxis_spec(1, M, j)), c2 = build_complex(xaxis_spec(2, 2 * M + 1, j - 2));
        HomologyEngine e1(c1), e2(c2);
        for (i64 i = 0; i <= 4; ++i) {
            if (i == 0 && j == -2) continue;
            auto why = [&] { return "i=" + std::to_string(i) + " j=" + std::to_string(j); };
            try {
                auto m = induced_map([](const Generator& g) { return splice(g); }, e1, e2, i);
                iso.expect(m.iso, why);
                maps.push_back({{"i", i}, {"j", j}, {"iso", m.iso}, {"rank", m.source_orders.size()}});
            } catch (const std::exception& e) {
                iso.error(why() + ": " + e.what());
            }
        }
    }
    s.record("iso", "S induces isomorphisms from n = 1 to n = 2 (j lowered by two)", iso, {{"box", M}, {"target-box", 2 * M + 1}, {"maps", maps}});
}

// ---------------------------------------------------------------- vanishing, hbar

void suite_vanishing(Suite& s, double budget)
{
    auto start = clock_type::now();
    auto left = [&] { return budget - std::chrono::duration<double>(clock_type::now() - start).count(); };
    for (Vec g : {Vec{1, 0}, Vec{2, 0}, Vec{1, 1}}) {
        json groups = json::array();
        CheckStatus st = CheckStatus::Pass;
        for (i64 d = 0; d <= 3; ++d) {
            auto family = [&](i64 depth) {
                ComplexSpec sp;
                sp.kind = SpecKind::Periodic;
                sp.gamma = g;
                sp.depth = depth;
                return sp;
            };
            auto r = stabilize(family, d, 2, 0, 12, std::max(0.0, left()));
            if (!r.stabilized && st == CheckStatus::Pass) st = CheckStatus::Flagged;
            if (r.stabilized && !r.group.is_zero()) st = CheckStatus::Fail;
            json trend = json::array();
            for (const auto& h : r.trend) trend.push_back(h.rank);
            groups.push_back(
                {{"degree", d}, {"rank", r.group.rank}, {"stage", r.stage}, {"stabilized", r.stabilized}, {"trend", trend}});
        }
        s.add("gamma-" + std::to_string(g.x) + "-" + std::to_string(g.y),
              "homology of growing periodic regions vanishes in degrees 0..3", st, {{"groups", groups}});
    }
}

void suite_hbar(Suite& s, double budget)
{
    auto start = clock_type::now();
    auto left = [&] { return budget - std::chrono::duration<double>(clock_type::now() - start).count(); };
    auto family = [](i64 D) {
        ComplexSpec sp;
        sp.kind = SpecKind::Bar;
        sp.diameter = D;
        sp.degrees = std::pair<i64, i64>{0, 3};
        return sp;
    };
    i64 stage = 1;
    bool all_stable = true;
    for (i64 d = 0; d <= 3; ++d) {
        auto r = stabilize(family, d, 2, 1, 7, std::max(0.0, left()));
        CheckStatus st = !r.stabilized                                     ? CheckStatus::Flagged
                         : r.group.rank == 3 && r.group.torsion.empty() ? CheckStatus::Pass
                                                                          : CheckStatus::Fail;
        if (d <= 2) all_stable &= r.stabilized;
        if (r.stabilized && d <= 2) stage = std::max(stage, r.stage);
        json trend = json::array();
        for (const auto& h : r.trend) trend.push_back(show(h));
        s.add("degree-" + std::to_string(d), d == 3 ? "bar homology stabilizes to Z^3 (degree 3, stretch)"
                                                    : "bar homology stabilizes to Z^3",
              st, {{"rank", r.group.rank}, {"torsion", r.group.torsion.size()}, {"stage", r.stage}, {"trend", trend}});
    }
    // U from degree 2 to degree 0 on the stabilized truncation.
    GradedComplex c = build_complex(family(stage + 1));
    HomologyEngine e(c);
    json maps = json::array();
    bool iso = true;
    std::string err;
    for (GenericAngle cut : {GenericAngle{0, {1, 0}}, GenericAngle{0, {-1, 2}}}) {
        try {
            auto m = induced_map([&](const Generator& g) { return u_map(g, cut); }, e, e, 2, -2);
            iso &= m.iso;
            maps.push_back({{"cut", show(cut)}, {"iso", m.iso}, {"matrix", show(m.matrix)}});
        } catch (const std::exception& ex) {
            iso = false;
            err = ex.what();
        }
    }
    json data{{"stage", stage + 1}, {"maps", maps}};
    if (!err.empty()) data["error"] = err;
    s.add("u-iso", "U induces an isomorphism from degree 2 to degree 0",
          !all_stable ? CheckStatus::Flagged : iso ? CheckStatus::Pass : CheckStatus::Fail, data);
}

using Runner = std::function<void(Suite&, double)>;

const std::vector<std::pair<std::string, Runner>>& registry()
{
    static const std::vector<std::pair<std::string, Runner>> r{
        {"delta-squared", [](Suite& s, double) { suite_delta_squared(s); }},
        {"axioms", [](Suite& s, double) { suite_axioms(s); }},
        {"rounding-commute", [](Suite& s, double) { suite_rounding_commute(s); }},
        {"u-chainmap", [](Suite& s, double) { suite_u_chainmap(s); }},
        {"homotopy", [](Suite& s, double) { suite_homotopy(s); }},
        {"cycles", [](Suite& s, double) { suite_cycles(s); }},
        {"theorem-5", [](Suite& s, double) { suite_theorem_5(s); }},
        {"flattening", [](Suite& s, double) { suite_flattening(s); }},
        {"splicing", suite_splicing},
        {"vanishing", suite_vanishing},
        {"hbar", suite_hbar},
    };
    return r;
}

}  // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [n, r] : registry()) v.push_back(n);
        v.push_back("all");
        return v;
    }();
    return names;
}

bool is_suite(const std::string& name)
{
    const auto& v = suite_names();
    return std::find(v.begin(), v.end(), name) != v.end();
}

SuiteReport run_suite(const std::string& name, const VerifyOptions& opt)
{
    if (!is_suite(name)) throw std::invalid_argument("unknown suite \"" + name + "\"");
    auto start = clock_type::now();
    SuiteReport rep;
    rep.suite = name;
    rep.seed = opt.seed;
    for (const auto& [n, run] : registry()) {
        if (name != "all" && name != n) continue;
        Suite s(n, opt, clock_type::now());
        run(s, std::max(0.0, opt.budget - std::chrono::duration<double>(clock_type::now() - start).count()));
        for (auto& c : s.checks) rep.checks.push_back(std::move(c));
    }
    if (opt.strict)
        for (auto& c : rep.checks)
            if (c.status == CheckStatus::Flagged) c.status = CheckStatus::Fail;
    std::sort(rep.checks.begin(), rep.checks.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    rep.seconds = std::chrono::duration<double>(clock_type::now() - start).count();
    return rep;
}

json to_json(const SuiteReport& r)
{
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"id", c.id}, {"description", c.description}, {"status", status_name(c.status)}, {"data", c.data}});
    return {{"suite", r.suite},
            {"seed", r.seed},
            {"checks", checks},
            {"passed", r.count(CheckStatus::Pass)},
            {"failed", r.count(CheckStatus::Fail)},
            {"flagged", r.count(CheckStatus::Flagged)},
            {"seconds", r.seconds},
            {"exit_status", r.exit_status()}};
}

void print_table(std::ostream& os, const SuiteReport& r)
{
    std::size_t w = 5;
    for (const auto& c : r.checks) w = std::max(w, c.id.size());
    os << std::left << std::setw((int)w) << "check" << "  " << std::setw(8) << "status" << "  detail\n";
    for (const auto& c : r.checks) {
        std::string detail;
        if (c.data.contains("checked"))
            detail = std::to_string(c.data["checked"].get<i64>()) + " checked, " +
                     std::to_string(c.data["failed"].get<i64>()) + " failed";
        else if (c.data.contains("rank"))
            detail = "rank " + std::to_string(c.data["rank"].get<i64>()) + " at stage " +
                     std::to_string(c.data["stage"].get<i64>());
        else
            detail = c.description;
        os << std::setw((int)w) << c.id << "  " << std::setw(8) << status_name(c.status) << "  " << detail << '\n';
    }
    os << r.count(CheckStatus::Pass) << " passed, " << r.count(CheckStatus::Fail) << " failed, "
       << r.count(CheckStatus::Flagged) << " flagged in " << std::fixed << std::setprecision(1) << r.seconds << " s\n";
}

}  // namespace polyech
