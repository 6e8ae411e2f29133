#include "polyech/json_io.hpp"

#include <string>

namespace polyech {

namespace {

[[noreturn]] void bad(const std::string& what) { throw FormatError(what); }

const json& field(const json& j, const char* key)
{
    if (!j.is_object()) bad(std::string("expected an object holding \"") + key + "\"");
    auto it = j.find(key);
    if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
    return *it;
}

i64 as_int(const json& j, const char* what)
{
    if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
    return j.get<i64>();
}

i64 int_field(const json& j, const char* key) { return as_int(field(j, key), key); }

Vec as_vec(const json& j, const char* what)
{
    if (!j.is_array() || j.size() != 2) bad(std::string(what) + " must be [x, y]");
    return {as_int(j[0], what), as_int(j[1], what)};
}

json vec(Vec v) { return json::array({v.x, v.y}); }

json angle(const GenericAngle& a) { return {{"lap", a.lap}, {"dir", vec(a.dir)}}; }

GenericAngle angle_from(const json& j)
{
    Vec d = as_vec(field(j, "dir"), "dir");
    if (d == Vec{}) bad("dir must be nonzero");
    return {int_field(j, "lap"), d};
}

json kind_json(const PathKind& k)
{
    switch (k.type) {
    case PathType::Open: return {{"type", "open"}, {"lo", angle(k.lo)}, {"hi", angle(k.hi)}};
    case PathType::Closed: return {{"type", "closed"}, {"n", k.n}};
    case PathType::Periodic: return {{"type", "periodic"}, {"n", k.n}, {"gamma", vec(k.gamma)}};
    }
    return {};
}

PathKind kind_from(const json& j)
{
    const json& t = field(j, "type");
    if (!t.is_string()) bad("kind.type must be a string");
    std::string s = t;
    if (s == "open") return PathKind::open(angle_from(field(j, "lo")), angle_from(field(j, "hi")));
    if (s == "closed") return PathKind::closed(int_field(j, "n"));
    if (s == "periodic") return PathKind::periodic(int_field(j, "n"), as_vec(field(j, "gamma"), "gamma"));
    bad("unknown path type \"" + s + "\"");
}

template <class Coef>
json coef_json(const Coef& c)
{
    if constexpr (std::is_same_v<Coef, Laurent>) {
        json m = json::object();
        for (const auto& [e, v] : c.c) m[std::to_string(e)] = v;
        return {{"laurent", m}};
    } else {
        return c;
    }
}

Laurent laurent_from(const json& j)
{
    if (j.is_number_integer()) return Laurent(j.get<i64>());
    const json& m = field(j, "laurent");
    if (!m.is_object()) bad("laurent must map exponents to coefficients");
    Laurent l;
    for (const auto& [e, v] : m.items()) {
        std::size_t used = 0;
        i64 exp = 0;
        try {
            exp = std::stoll(e, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != e.size() || e.empty()) bad("bad laurent exponent \"" + e + "\"");
        l += Laurent::monomial(as_int(v, "laurent coefficient"), exp);
    }
    return l;
}

template <class Coef>
json chain_json(const ChainT<Coef>& x)
{
    json out = json::array();
    for (const auto& [g, c] : x.terms()) out.push_back({{"coefficient", coef_json(c)}, {"generator", to_json(g)}});
    return out;
}

template <class Coef, class Read>
ChainT<Coef> chain_from(const json& j, Read read)
{
    if (!j.is_array()) bad("a chain is a list of terms");
    ChainT<Coef> out;
    for (const json& t : j) out.add(generator_from_json(field(t, "generator")), read(field(t, "coefficient")));
    return out;
}

}  // namespace

json to_json(const AdmissiblePath& p)
{
    json edges = json::array();
    for (const Edge& e : p.edges) edges.push_back({{"dir", vec(e.angle.dir)}, {"lap", e.angle.lap}, {"mult", e.mult}});
    return {{"kind", kind_json(p.kind)}, {"edges", edges}, {"anchor", vec(p.anchor)}};
}

AdmissiblePath path_from_json(const json& j)
{
    PathKind kind = kind_from(field(j, "kind"));
    const json& es = field(j, "edges");
    if (!es.is_array()) bad("edges must be a list");
    std::vector<Edge> edges;
    for (const json& e : es) {
        Vec d = as_vec(field(e, "dir"), "dir");
        if (d == Vec{}) bad("edge dir must be nonzero");
        edges.push_back({{int_field(e, "lap"), d}, int_field(e, "mult")});
    }
    try {
        return make_path(kind, std::move(edges), as_vec(field(j, "anchor"), "anchor"));
    } catch (const DomainError& e) {
        bad(std::string("invalid path: ") + e.what());
    }
}

json to_json(const Generator& g)
{
    json j = to_json(g.path);
    json labels = json::array();
    for (auto l : g.labels) labels.push_back(l ? "h" : "e");
    j["labels"] = labels;
    return j;
}

Generator generator_from_json(const json& j)
{
    Generator g{path_from_json(j), {}};
    const json& ls = field(j, "labels");
    if (!ls.is_array() || ls.size() != g.path.num_edges()) bad("labels must give one entry per edge");
    for (const json& l : ls) {
        if (l == "e") g.labels.push_back(0);
        else if (l == "h") g.labels.push_back(1);
        else bad("labels are \"e\" or \"h\"");
    }
    return g;
}

json to_json(const Chain& x) { return chain_json(x); }
json to_json(const TwistedChain& x) { return chain_json(x); }

Chain chain_from_json(const json& j)
{
    return chain_from<i64>(j, [](const json& c) { return as_int(c, "coefficient"); });
}

TwistedChain twisted_chain_from_json(const json& j) { return chain_from<Laurent>(j, laurent_from); }

json to_json(const ComplexSpec& s)
{
    json j{{"kind", spec_kind_name(s.kind)}};
    switch (s.kind) {
    case SpecKind::Below:
    case SpecKind::BelowComponent:
        if (s.path) j["path"] = to_json(*s.path);
        break;
    case SpecKind::Bar:
        j["n"] = s.n;
        j["diameter"] = s.diameter;
        break;
    case SpecKind::XAxis:
        j["n"] = s.n;
        j["box"] = s.box;
        break;
    case SpecKind::Periodic:
        j["n"] = s.n;
        j["gamma"] = vec(s.gamma);
        j["width"] = s.width;
        j["depth"] = s.depth;
        break;
    }
    if (s.j) j["j"] = *s.j;
    if (s.degrees) j["degrees"] = json::array({s.degrees->first, s.degrees->second});
    return j;
}

ComplexSpec spec_from_json(const json& j)
{
    ComplexSpec s;
    const json& k = field(j, "kind");
    if (!k.is_string()) bad("spec kind must be a string");
    try {
        s.kind = spec_kind_from_name(k.get<std::string>());
    } catch (const std::exception&) {
        bad("unknown spec kind \"" + k.get<std::string>() + "\"");
    }
    auto opt = [&](const char* key, i64& out) {
        if (j.contains(key)) out = int_field(j, key);
    };
    switch (s.kind) {
    case SpecKind::Below:
    case SpecKind::BelowComponent:
        s.path = path_from_json(field(j, "path"));
        break;
    case SpecKind::Bar:
        opt("n", s.n);
        s.diameter = int_field(j, "diameter");
        break;
    case SpecKind::XAxis:
        opt("n", s.n);
        s.box = int_field(j, "box");
        break;
    case SpecKind::Periodic:
        opt("n", s.n);
        if (j.contains("gamma")) s.gamma = as_vec(j["gamma"], "gamma");
        opt("width", s.width);
        opt("depth", s.depth);
        break;
    }
    if (j.contains("j")) s.j = int_field(j, "j");
    if (j.contains("degrees")) {
        Vec d = as_vec(j["degrees"], "degrees");
        if (d.x > d.y) bad("degrees must be [lo, hi] with lo <= hi");
        s.degrees = std::pair<i64, i64>{d.x, d.y};
    }
    if (s.kind == SpecKind::BelowComponent && !s.j) bad("below-component needs \"j\"");
    if ((s.kind == SpecKind::Bar || s.kind == SpecKind::XAxis) && !s.degrees)
        bad(std::string(spec_kind_name(s.kind)) + " needs \"degrees\"");
    if (s.n < 1) bad("n must be positive");
    return s;
}

json to_json(const Integer& v)
{
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

Integer integer_from_json(const json& j)
{
    if (j.is_number_integer()) return Integer(j.get<i64>());
    if (j.is_string()) {
        Integer v;
        if (v.set_str(j.get<std::string>(), 10) != 0) bad("bad integer string");
        return v;
    }
    bad("expected an integer");
}

json to_json(const HomologyGroup& h, const ComplexSpec& spec)
{
    json t = json::array();
    for (const auto& v : h.torsion) t.push_back(to_json(v));
    return {{"degree", h.degree}, {"rank", h.rank}, {"torsion", t}, {"partial", h.partial}, {"spec", to_json(spec)}};
}

HomologyGroup homology_from_json(const json& j)
{
    HomologyGroup h;
    h.degree = int_field(j, "degree");
    h.rank = int_field(j, "rank");
    const json& p = field(j, "partial");
    if (!p.is_boolean()) bad("partial must be a boolean");
    h.partial = p;
    const json& t = field(j, "torsion");
    if (!t.is_array()) bad("torsion must be a list");
    for (const json& v : t) h.torsion.push_back(integer_from_json(v));
    return h;
}

}  // namespace polyech
