#include "polyech/homology.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "polyech/differential.hpp"

namespace polyech {

std::ostream& operator<<(std::ostream& os, const HomologyGroup& h)
{
    os << "H_" << h.degree << " = Z^" << h.rank;
    for (const auto& t : h.torsion) os << " + Z/" << t;
    if (h.partial) os << " (partial)";
    return os;
}

// ---------------------------------------------------------------- reduction

Reduction::Reduction(const GradedComplex& c) : c_(&c)
{
    using Col = std::unordered_map<std::size_t, Integer>;
    std::map<i64, std::vector<Col>> cols;
    std::map<i64, std::vector<std::unordered_set<std::size_t>>> rows;
    std::map<i64, std::vector<char>> alive;
    for (const auto& [d, b] : c.basis) alive[d].assign(b.size(), 1);
    for (const auto& [d, m] : c.boundary) {
        auto& cl = cols[d];
        auto& rw = rows[d];
        cl.resize(m.cols);
        rw.resize(m.rows);
        for (const auto& [ij, v] : m.entries) {
            cl[ij.second].emplace(ij.first, v);
            rw[ij.first].insert(ij.second);
        }
    }

    auto eliminate = [&](i64 d, std::size_t b, std::size_t a) {
        auto& cl = cols[d];
        auto& rw = rows[d];
        Step st;
        st.deg = d;
        st.b = b;
        st.a = a;
        st.phi = cl[b].at(a) > 0 ? 1 : -1;
        for (const auto& [y, v] : cl[b])
            if (y != a) st.col_b.push_back({y, v});
        for (std::size_t x : rw[a])
            if (x != b) st.row_a.push_back({x, cl[x].at(a)});
        std::sort(st.col_b.begin(), st.col_b.end());
        std::sort(st.row_a.begin(), st.row_a.end());

        for (const auto& [x, vxa] : st.row_a) {
            Integer q = vxa * st.phi;
            auto& cx = cl[x];
            for (const auto& [y, vby] : st.col_b) {
                auto [it, fresh] = cx.try_emplace(y, 0);
                it->second -= q * vby;
                if (it->second == 0) {
                    cx.erase(it);
                    rw[y].erase(x);
                } else if (fresh) {
                    rw[y].insert(x);
                }
            }
            cx.erase(a);
        }
        for (const auto& [y, v] : cl[b]) rw[y].erase(b);
        cl[b].clear();
        rw[a].clear();
        alive[d][b] = 0;
        alive[d - 1][a] = 0;
        if (auto it = cols.find(d + 1); it != cols.end()) {
            auto& up_rows = rows[d + 1][b];
            for (std::size_t z : up_rows) it->second[z].erase(b);
            up_rows.clear();
        }
        if (auto it = cols.find(d - 1); it != cols.end()) {
            auto& down = it->second[a];
            for (const auto& [y, v] : down) rows[d - 1][y].erase(a);
            down.clear();
        }
        steps_.push_back(std::move(st));
    };

    bool progress = true;
    while (progress) {
        progress = false;
        for (auto it = cols.rbegin(); it != cols.rend(); ++it) {
            i64 d = it->first;
            auto& cl = it->second;
            auto& rw = rows[d];
            for (std::size_t b = 0; b < cl.size(); ++b) {
                if (cl[b].empty()) continue;
                std::size_t best = 0, best_size = 0;
                bool found = false;
                for (const auto& [r, v] : cl[b]) {
                    if (abs(v) != 1) continue;
                    std::size_t s = rw[r].size();
                    if (!found || s < best_size || (s == best_size && r < best)) {
                        best = r;
                        best_size = s;
                        found = true;
                    }
                }
                if (found) {
                    eliminate(d, b, best);
                    progress = true;
                }
            }
        }
    }

    for (const auto& [d, al] : alive) {
        auto& k = kept_[d];
        for (std::size_t i = 0; i < al.size(); ++i)
            if (al[i]) k.push_back(i);
    }
    for (auto& [d, cl] : cols) {
        auto& out = cols_[d];
        out.resize(cl.size());
        for (std::size_t j : kept_[d])
            for (const auto& [r, v] : cl[j]) out[j].emplace(r, v);
    }
}

const std::vector<std::size_t>& Reduction::kept(i64 d) const
{
    static const std::vector<std::size_t> none;
    auto it = kept_.find(d);
    return it == kept_.end() ? none : it->second;
}

IntMatrix Reduction::residual_boundary(i64 d) const
{
    const auto& kr = kept(d - 1);
    const auto& kc = kept(d);
    IntMatrix m(kr.size(), kc.size());
    auto it = cols_.find(d);
    if (it == cols_.end()) return m;
    std::unordered_map<std::size_t, std::size_t> pos;
    for (std::size_t i = 0; i < kr.size(); ++i) pos[kr[i]] = i;
    for (std::size_t j = 0; j < kc.size(); ++j)
        for (const auto& [r, v] : it->second[kc[j]]) m(pos.at(r), j) = v;
    return m;
}

Reduction::Split Reduction::split_cycle(IntVector x, i64 d) const
{
    Split s;
    for (std::size_t k = 0; k < steps_.size(); ++k) {
        const Step& st = steps_[k];
        if (st.deg == d) {
            x[st.b] = 0;
        } else if (st.deg == d + 1) {
            if (x[st.a] == 0) continue;
            Integer c = x[st.a] * st.phi;
            x[st.a] = 0;
            for (const auto& [y, v] : st.col_b) x[y] -= c * v;
            s.moves.push_back({k, c});
        }
    }
    s.residual = std::move(x);
    return s;
}

IntVector Reduction::project(IntVector x, i64 d) const { return split_cycle(std::move(x), d).residual; }

IntVector Reduction::include(IntVector y, i64 d) const
{
    for (auto k = steps_.size(); k-- > 0;) {
        const Step& st = steps_[k];
        if (st.deg != d) continue;
        Integer t = 0;
        for (const auto& [x, v] : st.row_a)
            if (y[x] != 0) t += y[x] * v;
        if (t != 0) y[st.b] -= st.phi * t;
    }
    return y;
}

IntVector Reduction::assemble_witness(const Split& s, const IntVector& r, i64 d) const
{
    IntVector acc = r;
    auto mv = s.moves.rbegin();
    for (auto k = steps_.size(); k-- > 0;) {
        const Step& st = steps_[k];
        if (st.deg != d + 1) continue;
        Integer t = 0;
        for (const auto& [x, v] : st.row_a)
            if (acc[x] != 0) t += acc[x] * v;
        if (t != 0) acc[st.b] -= st.phi * t;
        if (mv != s.moves.rend() && mv->first == k) {
            acc[st.b] += mv->second;
            ++mv;
        }
    }
    return acc;
}

// ------------------------------------------------------------------- engine

HomologyEngine::HomologyEngine(const GradedComplex& c) : c_(&c), red_(c) {}

namespace {

IntVector restrict_to(const IntVector& full, const std::vector<std::size_t>& idx)
{
    IntVector v(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) v[i] = full[idx[i]];
    return v;
}

IntVector expand(const IntVector& part, const std::vector<std::size_t>& idx, std::size_t n)
{
    IntVector v(n);
    for (std::size_t i = 0; i < idx.size(); ++i) v[idx[i]] = part[i];
    return v;
}

bool is_zero(const IntVector& v)
{
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

}  // namespace

HomologyGroup HomologyEngine::group(i64 d)
{
    HomologyGroup h;
    h.degree = d;
    h.partial = c_->is_partial(d);
    const Degree& dg = prepare(d);
    for (const auto& o : dg.basis.orders) {
        if (o == 0) ++h.rank;
        else h.torsion.push_back(o);
    }
    return h;
}

HomologyEngine::Degree& HomologyEngine::prepare(i64 d)
{
    Degree& dg = degrees_[d];
    if (dg.ready) return dg;
    const auto& kd = red_.kept(d);
    dg.a = smith_normal_form(red_.residual_boundary(d), SnfRight);
    std::size_t ra = dg.a.rank();
    if (dg.a.V.rows != kd.size()) dg.a.V = dg.a.V_inv = IntMatrix::identity(kd.size());
    IntMatrix inc = red_.residual_boundary(d + 1);
    IntMatrix in_kernel = dg.a.V_inv * inc;
    IntMatrix bk(kd.size() - ra, inc.cols);
    for (std::size_t i = 0; i < in_kernel.rows; ++i)
        for (std::size_t j = 0; j < in_kernel.cols; ++j) {
            if (i < ra) {
                if (in_kernel(i, j) != 0) throw std::logic_error("boundary of a boundary is not zero");
            } else {
                bk(i - ra, j) = in_kernel(i, j);
            }
        }
    dg.b = smith_normal_form(bk, SnfLeft);
    std::size_t rb = dg.b.rank();
    dg.basis.degree = d;
    for (std::size_t i = 0; i < bk.rows; ++i) {
        Integer order = i < rb ? dg.b.divisors[i] : Integer(0);
        if (order == 1) continue;
        dg.basis.orders.push_back(order);
        IntVector kcoord = dg.b.U_inv.column(i);
        IntVector z(kd.size());
        for (std::size_t r = 0; r < kd.size(); ++r)
            for (std::size_t k = 0; k < kcoord.size(); ++k)
                if (kcoord[k] != 0) z[r] += dg.a.V(r, ra + k) * kcoord[k];
        dg.basis.reps.push_back(red_.include(expand(z, kd, c_->size(d)), d));
    }
    dg.ready = true;
    return dg;
}

const HomologyBasis& HomologyEngine::basis(i64 d) { return prepare(d).basis; }

std::optional<IntVector> HomologyEngine::coordinates(const IntVector& x, i64 d)
{
    if (!is_zero(c_->apply_boundary(x, d))) return std::nullopt;
    Degree& dg = prepare(d);
    const auto& kd = red_.kept(d);
    IntVector z = restrict_to(red_.project(x, d), kd);
    IntVector w = dg.a.V_inv * z;
    std::size_t ra = dg.a.rank();
    for (std::size_t i = 0; i < ra; ++i)
        if (w[i] != 0) throw std::logic_error("projected cycle is not a residual cycle");
    IntVector k(w.begin() + ra, w.end());
    IntVector h = dg.b.U * k;
    IntVector out;
    std::size_t rb = dg.b.rank();
    for (std::size_t i = 0; i < h.size(); ++i) {
        Integer order = i < rb ? dg.b.divisors[i] : Integer(0);
        if (order == 1) continue;
        Integer v = h[i];
        if (order > 1) {
            v %= order;
            if (v < 0) v += order;
        }
        out.push_back(v);
    }
    return out;
}

i64 HomologyEngine::homogeneous_degree(const Chain& x) const
{
    std::optional<i64> d;
    for (const auto& [g, v] : x.terms()) {
        auto loc = c_->locate(g);
        if (!loc) throw DomainError("chain term outside the complex basis");
        if (d && *d != loc->first) throw DomainError("chain is not homogeneous");
        d = loc->first;
    }
    if (!d) throw DomainError("empty chain has no degree");
    return *d;
}

bool HomologyEngine::is_cycle(const Chain& x)
{
    if (x.empty()) return true;
    i64 d = homogeneous_degree(x);
    return is_zero(c_->apply_boundary(c_->to_vector(c_->normalize(x), d), d));
}

std::optional<Chain> HomologyEngine::boundary_witness(const Chain& x0)
{
    Chain x = c_->normalize(x0);
    if (x.empty()) return Chain{};
    i64 d = homogeneous_degree(x);
    IntVector v = c_->to_vector(x, d);
    if (!is_zero(c_->apply_boundary(v, d))) return std::nullopt;
    auto split = red_.split_cycle(v, d);
    const auto& kd = red_.kept(d);
    const auto& ku = red_.kept(d + 1);
    auto sol = solve_integer(red_.residual_boundary(d + 1), restrict_to(split.residual, kd));
    if (!sol) return std::nullopt;
    IntVector y = red_.assemble_witness(split, expand(*sol, ku, c_->size(d + 1)), d);
    if (c_->apply_boundary(y, d + 1) != v) throw std::logic_error("boundary witness does not check out");
    return c_->to_chain(y, d + 1);
}

HomologyGroup homology(const GradedComplex& c, i64 d)
{
    HomologyEngine e(c);
    return e.group(d);
}

// ------------------------------------------------------------- induced maps

InducedMap induced_map(const GeneratorMap& f, HomologyEngine& source, HomologyEngine& target, i64 d, i64 shift)
{
    const GradedComplex& S = source.complex();
    const GradedComplex& T = target.complex();
    for (i64 e : {d, d + 1}) {
        auto it = S.basis.find(e);
        if (it == S.basis.end()) continue;
        for (const Generator& g : it->second) {
            Chain lhs = T.normalize(differential(T.normalize(f(g))));
            Chain rhs = T.normalize(apply_linear(differential(g), f));
            if (!(lhs == rhs)) {
                std::ostringstream os;
                os << "not a chain map at " << g;
                throw ChainMapError(os.str());
            }
        }
    }
    const HomologyBasis& sb = source.basis(d);
    const HomologyBasis& tb = target.basis(d + shift);
    InducedMap out;
    out.source_orders = sb.orders;
    out.target_orders = tb.orders;
    out.matrix = IntMatrix(tb.orders.size(), sb.orders.size());
    for (std::size_t j = 0; j < sb.reps.size(); ++j) {
        Chain img = T.normalize(apply_linear(S.to_chain(sb.reps[j], d), f));
        IntVector v = img.empty() ? IntVector(T.size(d + shift)) : T.to_vector(img, d + shift);
        auto coords = target.coordinates(v, d + shift);
        if (!coords) throw ChainMapError("image of a cycle is not a cycle");
        for (std::size_t i = 0; i < coords->size(); ++i) out.matrix(i, j) = (*coords)[i];
    }
    auto sorted = [](std::vector<Integer> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    if (sorted(sb.orders) != sorted(tb.orders)) return out;
    // Same invariants, so bijective iff surjective.
    std::size_t rows = tb.orders.size();
    IntMatrix aug(rows, sb.orders.size() + rows);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < sb.orders.size(); ++j) aug(i, j) = out.matrix(i, j);
        aug(i, sb.orders.size() + i) = tb.orders[i];
    }
    SmithForm f2 = smith_normal_form(aug, SnfNone);
    out.iso = f2.rank() == rows &&
              std::all_of(f2.divisors.begin(), f2.divisors.end(), [](const Integer& x) { return x == 1; });
    return out;
}

StabilizeResult stabilize(const std::function<ComplexSpec(i64)>& family, i64 d, i64 window, i64 first_stage,
                          i64 max_stage, double budget_seconds)
{
    using clock = std::chrono::steady_clock;
    auto start = clock::now();
    StabilizeResult res;
    std::unique_ptr<GradedComplex> prev_c;
    std::unique_ptr<HomologyEngine> prev_e;
    i64 run = 0, run_start = first_stage;
    for (i64 s = first_stage; s <= max_stage; ++s) {
        if (std::chrono::duration<double>(clock::now() - start).count() > budget_seconds) break;
        auto cur_c = std::make_unique<GradedComplex>(build_complex(family(s)));
        auto cur_e = std::make_unique<HomologyEngine>(*cur_c);
        HomologyGroup h = cur_e->group(d);
        res.trend.push_back(h);
        if (prev_e) {
            bool iso = induced_map([](const Generator& g) { return Chain(g); }, *prev_e, *cur_e, d).iso;
            res.iso.push_back(iso);
            if (iso) {
                if (run == 0) run_start = s - 1;
                ++run;
            } else {
                run = 0;
            }
            if (run >= window) {
                res.group = h;
                res.stage = run_start;
                res.stabilized = true;
                return res;
            }
        }
        prev_c = std::move(cur_c);
        prev_e = std::move(cur_e);
    }
    if (!res.trend.empty()) res.group = res.trend.back();
    res.stage = first_stage + (i64)res.trend.size() - 1;
    return res;
}

}  // namespace polyech
