#pragma once
// Labeled generators, integer and Laurent-coefficient chains, and the grading.

#include <cstdint>
#include <map>
#include <ostream>
#include <utility>
#include <vector>

#include "polyech/path.hpp"

namespace polyech {

struct Generator {
    AdmissiblePath path;
    std::vector<std::uint8_t> labels;  // 1 = 'h', per edge in path order

    int num_h() const;
    // Edge indices labeled 'h', in canonical order.
    std::vector<int> h_edges() const;

    friend bool operator==(const Generator& a, const Generator& b)
    {
        return a.labels == b.labels && a.path == b.path;
    }
    friend bool operator<(const Generator& a, const Generator& b)
    {
        if (!(a.path == b.path)) return a.path < b.path;
        return a.labels < b.labels;
    }
};

struct GeneratorHash {
    std::size_t operator()(const Generator& g) const noexcept;
};

std::ostream& operator<<(std::ostream& os, const Generator& g);

// Parity of the permutation that sorts a sequence of distinct keys.
int permutation_sign(const std::vector<int>& keys);

// Generator with the given h-edge ordering, plus the sign relating it to the
// canonical ordering.
std::pair<Generator, int> make_generator(const AdmissiblePath& path, const std::vector<std::uint8_t>& labels,
                                         const std::vector<int>& ordering);

Generator all_e(const AdmissiblePath& path);
// Every e/h labeling of the path.
std::vector<Generator> all_labelings(const AdmissiblePath& path);

// Twice the signed area enclosed (open paths are closed up by the chord).
i64 twice_area(const AdmissiblePath& path);
i64 index(const Generator& g);
i64 relative_index(const Generator& a, const Generator& b);
// j-grading: index minus the number of 'h' edges.
inline i64 j_grading(const Generator& g) { return index(g) - g.num_h(); }

// Integer Laurent polynomial in one variable t.
struct Laurent {
    std::map<i64, i64> c;  // exponent -> coefficient, no zeros

    Laurent() = default;
    Laurent(i64 v) { if (v) c[0] = v; }
    static Laurent monomial(i64 coef, i64 exp);

    bool is_zero() const { return c.empty(); }
    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    friend bool operator==(const Laurent&, const Laurent&) = default;
};

std::ostream& operator<<(std::ostream& os, const Laurent& l);

template <class Coef>
class ChainT {
public:
    using Map = std::map<Generator, Coef>;

    ChainT() = default;
    ChainT(const Generator& g, Coef c = Coef(1)) { add(g, c); }

    void add(const Generator& g, const Coef& c)
    {
        if (is_zero_coef(c)) return;
        auto it = terms_.find(g);
        if (it == terms_.end()) {
            terms_.emplace(g, c);
            return;
        }
        it->second += c;
        if (is_zero_coef(it->second)) terms_.erase(it);
    }

    void add(const ChainT& o, const Coef& scale)
    {
        for (const auto& [g, c] : o.terms_) add(g, c * scale);
    }

    Coef coef(const Generator& g) const
    {
        auto it = terms_.find(g);
        return it == terms_.end() ? Coef(0) : it->second;
    }

    const Map& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    ChainT& operator+=(const ChainT& o) { add(o, Coef(1)); return *this; }
    ChainT& operator-=(const ChainT& o) { add(o, Coef(-1)); return *this; }
    friend ChainT operator+(ChainT a, const ChainT& b) { return a += b; }
    friend ChainT operator-(ChainT a, const ChainT& b) { return a -= b; }
    friend ChainT operator*(const Coef& s, const ChainT& a)
    {
        ChainT r;
        r.add(a, s);
        return r;
    }
    friend bool operator==(const ChainT& a, const ChainT& b) { return a.terms_ == b.terms_; }

private:
    static bool is_zero_coef(const Coef& c)
    {
        if constexpr (std::is_same_v<Coef, Laurent>) return c.is_zero();
        else return c == 0;
    }
    Map terms_;
};

using Chain = ChainT<i64>;
using TwistedChain = ChainT<Laurent>;

std::ostream& operator<<(std::ostream& os, const Chain& c);

// Extend a generator-level map linearly.
template <class F>
Chain apply_linear(const Chain& x, F&& f)
{
    Chain out;
    for (const auto& [g, c] : x.terms()) out.add(f(g), c);
    return out;
}

TwistedChain to_twisted(const Chain& x);

Chain translate(const Chain& x, Vec w);
// Image under a symmetry; labels follow their edges and the h-ordering is
// carried over, then canonicalized.
Chain act_symmetry(const Generator& g, const Mat2& A, i64 lift);
Chain act_symmetry(const Chain& x, const Mat2& A, i64 lift);

}  // namespace polyech
