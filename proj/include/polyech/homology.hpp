#pragma once
// Integer homology of graded complexes: unit-pivot reduction followed by
// Smith normal form on what is left, with cycle representatives, boundary
// witnesses and induced maps.
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "polyech/complex.hpp"

namespace polyech {

struct HomologyGroup {
    i64 degree = 0;
    i64 rank = 0;
    std::vector<Integer> torsion;  // entries > 1, each divides the next
    bool partial = false;
    bool is_zero() const { return rank == 0 && torsion.empty(); }
    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

std::ostream& operator<<(std::ostream& os, const HomologyGroup& h);

// Cancels pairs of generators joined by a unit boundary coefficient.  The
// residual complex is chain homotopy equivalent to the input; the recorded
// steps let chains move back and forth.
class Reduction {
public:
    explicit Reduction(const GradedComplex& c);

    // Surviving basis indices of degree d, increasing.
    const std::vector<std::size_t>& kept(i64 d) const;
    // Boundary of the residual complex from degree d (rows kept(d-1), cols kept(d)).
    IntMatrix residual_boundary(i64 d) const;

    // Full-basis vectors: push a chain onto the residual basis, or lift back.
    IntVector project(IntVector x, i64 d) const;
    IntVector include(IntVector y, i64 d) const;
    // For a cycle x of degree d: y of degree d+1 and the projection of x,
    // with x = include(project(x)) + boundary(y) once the residual part of y is added.
    struct Split {
        IntVector residual;  // project(x)
        std::vector<std::pair<std::size_t, Integer>> moves;  // step index -> coefficient of its b
    };
    Split split_cycle(IntVector x, i64 d) const;
    // Assemble y = sum over steps of moves, then lifted residual part r.
    IntVector assemble_witness(const Split& s, const IntVector& r, i64 d) const;

    std::size_t steps() const { return steps_.size(); }

private:
    struct Step {
        i64 deg;  // b lives in deg, a in deg-1
        std::size_t b, a;
        int phi;
        std::vector<std::pair<std::size_t, Integer>> col_b;  // other rows of column b
        std::vector<std::pair<std::size_t, Integer>> row_a;  // other columns of row a
    };
    const GradedComplex* c_;
    std::vector<Step> steps_;
    std::map<i64, std::vector<std::size_t>> kept_;
    std::map<i64, std::vector<std::map<std::size_t, Integer>>> cols_;  // residual, by degree
};

// Homology classes of one degree in Smith coordinates.
struct HomologyBasis {
    i64 degree = 0;
    std::vector<Integer> orders;      // 0 for free summands, > 1 for torsion
    std::vector<IntVector> reps;      // full-basis cycles
};

class HomologyEngine {
public:
    explicit HomologyEngine(const GradedComplex& c);

    const GradedComplex& complex() const { return *c_; }
    HomologyGroup group(i64 d);
    const HomologyBasis& basis(i64 d);
    // Class of a full-basis cycle in the coordinates of basis(d); none if not a cycle.
    std::optional<IntVector> coordinates(const IntVector& x, i64 d);

    bool is_cycle(const Chain& x);
    // y with boundary(y) = x, or none when x is not a boundary.
    std::optional<Chain> boundary_witness(const Chain& x);

    const Reduction& reduction() const { return red_; }

private:
    struct Degree {
        bool ready = false;
        SmithForm a;  // residual boundary out of d, right transforms
        SmithForm b;  // incoming boundaries in kernel coordinates, left transforms
        HomologyBasis basis;
    };
    Degree& prepare(i64 d);
    i64 homogeneous_degree(const Chain& x) const;

    const GradedComplex* c_;
    Reduction red_;
    std::map<i64, Degree> degrees_;
};

HomologyGroup homology(const GradedComplex& c, i64 d);

struct ChainMapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using GeneratorMap = std::function<Chain(const Generator&)>;

struct InducedMap {
    IntMatrix matrix;  // target classes x source classes
    std::vector<Integer> source_orders, target_orders;
    bool iso = false;
};

// H_d(source) -> H_{d+shift}(target).  Throws ChainMapError if f fails to
// commute with the boundary on the relevant source generators.
InducedMap induced_map(const GeneratorMap& f, HomologyEngine& source, HomologyEngine& target, i64 d, i64 shift = 0);

struct StabilizeResult {
    HomologyGroup group;
    i64 stage = -1;
    bool stabilized = false;
    std::vector<HomologyGroup> trend;  // one per completed stage
    std::vector<bool> iso;             // inclusion into the next stage
};

// Grow the truncation stage by stage until the inclusion-induced maps in
// degree d are isomorphisms for `window` consecutive stages.
StabilizeResult stabilize(const std::function<ComplexSpec(i64)>& family, i64 d, i64 window, i64 first_stage,
                          i64 max_stage, double budget_seconds);

}  // namespace polyech
