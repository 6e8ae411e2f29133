#pragma once
// Finite graded truncations of the polygon complexes, with integer boundary
// matrices assembled from the differential.
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "polyech/generator.hpp"
#include "polyech/smith.hpp"

namespace polyech {

enum class SpecKind { Below, BelowComponent, Bar, XAxis, Periodic };

const char* spec_kind_name(SpecKind k);
SpecKind spec_kind_from_name(const std::string& s);

struct ComplexSpec {
    SpecKind kind = SpecKind::Below;
    std::optional<AdmissiblePath> path;  // below, below-component
    std::optional<i64> j;                // required for below-component, optional filter elsewhere
    i64 n = 1;
    i64 diameter = 0;  // bar: paths fit in [0, D]^2 up to translation
    i64 box = 0;       // xaxis: corners in [0, M]
    Vec gamma{1, 0};   // periodic
    i64 width = 1;     // periodic: box path width
    i64 depth = 0;     // periodic: rows added below the reference row
    std::optional<std::pair<i64, i64>> degrees;  // reported window; required for bar and xaxis
};

// The top path of a periodic region and the generator its degrees are measured from.
AdmissiblePath periodic_region_path(const ComplexSpec& spec);
Generator periodic_reference(const ComplexSpec& spec);
// SL2(Z) matrix sending (1,0) to the primitive part of gamma.
Mat2 shear_to(Vec gamma);

struct GradedComplex {
    ComplexSpec spec;
    std::map<i64, std::vector<Generator>> basis;
    // boundary[d] maps degree d to degree d-1 (rows index basis[d-1]).
    std::map<i64, SparseIntMatrix> boundary;
    // Degrees whose homology is exact for this truncation; unset means all.
    std::optional<std::pair<i64, i64>> reliable;
    bool modulo_translation = false;

    i64 degree_of(const Generator& g) const;
    // Representative used as a basis key (canonical translate for bar complexes).
    Generator normalize(const Generator& g) const;
    Chain normalize(const Chain& x) const;
    std::optional<std::pair<i64, std::size_t>> locate(const Generator& g) const;
    std::size_t size(i64 d) const;
    std::size_t total_size() const;
    bool is_partial(i64 d) const;

    // Coordinates of a homogeneous chain; throws if a term is not in the basis.
    IntVector to_vector(const Chain& x, i64 d) const;
    Chain to_chain(const IntVector& v, i64 d) const;
    // Boundary of a coordinate vector in degree d.
    IntVector apply_boundary(const IntVector& v, i64 d) const;

    std::optional<Generator> reference;
    std::unordered_map<Generator, std::pair<i64, std::size_t>, GeneratorHash> lookup;
};

struct NotClosedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

GradedComplex build_complex(const ComplexSpec& spec);

// Lattice-convex point sets with at most max_points points that fit in
// [0, D]^2, one per translation class, normalized to touch both axes.
std::vector<std::vector<Vec>> convex_point_sets(i64 D, std::size_t max_points);

// "rows cols nnz" followed by one "row col value" line per entry.
void write_triplets(std::ostream& os, const SparseIntMatrix& m);

}  // namespace polyech
