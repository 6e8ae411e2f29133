#pragma once
// Admissible paths: open, closed and periodic left-turning lattice paths
// stored as a multiplicity function over angles plus an anchor point.

#include <array>
#include <functional>
#include <optional>
#include <ostream>
#include <set>
#include <vector>

#include "polyech/lattice.hpp"

namespace polyech {

enum class PathType { Open, Closed, Periodic };

struct PathKind {
    PathType type = PathType::Closed;
    GenericAngle lo{};  // open only
    GenericAngle hi{};  // open only
    i64 n = 1;          // closed and periodic
    Vec gamma{};        // periodic only

    static PathKind open(GenericAngle lo, GenericAngle hi);
    static PathKind closed(i64 n);
    static PathKind periodic(i64 n, Vec gamma);

    bool cyclic() const { return type != PathType::Open; }
    Vec period() const { return type == PathType::Periodic ? gamma : Vec{}; }
};

bool operator==(const PathKind& a, const PathKind& b);
bool operator<(const PathKind& a, const PathKind& b);

struct Edge {
    ExtendedAngle angle;
    i64 mult = 1;
    friend bool operator==(const Edge&, const Edge&) = default;
};

// A walk edge: lifted angle (any lap) and multiplicity.
using WalkEdge = std::pair<ExtendedAngle, i64>;

struct Corner {
    AngleKey prev;        // lifted angle of the edge before (or lo)
    AngleKey next;        // lifted angle of the edge after (or hi)
    Vec at;               // value of the path on this corner
    bool is_kink = false;
    int prev_edge = -1;   // -1 at the ends of an open path
    int next_edge = -1;
    int index = 0;

    bool roundable() const { return prev_edge >= 0 && next_edge >= 0 && !is_kink; }
};

class AdmissiblePath {
public:
    PathKind kind;
    std::vector<Edge> edges;  // increasing angle in the fundamental domain
    Vec anchor;               // value at the start of the fundamental domain

    std::size_t num_edges() const { return edges.size(); }
    i64 total_mult() const;
    Vec edge_vector(std::size_t i) const { return edges[i].mult * edges[i].angle.dir; }

    // Lifted angle of edge i inside the fundamental domain.
    AngleKey domain_angle(std::size_t i) const;
    AngleKey domain_start() const;
    AngleKey domain_end() const;

    // Positions of the corners: point before edge i is vertex(i); vertex(m) is the end.
    std::vector<Vec> vertices() const;
    Vec end_point() const;

    // Value of the path on the corner containing a generic cut (any lift).
    Vec value_at(const AngleKey& cut) const;

    // Index of the edge with this angle (laps reduced), or -1.
    int find_edge(const ExtendedAngle& a) const;
    // Index of the edge a lifted angle refers to, or -1.
    int find_edge_lifted(const AngleKey& a) const;

    friend bool operator==(const AdmissiblePath&, const AdmissiblePath&);
    friend bool operator<(const AdmissiblePath&, const AdmissiblePath&);
};

struct PathHash {
    std::size_t operator()(const AdmissiblePath& p) const noexcept;
};

std::ostream& operator<<(std::ostream& os, const AdmissiblePath& p);

// Reduce a lifted angle into the fundamental domain of a closed/periodic kind.
ExtendedAngle reduce_angle(const PathKind& kind, const ExtendedAngle& a);
// Sorting key of an angle inside the fundamental domain.
AngleKey domain_key(const PathKind& kind, const ExtendedAngle& a);

AdmissiblePath make_path(const PathKind& kind, std::vector<Edge> edges, Vec anchor);

// Build a path from a walk that starts at `start` on the corner containing
// `start_cut` and then crosses `walk` (lifted angles, increasing, spanning
// at most one period after start_cut).  Laps are reduced and the anchor is
// recomputed for the fundamental domain.
AdmissiblePath from_walk(const PathKind& kind, Vec start, const AngleKey& start_cut,
                         const std::vector<WalkEdge>& walk);

// The walk of a path starting right after edge `after` (or at the domain
// start when after < 0), covering exactly one period.
struct Walk {
    Vec start;
    AngleKey start_cut;
    std::vector<WalkEdge> edges;
};
Walk walk_of(const AdmissiblePath& p);

std::vector<Corner> corners(const AdmissiblePath& p);
Corner corner_containing(const AdmissiblePath& p, const GenericAngle& cut);
// The lift of a cut lying strictly inside the corner's interval.
AngleKey lift_into(const AdmissiblePath& p, const Corner& c, const GenericAngle& cut);

struct RoundingResult {
    AdmissiblePath path;
    // Lifted angles (normalized into the result's domain) of the edges of the
    // result in [theta1, theta2], in increasing order along the rounded arc.
    std::vector<ExtendedAngle> arc;
    // The same edges lifted as in the corner's own coordinates.
    std::vector<AngleKey> arc_lifted;
    // True for arc entries that are the shortened old edges.
    bool first_is_old = false;
    bool last_is_old = false;
};

RoundingResult round_corner_detail(const AdmissiblePath& p, const Corner& c);
AdmissiblePath round_corner(const AdmissiblePath& p, const Corner& c);

bool same_type(const AdmissiblePath& a, const AdmissiblePath& b);
bool leq(const AdmissiblePath& lower, const AdmissiblePath& upper);

std::vector<AdmissiblePath> enumerate_below(const AdmissiblePath& p);

AdmissiblePath translate(const AdmissiblePath& p, Vec w);
AdmissiblePath canonical_translation(const AdmissiblePath& p);

// 2x2 integer matrix, row major: {a, b, c, d} is [[a,b],[c,d]].
using Mat2 = std::array<i64, 4>;
inline Vec apply(const Mat2& A, Vec v) { return {A[0] * v.x + A[1] * v.y, A[2] * v.x + A[3] * v.y}; }

// Image of an angle under the lift of A whose value at angle 0 lies in lap `lift`.
AngleKey symmetry_angle(const Mat2& A, i64 lift, const AngleKey& a);
AdmissiblePath act_symmetry(const AdmissiblePath& p, const Mat2& A, i64 lift);

// Lattice points of the convex hull of the given points.
std::vector<Vec> polygon_lattice_points(const std::vector<Vec>& vertices);
// Counterclockwise strict hull vertices.
std::vector<Vec> convex_hull(const std::vector<Vec>& pts);

// n-fold pullback of the boundary of conv(vertices).
AdmissiblePath n_convex(const std::vector<Vec>& vertices, i64 n);
// Lattice points of P for an n-convex path.
std::vector<Vec> enclosed_points(const AdmissiblePath& p);

// Periodic path wrapping n times around [0,a-1]x[0,b-1] with period (k,0).
AdmissiblePath box_path(i64 a, i64 b, i64 k, i64 n);

// Closed x-axis path from a corner sequence a_0 >= a_1 <= a_2 >= ... (length 2n or 2n+1).
AdmissiblePath x_axis_path(const std::vector<i64>& corners_seq, i64 n);
bool is_x_axis(const AdmissiblePath& p);
// Corner sequence a_0..a_{2n-1} of a closed x-axis path.
std::vector<i64> x_corner_sequence(const AdmissiblePath& p);

// Open convex path along a counterclockwise chain of vertices.  With equal
// first and last vertex the chain is a full polygon boundary.
AdmissiblePath open_chain(const std::vector<Vec>& chain, std::optional<GenericAngle> lo = std::nullopt);

}  // namespace polyech
