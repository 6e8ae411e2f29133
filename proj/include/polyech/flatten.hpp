#pragma once
// Flattening: the chain map C(Lambda0) -> C(Lambda) from an n-convex path on
// the x-axis to an n-convex path with the same number of lattice points.

#include "polyech/generator.hpp"

namespace polyech {

// Values of lambda at cut + i*pi for i = 0..2n.
std::vector<Vec> theta_corner_sequence(const AdmissiblePath& lambda, const GenericAngle& cut);

// Points sorted increasingly in the order seen from `cut`.
std::vector<Vec> theta_sorted(std::vector<Vec> pts, const GenericAngle& cut);

// The n-convex path around [0, k-1] x {0}.
AdmissiblePath x_axis_convex(i64 k, i64 n);

// Maximal open path from p to q in the interval (cut + i*pi, cut + (i+1)*pi),
// as primitive edges with multiplicities, given the lattice points of P.
std::vector<std::pair<Direction, i64>> block_edges(const std::vector<Vec>& sorted_pts, Vec p, Vec q);

Chain flatten(const Generator& a0, const AdmissiblePath& lambda0, const AdmissiblePath& lambda, const GenericAngle& cut);
Chain flatten(const Chain& x, const AdmissiblePath& lambda0, const AdmissiblePath& lambda, const GenericAngle& cut);

}  // namespace polyech
