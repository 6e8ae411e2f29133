#pragma once
// Seeded random families of paths and generators for the property suites.

#include <random>

#include "polyech/generator.hpp"

namespace polyech {

using Rng = std::mt19937_64;

// Hull vertices of 1 to max_pts random points in [0,B]^2.
std::vector<Vec> random_polygon(Rng& rng, i64 B, std::size_t max_pts = 5);
AdmissiblePath random_n_convex(Rng& rng, i64 B, i64 n);
// Random closed path of rotation n: a random element below an n-convex path,
// which may carry kinks and negative area.
AdmissiblePath random_closed(Rng& rng, i64 B, i64 n);
// Open path below a convex chain along part of a random polygon boundary
// (distinct endpoints).
AdmissiblePath random_open_distinct(Rng& rng, i64 B);
// Open path below a whole random polygon boundary (equal endpoints).
AdmissiblePath random_open_closed_up(Rng& rng, i64 B);
// Periodic path below a box path, optionally sheared.
AdmissiblePath random_periodic(Rng& rng, i64 B, i64 n);
// A few random corner roundings.
AdmissiblePath random_descent(Rng& rng, AdmissiblePath p, int max_steps);
// Random generator of CX(n) with corners in [0, M].
Generator random_x_generator(Rng& rng, i64 n, i64 M);
Generator random_labels(Rng& rng, const AdmissiblePath& p);
// Random element of a vector.
template <class T>
const T& pick(Rng& rng, const std::vector<T>& v)
{
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

}  // namespace polyech
