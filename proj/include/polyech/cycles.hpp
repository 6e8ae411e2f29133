#pragma once
// Distinguished chains: E, H, the 2-gon wrappings Z_n and the p, e, q family.

#include "polyech/generator.hpp"

namespace polyech {

Chain e_cycle(const AdmissiblePath& path);
Chain h_cycle(const AdmissiblePath& path);

// Closed path wrapping around the 2-gon a <-> a + dir(first) with `count`
// unit edges at first, first + pi, ...; labels and h-order follow the walk.
Chain wrap_chain(Vec a, const ExtendedAngle& first, i64 count, i64 n, const std::vector<std::uint8_t>& labels);

Chain z_cycle(i64 n, Vec a, Vec b);
Chain p_gen(Vec a, const ExtendedAngle& theta, i64 n);
Chain e_gen(Vec a, const ExtendedAngle& theta, i64 n);
Chain q_cycle(Vec a, Vec b, i64 n);

// Concatenation of open generators whose intervals and endpoints meet.
Generator concatenate(const Generator& a, const Generator& b);
Chain concatenate(const Chain& a, const Chain& b);

}  // namespace polyech
