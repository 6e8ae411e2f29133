#pragma once
// The corner-rounding differential and the maps U, K, delta' built from it.

#include "polyech/generator.hpp"

namespace polyech {

struct DifferentialOptions {
    // In the two-h case, take the consumed edge to be the one before the corner.
    bool two_h_use_preceding = false;
};

Chain differential(const Generator& a, const DifferentialOptions& opt = {});
Chain differential(const Chain& x);

// Terms of the differential coming from one corner.
Chain differential_at(const Generator& a, const Corner& c, const DifferentialOptions& opt = {});

Chain u_map(const Generator& a, const GenericAngle& cut);
Chain u_map(const Chain& x, const GenericAngle& cut);

Chain k_homotopy(const Generator& a, const GenericAngle& cut1, const GenericAngle& cut2);
Chain k_homotopy(const Chain& x, const GenericAngle& cut1, const GenericAngle& cut2);
// As above with the second cut given as an explicit lift (used for full turns).
Chain k_homotopy_lifted(const Generator& a, const AngleKey& cut1, const AngleKey& cut2);

Chain delta_prime(const Generator& a);
Chain delta_prime(const Chain& x);

TwistedChain delta_twisted(const Generator& a);
TwistedChain delta_twisted(const TwistedChain& x);

}  // namespace polyech
