#pragma once
// Generators on the x-axis in slot form, and the splicing map S: CX(n) -> CX(n+1).
//
// Slot i runs from a_i to a_{i+1}, where a_i is the x-coordinate of the path
// at pi/2 + i*pi.  Even slots point left, odd slots point right.

#include "polyech/generator.hpp"

namespace polyech {

struct SlotForm {
    std::vector<i64> seq;               // a_0 .. a_{2n-1}
    std::vector<std::uint8_t> labels;   // per slot; ignored for empty slots
    // Sign s with generator = s * (slot-ordered generator).
    int sign = 1;
};

// Generator whose h edges are ordered by slot, returned canonically with its sign.
std::pair<Generator, int> x_generator(const std::vector<i64>& seq, const std::vector<std::uint8_t>& slot_labels, i64 n);
SlotForm slot_form(const Generator& g);

Chain splice(const Generator& g);
Chain splice(const Chain& x);

// Cut just after pi/2 + i*pi, i.e. inside the corner with value a_i.
GenericAngle slot_corner_cut(i64 i);

}  // namespace polyech
