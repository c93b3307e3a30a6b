#pragma once

#include <cstdint>

#include "colorgraph/errors.hpp"

namespace colorgraph {

// Element of the Klein four-group, encoded in two bits so that the group
// law is bitwise XOR: 1+2+3 = 0 and x+x = 0.
using Klein = std::uint8_t;

constexpr Klein klein_add(Klein a, Klein b) { return static_cast<Klein>(a ^ b); }

constexpr bool is_klein(int v) { return v >= 0 && v <= 3; }

inline Klein to_klein(int v) {
    if (!is_klein(v)) throw InputError("color value out of range 0..3");
    return static_cast<Klein>(v);
}

}  // namespace colorgraph
