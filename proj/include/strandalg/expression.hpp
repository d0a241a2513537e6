#pragma once

#include <cstddef>
#include <string_view>

#include "strandalg/algebra.hpp"

namespace strandalg {

// Parses element expressions such as "s1*e(1) - path(a*y*x)" or
// "2*t^2*b - sigma(4)". Atoms: integers, generator names, arrow names,
// e(v), path(word), sigma(v) and parenthesised expressions; any atom may
// carry ^k. An integer or generator on its own stands for that multiple of
// 1 = sum of all e(v). Throws InputError with a 1-based column.
AlgebraElement parse_element(std::string_view text, const Quiver& q,
                             const IdealPresentation& ideal, std::size_t length_cap);

}  // namespace strandalg
