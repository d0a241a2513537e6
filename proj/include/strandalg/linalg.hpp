#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "strandalg/coefficient.hpp"

namespace strandalg {

// Rank of a matrix over F_p (characteristic p) or Q (characteristic 0).
// Rows may be ragged; missing entries are zero.
std::size_t matrix_rank(std::vector<std::vector<Scalar>> rows,
                        std::uint64_t characteristic);

}  // namespace strandalg
