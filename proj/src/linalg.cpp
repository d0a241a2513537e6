#include "strandalg/linalg.hpp"

#include <algorithm>

#include "strandalg/errors.hpp"

namespace strandalg {

namespace {

Scalar normalize(const Scalar& x, std::uint64_t characteristic) {
  if (characteristic == 0) return x;
  const BigInt p(characteristic);
  BigInt num = numerator(x) % p;
  BigInt den = denominator(x) % p;
  if (den == 0) throw PreconditionError("denominator divisible by the characteristic");
  // den^(p-2) is the inverse of den modulo p.
  BigInt inv = boost::multiprecision::powm(den, p - 2, p);
  BigInt r = (num * inv) % p;
  if (r < 0) r += p;
  return Scalar(r);
}

}  // namespace

std::size_t matrix_rank(std::vector<std::vector<Scalar>> rows,
                        std::uint64_t characteristic) {
  std::size_t width = 0;
  for (auto& row : rows) {
    width = std::max(width, row.size());
    for (auto& x : row) x = normalize(x, characteristic);
  }
  for (auto& row : rows) row.resize(width, Scalar(0));
  std::size_t rank = 0;
  for (std::size_t col = 0; col < width && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const Scalar inv = normalize(Scalar(1) / rows[rank][col], characteristic);
    for (auto& x : rows[rank]) x = normalize(x * inv, characteristic);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Scalar factor = rows[r][col];
      for (std::size_t c = col; c < width; ++c) {
        rows[r][c] = normalize(rows[r][c] - factor * rows[rank][c], characteristic);
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace strandalg
