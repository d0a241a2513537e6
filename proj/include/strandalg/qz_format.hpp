#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "strandalg/coefficient.hpp"
#include "strandalg/quiver.hpp"
#include "strandalg/relations.hpp"

namespace strandalg {

struct ModelSpec {
  ModelKind kind = ModelKind::Equicharacteristic;
  std::uint64_t characteristic = 0;
  std::vector<std::string> names;
  std::optional<std::size_t> length_cap;
  std::optional<std::size_t> degree_cap;

  friend bool operator==(const ModelSpec&, const ModelSpec&) = default;
};

// Contents of a .qz file:
//
//   quiver <name>
//   vertices v1 v2 ...
//   arrows
//     a: u -> w
//   relations
//     x*y          (y applied first; factors are name, name^k, name^param, e(v))
//   param <name> = <int>
//   model kind=mixed|equi char=<p|0> s=<name,...> L=<int> D=<int>
//
// '#' starts a comment.
struct QzFile {
  std::string name;
  Quiver quiver;
  ZSet z;
  std::map<std::string, long long> params;
  std::optional<ModelSpec> model;
};

// Throws InputError with line and column on any problem.
QzFile parse_qz(std::string_view text);
QzFile load_qz(const std::filesystem::path& file);

// Canonical text; relations are written out with parameters expanded.
std::string serialize_qz(const QzFile& file);

// Same quiver (names and incidences), relations, parameters and model.
bool equivalent(const QzFile& lhs, const QzFile& rhs);

// Parses a '*'-separated word such as "a*y*x", "c^3" or "e(1)". `params`
// resolves symbolic exponents. Columns in errors are offset by `column`.
Path parse_word(const Quiver& q, std::string_view word,
                const std::map<std::string, long long>& params = {},
                std::size_t line = 0, std::size_t column = 1);

}  // namespace strandalg
