#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "strandalg/algebra.hpp"

namespace strandalg {

// s_i * basis[from] has normal form coefficient * basis[to].
struct SAction {
  std::size_t s;
  std::size_t from;
  std::size_t to;
  Scalar coefficient = 1;
};

// e_to * Lambda * e_from.
struct PeirceBlock {
  VertexId from;
  VertexId to;
  std::vector<Path> basis;
  std::vector<SAction> s_action;
};

enum class LocalShape {
  Truncated,    // {e_v, c, ..., c^{m-1}} with c^m = 0
  PowerSeries,  // powers of c up to the length cap, some s_i acting as c
  General,
};

struct LocalRing {
  VertexId vertex;
  LocalShape shape = LocalShape::General;
  std::optional<Path> cycle;
  std::size_t exponent = 0;                  // m for Truncated
  std::optional<std::size_t> acting;         // s_i acting as c for PowerSeries
  std::string description;
};

struct PeirceReport {
  Caps caps;
  std::vector<std::string> s_names;
  std::vector<PeirceBlock> pairs;  // every ordered pair, by (from, to)
  std::vector<LocalRing> local_rings;
};

PeirceReport peirce_report(const Quiver& q, const IdealPresentation& ideal,
                           Caps caps);

std::string render_text(const Quiver& q, const PeirceReport& report);

}  // namespace strandalg
