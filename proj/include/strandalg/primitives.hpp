#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "strandalg/quiver.hpp"
#include "strandalg/relations.hpp"

namespace strandalg {

struct PrimitiveCycleSet {
  std::vector<Path> cycles;                        // sorted
  std::map<VertexId, std::vector<Path>> by_vertex;  // incidence -> cycles
  std::vector<std::vector<Path>> rotation_classes;
  std::size_t max_length = 0;

  bool contains(const Path& c) const;
  // The unique member with the given left (right) arrow, if any.
  std::optional<Path> with_left_arrow(ArrowId a) const;
  std::optional<Path> with_right_arrow(ArrowId a) const;
};

// True iff no power of c factors through Z. Tests the single power c^M with
// M = ceil(max relation length / |c|) + 1.
bool power_admissible(const Path& cycle, const ZSet& z);

// Throws NotSpecialError unless (q, z) is special.
PrimitiveCycleSet enumerate_primitive_cycles(const Quiver& q, const ZSet& z);

std::vector<Path> primitive_cycles_at(VertexId v, const PrimitiveCycleSet& pcs);

struct NervePartition {
  std::set<VertexId> primitive_vertices;
  std::vector<std::vector<VertexId>> blocks;  // each sorted; by least vertex
  std::map<VertexId, std::size_t> block_of;   // 0-based block index

  std::size_t size() const noexcept { return blocks.size(); }
  std::optional<std::size_t> block(VertexId v) const;
};

NervePartition nerve_partition(const PrimitiveCycleSet& pcs);

}  // namespace strandalg
