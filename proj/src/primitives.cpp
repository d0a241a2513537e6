#include "strandalg/primitives.hpp"

#include <algorithm>
#include <boost/pending/disjoint_sets.hpp>

#include "strandalg/errors.hpp"

namespace strandalg {

bool PrimitiveCycleSet::contains(const Path& c) const {
  return std::binary_search(cycles.begin(), cycles.end(), c);
}

std::optional<Path> PrimitiveCycleSet::with_left_arrow(ArrowId a) const {
  for (const Path& c : cycles) {
    if (c.left_arrow() == a) return c;
  }
  return std::nullopt;
}

std::optional<Path> PrimitiveCycleSet::with_right_arrow(ArrowId a) const {
  for (const Path& c : cycles) {
    if (c.right_arrow() == a) return c;
  }
  return std::nullopt;
}

bool power_admissible(const Path& cycle, const ZSet& z) {
  if (!cycle.is_cycle()) throw PreconditionError("power_admissible needs a cycle");
  std::size_t m = 1;
  if (!z.empty()) {
    m = (z.max_length() + cycle.length() - 1) / cycle.length() + 1;
  }
  return z.admits(power(cycle, m));
}

namespace {

void extend(const Quiver& q, const ZSet& z, const Path& p,
            std::vector<bool>& used, std::set<Path>& found) {
  if (p.is_cycle() && power_admissible(p, z) && !proper_power_root(p)) {
    found.insert(p);
  }
  for (const Path& bp : admissible_left_extensions(q, z, p)) {
    const auto b = index_of(bp.left_arrow());
    if (used[b]) continue;
    used[b] = true;
    extend(q, z, bp, used, found);
    used[b] = false;
  }
}

}  // namespace

PrimitiveCycleSet enumerate_primitive_cycles(const Quiver& q, const ZSet& z) {
  if (!check_special_pair(q, z).special) {
    throw NotSpecialError(
        "primitive cycle enumeration needs a special pair; run check first");
  }
  std::set<Path> found;
  std::vector<bool> used(q.arrow_count(), false);
  for (ArrowId a : q.arrows()) {
    Path p = q.arrow_path(a);
    if (!z.admits(p)) continue;
    used[index_of(a)] = true;
    extend(q, z, p, used, found);
    used[index_of(a)] = false;
  }

  PrimitiveCycleSet out;
  out.cycles.assign(found.begin(), found.end());
  std::set<Path> seen;
  for (const Path& c : out.cycles) {
    out.by_vertex[c.head()].push_back(c);
    out.max_length = std::max(out.max_length, c.length());
    if (seen.contains(c)) continue;
    auto orbit = rotations(c);
    seen.insert(orbit.begin(), orbit.end());
    out.rotation_classes.push_back(std::move(orbit));
  }
  return out;
}

std::vector<Path> primitive_cycles_at(VertexId v, const PrimitiveCycleSet& pcs) {
  auto it = pcs.by_vertex.find(v);
  if (it == pcs.by_vertex.end()) return {};
  return it->second;
}

std::optional<std::size_t> NervePartition::block(VertexId v) const {
  auto it = block_of.find(v);
  if (it == block_of.end()) return std::nullopt;
  return it->second;
}

NervePartition nerve_partition(const PrimitiveCycleSet& pcs) {
  NervePartition out;
  std::uint32_t bound = 0;
  for (const Path& c : pcs.cycles) {
    for (VertexId v : traversed_vertices(c)) {
      out.primitive_vertices.insert(v);
      bound = std::max(bound, index_of(v) + 1);
    }
  }
  boost::disjoint_sets_with_storage<> sets(bound);
  for (VertexId v : out.primitive_vertices) sets.make_set(index_of(v));
  for (const Path& c : pcs.cycles) {
    const auto vs = traversed_vertices(c);
    for (VertexId v : vs) sets.union_set(index_of(*vs.begin()), index_of(v));
  }
  std::map<std::uint32_t, std::vector<VertexId>> by_root;
  for (VertexId v : out.primitive_vertices) {
    by_root[static_cast<std::uint32_t>(sets.find_set(index_of(v)))].push_back(v);
  }
  for (auto& [root, block] : by_root) out.blocks.push_back(std::move(block));
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (std::size_t i = 0; i < out.blocks.size(); ++i) {
    for (VertexId v : out.blocks[i]) out.block_of[v] = i;
  }
  return out;
}

}  // namespace strandalg
