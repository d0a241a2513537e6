#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace strandalg {

enum class VertexId : std::uint32_t {};
enum class ArrowId : std::uint32_t {};

constexpr std::uint32_t index_of(VertexId v) noexcept {
  return static_cast<std::uint32_t>(v);
}
constexpr std::uint32_t index_of(ArrowId a) noexcept {
  return static_cast<std::uint32_t>(a);
}

// A path in a quiver. Arrows are stored in written order: for the path
// a_n ... a_1 (a_1 applied first) arrows()[0] is a_n. boundary()[i] is the
// vertex sitting to the right of arrows()[i-1] and to the left of
// arrows()[i], so boundary().front() is the head and boundary().back() the
// tail. A trivial path e_v has no arrows and boundary {v}.
class Path {
 public:
  static Path trivial(VertexId v);

  // No consistency check against a quiver; use Quiver::path for that.
  static Path unchecked(std::vector<ArrowId> arrows,
                        std::vector<VertexId> boundary);

  bool is_trivial() const noexcept { return arrows_.empty(); }
  std::size_t length() const noexcept { return arrows_.size(); }
  VertexId head() const noexcept { return boundary_.front(); }
  VertexId tail() const noexcept { return boundary_.back(); }
  bool is_cycle() const noexcept { return !is_trivial() && head() == tail(); }

  // Last applied arrow (leftmost when written).
  ArrowId left_arrow() const;
  // First applied arrow (rightmost when written).
  ArrowId right_arrow() const;

  const std::vector<ArrowId>& arrows() const noexcept { return arrows_; }
  const std::vector<VertexId>& boundary() const noexcept { return boundary_; }

  // The subpath made of arrows()[offset, offset + count).
  Path slice(std::size_t offset, std::size_t count) const;

  friend bool operator==(const Path&, const Path&) = default;
  // Shorter paths first, then lexicographic on arrow ids, then on vertices.
  friend std::strong_ordering operator<=>(const Path& lhs, const Path& rhs);

 private:
  Path() = default;

  std::vector<ArrowId> arrows_;
  std::vector<VertexId> boundary_;
};

struct ArrowInfo {
  std::string name;
  VertexId tail;
  VertexId head;
};

// Finite quiver with interned vertex and arrow names.
class Quiver {
 public:
  VertexId add_vertex(std::string name);
  ArrowId add_arrow(std::string name, VertexId tail, VertexId head);

  std::size_t vertex_count() const noexcept { return vertex_names_.size(); }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }

  std::vector<VertexId> vertices() const;
  std::vector<ArrowId> arrows() const;

  const std::string& name(VertexId v) const;
  const std::string& name(ArrowId a) const;
  VertexId head(ArrowId a) const;
  VertexId tail(ArrowId a) const;

  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<ArrowId> find_arrow(std::string_view name) const;

  std::span<const ArrowId> arrows_into(VertexId v) const;
  std::span<const ArrowId> arrows_out_of(VertexId v) const;

  Path arrow_path(ArrowId a) const;
  // Arrows in written order; throws CompositionError if not consecutive.
  Path path(std::span<const ArrowId> written) const;
  // Same, from arrow names; throws InputError on unknown names.
  Path path(std::span<const std::string> written) const;

  // "a*y*x" for non-trivial paths, "e(v)" for trivial ones.
  std::string format(const Path& p) const;

 private:
  std::vector<std::string> vertex_names_;
  std::vector<ArrowInfo> arrows_;
  std::vector<std::vector<ArrowId>> in_;
  std::vector<std::vector<ArrowId>> out_;
  std::unordered_map<std::string, VertexId> vertex_lookup_;
  std::unordered_map<std::string, ArrowId> arrow_lookup_;
};

// pq, with q applied first. Requires t(p) = h(q).
Path compose(const Path& p, const Path& q);

// c^k for k >= 1; k == 0 gives the trivial path at the incidence of c.
Path power(const Path& cycle, std::size_t k);

// Every factorisation p = q z r, reported as the length of q.
std::vector<std::size_t> subpath_occurrences(const Path& z, const Path& p);

bool is_subpath(const Path& z, const Path& p);
bool is_left_subpath(const Path& z, const Path& p);
bool is_right_subpath(const Path& z, const Path& p);

// All rotations of a cycle (the cycle itself included), sorted.
std::vector<Path> rotations(const Path& cycle);

// V(p) for non-trivial p.
std::set<VertexId> traversed_vertices(const Path& p);

// (d, k) with c = d^k and k >= 2, d as short as possible; nullopt when c is
// not a proper power.
std::optional<std::pair<Path, std::size_t>> proper_power_root(
    const Path& cycle);

}  // namespace strandalg
