#include "strandalg/quiver.hpp"

#include <algorithm>

#include "strandalg/errors.hpp"

namespace strandalg {

Path Path::trivial(VertexId v) {
  Path p;
  p.boundary_.push_back(v);
  return p;
}

Path Path::unchecked(std::vector<ArrowId> arrows,
                     std::vector<VertexId> boundary) {
  if (boundary.size() != arrows.size() + 1) {
    throw PreconditionError("path boundary must have one more entry than arrows");
  }
  Path p;
  p.arrows_ = std::move(arrows);
  p.boundary_ = std::move(boundary);
  return p;
}

ArrowId Path::left_arrow() const {
  if (is_trivial()) throw PreconditionError("trivial path has no left arrow");
  return arrows_.front();
}

ArrowId Path::right_arrow() const {
  if (is_trivial()) throw PreconditionError("trivial path has no right arrow");
  return arrows_.back();
}

Path Path::slice(std::size_t offset, std::size_t count) const {
  if (offset + count > arrows_.size()) {
    throw PreconditionError("slice out of range");
  }
  Path p;
  p.arrows_.assign(arrows_.begin() + static_cast<std::ptrdiff_t>(offset),
                   arrows_.begin() + static_cast<std::ptrdiff_t>(offset + count));
  p.boundary_.assign(
      boundary_.begin() + static_cast<std::ptrdiff_t>(offset),
      boundary_.begin() + static_cast<std::ptrdiff_t>(offset + count + 1));
  return p;
}

std::strong_ordering operator<=>(const Path& lhs, const Path& rhs) {
  if (auto c = lhs.arrows_.size() <=> rhs.arrows_.size(); c != 0) return c;
  if (auto c = lhs.arrows_ <=> rhs.arrows_; c != 0) return c;
  return lhs.boundary_ <=> rhs.boundary_;
}

VertexId Quiver::add_vertex(std::string name) {
  if (name.empty()) throw InputError("empty vertex name");
  if (vertex_lookup_.contains(name)) {
    throw InputError("duplicate vertex '" + name + "'");
  }
  const auto id = static_cast<VertexId>(vertex_names_.size());
  vertex_lookup_.emplace(name, id);
  vertex_names_.push_back(std::move(name));
  in_.emplace_back();
  out_.emplace_back();
  return id;
}

ArrowId Quiver::add_arrow(std::string name, VertexId tail, VertexId head) {
  if (name.empty()) throw InputError("empty arrow name");
  if (arrow_lookup_.contains(name)) {
    throw InputError("duplicate arrow '" + name + "'");
  }
  if (index_of(tail) >= vertex_count() || index_of(head) >= vertex_count()) {
    throw InputError("arrow '" + name + "' uses an undeclared vertex");
  }
  const auto id = static_cast<ArrowId>(arrows_.size());
  arrow_lookup_.emplace(name, id);
  arrows_.push_back({std::move(name), tail, head});
  out_[index_of(tail)].push_back(id);
  in_[index_of(head)].push_back(id);
  return id;
}

std::vector<VertexId> Quiver::vertices() const {
  std::vector<VertexId> out;
  out.reserve(vertex_count());
  for (std::uint32_t i = 0; i < vertex_count(); ++i) {
    out.push_back(static_cast<VertexId>(i));
  }
  return out;
}

std::vector<ArrowId> Quiver::arrows() const {
  std::vector<ArrowId> out;
  out.reserve(arrow_count());
  for (std::uint32_t i = 0; i < arrow_count(); ++i) {
    out.push_back(static_cast<ArrowId>(i));
  }
  return out;
}

const std::string& Quiver::name(VertexId v) const {
  return vertex_names_.at(index_of(v));
}

const std::string& Quiver::name(ArrowId a) const {
  return arrows_.at(index_of(a)).name;
}

VertexId Quiver::head(ArrowId a) const { return arrows_.at(index_of(a)).head; }

VertexId Quiver::tail(ArrowId a) const { return arrows_.at(index_of(a)).tail; }

std::optional<VertexId> Quiver::find_vertex(std::string_view name) const {
  auto it = vertex_lookup_.find(std::string(name));
  if (it == vertex_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<ArrowId> Quiver::find_arrow(std::string_view name) const {
  auto it = arrow_lookup_.find(std::string(name));
  if (it == arrow_lookup_.end()) return std::nullopt;
  return it->second;
}

std::span<const ArrowId> Quiver::arrows_into(VertexId v) const {
  return in_.at(index_of(v));
}

std::span<const ArrowId> Quiver::arrows_out_of(VertexId v) const {
  return out_.at(index_of(v));
}

Path Quiver::arrow_path(ArrowId a) const {
  const auto& info = arrows_.at(index_of(a));
  return Path::unchecked({a}, {info.head, info.tail});
}

Path Quiver::path(std::span<const ArrowId> written) const {
  if (written.empty()) throw InputError("empty arrow word");
  std::vector<VertexId> boundary;
  boundary.reserve(written.size() + 1);
  boundary.push_back(head(written.front()));
  for (std::size_t i = 0; i < written.size(); ++i) {
    if (i + 1 < written.size() && tail(written[i]) != head(written[i + 1])) {
      throw CompositionError("arrows '" + name(written[i]) + "' and '" +
                             name(written[i + 1]) + "' are not consecutive");
    }
    boundary.push_back(tail(written[i]));
  }
  return Path::unchecked({written.begin(), written.end()}, std::move(boundary));
}

Path Quiver::path(std::span<const std::string> written) const {
  std::vector<ArrowId> ids;
  ids.reserve(written.size());
  for (const auto& n : written) {
    auto a = find_arrow(n);
    if (!a) throw InputError("unknown arrow '" + n + "'");
    ids.push_back(*a);
  }
  return path(ids);
}

std::string Quiver::format(const Path& p) const {
  if (p.is_trivial()) return "e(" + name(p.head()) + ")";
  std::string out;
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (i != 0) out += '*';
    out += name(p.arrows()[i]);
  }
  return out;
}

Path compose(const Path& p, const Path& q) {
  if (p.tail() != q.head()) {
    throw CompositionError("paths are not composable");
  }
  if (q.is_trivial()) return p;
  if (p.is_trivial()) return q;
  std::vector<ArrowId> arrows = p.arrows();
  arrows.insert(arrows.end(), q.arrows().begin(), q.arrows().end());
  std::vector<VertexId> boundary = p.boundary();
  boundary.insert(boundary.end(), q.boundary().begin() + 1, q.boundary().end());
  return Path::unchecked(std::move(arrows), std::move(boundary));
}

Path power(const Path& cycle, std::size_t k) {
  if (!cycle.is_cycle()) throw PreconditionError("power of a non-cycle");
  if (k == 0) return Path::trivial(cycle.head());
  Path out = cycle;
  for (std::size_t i = 1; i < k; ++i) out = compose(out, cycle);
  return out;
}

std::vector<std::size_t> subpath_occurrences(const Path& z, const Path& p) {
  std::vector<std::size_t> out;
  if (z.length() > p.length()) return out;
  if (z.is_trivial()) {
    for (std::size_t i = 0; i < p.boundary().size(); ++i) {
      if (p.boundary()[i] == z.head()) out.push_back(i);
    }
    return out;
  }
  const auto& pa = p.arrows();
  const auto& za = z.arrows();
  for (std::size_t i = 0; i + za.size() <= pa.size(); ++i) {
    if (std::equal(za.begin(), za.end(), pa.begin() + static_cast<std::ptrdiff_t>(i))) {
      out.push_back(i);
    }
  }
  return out;
}

bool is_subpath(const Path& z, const Path& p) {
  return !subpath_occurrences(z, p).empty();
}

bool is_left_subpath(const Path& z, const Path& p) {
  if (z.length() > p.length() || z.head() != p.head()) return false;
  return std::equal(z.arrows().begin(), z.arrows().end(), p.arrows().begin());
}

bool is_right_subpath(const Path& z, const Path& p) {
  if (z.length() > p.length() || z.tail() != p.tail()) return false;
  return std::equal(z.arrows().rbegin(), z.arrows().rend(), p.arrows().rbegin());
}

std::vector<Path> rotations(const Path& cycle) {
  if (!cycle.is_cycle()) throw PreconditionError("rotations of a non-cycle");
  const std::size_t n = cycle.length();
  std::vector<Path> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<ArrowId> arrows(n);
    std::vector<VertexId> boundary(n + 1);
    for (std::size_t j = 0; j < n; ++j) {
      arrows[j] = cycle.arrows()[(j + k) % n];
      boundary[j] = cycle.boundary()[(j + k) % n];
    }
    boundary[n] = boundary[0];
    out.push_back(Path::unchecked(std::move(arrows), std::move(boundary)));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::set<VertexId> traversed_vertices(const Path& p) {
  if (p.is_trivial()) {
    throw PreconditionError("traversed vertices are defined for non-trivial paths only");
  }
  return {p.boundary().begin(), p.boundary().end()};
}

std::optional<std::pair<Path, std::size_t>> proper_power_root(
    const Path& cycle) {
  if (!cycle.is_cycle()) throw PreconditionError("root of a non-cycle");
  const std::size_t n = cycle.length();
  const auto& a = cycle.arrows();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = a[i] == a[i - d];
    if (periodic) return std::pair{cycle.slice(0, d), n / d};
  }
  return std::nullopt;
}

}  // namespace strandalg
