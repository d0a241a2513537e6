#include "strandalg/relations.hpp"

#include <algorithm>

#include "strandalg/errors.hpp"

namespace strandalg {

ZSet::ZSet(std::vector<Path> relations) : relations_(std::move(relations)) {
  std::sort(relations_.begin(), relations_.end());
  relations_.erase(std::unique(relations_.begin(), relations_.end()),
                   relations_.end());
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    const Path& r = relations_[i];
    if (r.is_trivial()) throw InputError("a zero-relation must be non-trivial");
    by_right_arrow_[r.right_arrow()].push_back(i);
    by_left_arrow_[r.left_arrow()].push_back(i);
  }
  if (!relations_.empty()) {
    min_length_ = relations_.front().length();
    max_length_ = relations_.back().length();
  }
}

bool ZSet::contains(const Path& p) const {
  return std::binary_search(relations_.begin(), relations_.end(), p);
}

std::optional<Path> ZSet::first_factor(const Path& p) const {
  const auto& pa = p.arrows();
  for (std::size_t end = 0; end < pa.size(); ++end) {
    auto it = by_right_arrow_.find(pa[end]);
    if (it == by_right_arrow_.end()) continue;
    for (std::size_t idx : it->second) {
      const auto& ra = relations_[idx].arrows();
      if (ra.size() > end + 1) continue;
      const std::size_t start = end + 1 - ra.size();
      if (std::equal(ra.begin(), ra.end(),
                     pa.begin() + static_cast<std::ptrdiff_t>(start))) {
        return relations_[idx];
      }
    }
  }
  return std::nullopt;
}

std::optional<Path> ZSet::left_factor(const Path& p) const {
  if (p.is_trivial()) return std::nullopt;
  auto it = by_left_arrow_.find(p.left_arrow());
  if (it == by_left_arrow_.end()) return std::nullopt;
  for (std::size_t idx : it->second) {
    if (is_left_subpath(relations_[idx], p)) return relations_[idx];
  }
  return std::nullopt;
}

std::optional<Path> ZSet::right_factor(const Path& p) const {
  if (p.is_trivial()) return std::nullopt;
  auto it = by_right_arrow_.find(p.right_arrow());
  if (it == by_right_arrow_.end()) return std::nullopt;
  for (std::size_t idx : it->second) {
    if (is_right_subpath(relations_[idx], p)) return relations_[idx];
  }
  return std::nullopt;
}

AdmissibilityResult is_z_admissible(const Path& p, const ZSet& z) {
  auto factor = z.first_factor(p);
  return {!factor.has_value(), std::move(factor)};
}

SpecialPairData check_special_pair(const Quiver& q, const ZSet& z) {
  SpecialPairData out;
  for (ArrowId b : q.arrows()) {
    const Path bp = q.arrow_path(b);
    std::vector<ArrowId> left;
    for (ArrowId a : q.arrows_out_of(q.head(b))) {
      if (!z.contains(compose(q.arrow_path(a), bp))) left.push_back(a);
    }
    std::sort(left.begin(), left.end());
    for (std::size_t i = 1; i < left.size(); ++i) {
      out.witnesses.push_back({SpecialCondition::SP1, b, left[0], left[i]});
    }
    std::vector<ArrowId> right;
    for (ArrowId c : q.arrows_into(q.tail(b))) {
      if (!z.contains(compose(bp, q.arrow_path(c)))) right.push_back(c);
    }
    std::sort(right.begin(), right.end());
    for (std::size_t i = 1; i < right.size(); ++i) {
      out.witnesses.push_back({SpecialCondition::SP2, b, right[0], right[i]});
    }
  }
  out.special = out.witnesses.empty();
  return out;
}

BiserialResult check_biserial(const Quiver& q) {
  for (VertexId v : q.vertices()) {
    const std::size_t in = q.arrows_into(v).size();
    const std::size_t out = q.arrows_out_of(v).size();
    if (in > 2 || out > 2) return {false, v, in, out};
  }
  return {};
}

std::vector<Path> admissible_left_extensions(const Quiver& q, const ZSet& z,
                                             const Path& p) {
  std::vector<Path> out;
  for (ArrowId b : q.arrows_out_of(p.head())) {
    Path bp = compose(q.arrow_path(b), p);
    if (!z.left_factor(bp)) out.push_back(std::move(bp));
  }
  return out;
}

std::vector<Path> admissible_paths(const Quiver& q, const ZSet& z,
                                   std::size_t max_length) {
  std::vector<Path> out;
  std::vector<Path> layer;
  for (VertexId v : q.vertices()) layer.push_back(Path::trivial(v));
  for (std::size_t len = 0;; ++len) {
    out.insert(out.end(), layer.begin(), layer.end());
    if (len == max_length || layer.empty()) break;
    std::vector<Path> next;
    for (const Path& p : layer) {
      auto ext = admissible_left_extensions(q, z, p);
      std::move(ext.begin(), ext.end(), std::back_inserter(next));
    }
    layer = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace strandalg
