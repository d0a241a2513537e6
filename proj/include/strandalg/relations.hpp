#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "strandalg/quiver.hpp"

namespace strandalg {

// A finite set of non-trivial zero-relations, kept sorted and duplicate-free.
class ZSet {
 public:
  ZSet() = default;
  explicit ZSet(std::vector<Path> relations);

  const std::vector<Path>& relations() const noexcept { return relations_; }
  bool empty() const noexcept { return relations_.empty(); }
  std::size_t size() const noexcept { return relations_.size(); }
  // 0 when empty.
  std::size_t min_length() const noexcept { return min_length_; }
  std::size_t max_length() const noexcept { return max_length_; }

  bool contains(const Path& p) const;

  // Some relation occurring as a subpath of p, if any.
  std::optional<Path> first_factor(const Path& p) const;
  bool admits(const Path& p) const { return !first_factor(p).has_value(); }

  // Some relation that is a left subpath of p. Used when extending an
  // admissible path on the left: only new occurrences need checking.
  std::optional<Path> left_factor(const Path& p) const;
  std::optional<Path> right_factor(const Path& p) const;

  friend bool operator==(const ZSet& lhs, const ZSet& rhs) {
    return lhs.relations_ == rhs.relations_;
  }

 private:
  std::vector<Path> relations_;
  std::map<ArrowId, std::vector<std::size_t>> by_right_arrow_;
  std::map<ArrowId, std::vector<std::size_t>> by_left_arrow_;
  std::size_t min_length_ = 0;
  std::size_t max_length_ = 0;
};

struct AdmissibilityResult {
  bool admissible = true;
  std::optional<Path> violating;
};

AdmissibilityResult is_z_admissible(const Path& p, const ZSet& z);

enum class SpecialCondition { SP1, SP2 };

// SP1: `first` and `second` are distinct arrows with first*pivot and
// second*pivot outside Z. SP2: pivot*first and pivot*second outside Z.
struct SpecialWitness {
  SpecialCondition condition;
  ArrowId pivot;
  ArrowId first;
  ArrowId second;

  friend bool operator==(const SpecialWitness&, const SpecialWitness&) = default;
};

struct SpecialPairData {
  bool special = true;
  std::vector<SpecialWitness> witnesses;
};

SpecialPairData check_special_pair(const Quiver& q, const ZSet& z);

struct BiserialResult {
  bool biserial = true;
  std::optional<VertexId> vertex;
  std::size_t in_degree = 0;
  std::size_t out_degree = 0;
};

BiserialResult check_biserial(const Quiver& q);

// Every Z-admissible path of length <= max_length, trivial paths included,
// in Path order.
std::vector<Path> admissible_paths(const Quiver& q, const ZSet& z,
                                   std::size_t max_length);

// Left extensions b*p of an admissible path p that stay admissible.
std::vector<Path> admissible_left_extensions(const Quiver& q, const ZSet& z,
                                             const Path& p);

}  // namespace strandalg
