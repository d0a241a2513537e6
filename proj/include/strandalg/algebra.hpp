#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "strandalg/coefficient.hpp"
#include "strandalg/primitives.hpp"
#include "strandalg/quiver.hpp"
#include "strandalg/relations.hpp"

namespace strandalg {

// Precision of the finite model: paths of length >= length are truncated
// away, coefficient monomials of degree > degree are dropped.
struct Caps {
  std::size_t length = 0;
  std::size_t degree = 0;

  friend bool operator==(const Caps&, const Caps&) = default;
};

// L = 2 (|Q1| + longest relation), D = L.
Caps default_caps(const Quiver& q, const ZSet& z);

// Finite R-linear combination of paths, truncated at a length cap.
class AlgebraElement {
 public:
  AlgebraElement(CoefficientModel model, std::size_t length_cap);

  static AlgebraElement from_path(CoefficientModel model, std::size_t length_cap,
                                  const Path& p);
  static AlgebraElement from_term(const Path& p, const Coefficient& c,
                                  std::size_t length_cap);

  const CoefficientModel& model() const noexcept { return model_; }
  std::size_t length_cap() const noexcept { return length_cap_; }
  Caps caps() const noexcept { return {length_cap_, model_.degree_cap()}; }
  const std::map<Path, Coefficient>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::vector<Path> support() const;

  void add_term(const Path& p, const Coefficient& c);

  AlgebraElement operator-() const;
  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  friend AlgebraElement operator+(AlgebraElement lhs, const AlgebraElement& rhs) {
    return lhs += rhs;
  }
  friend AlgebraElement operator-(AlgebraElement lhs, const AlgebraElement& rhs) {
    return lhs -= rhs;
  }
  friend AlgebraElement operator*(const Coefficient& c, const AlgebraElement& x);
  friend bool operator==(const AlgebraElement& lhs, const AlgebraElement& rhs) {
    return lhs.terms_ == rhs.terms_;
  }

  // "0", or terms joined by " + " in Path order, e.g. "a*y*x + 2*p*e(1)".
  std::string to_string(const Quiver& q) const;

 private:
  void check_compatible(const AlgebraElement& other) const;

  CoefficientModel model_;
  std::size_t length_cap_;
  std::map<Path, Coefficient> terms_;
};

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y);
inline AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
  return multiply(x, y);
}

struct VGenerator {
  std::size_t s;  // 0-based generator index, equal to the block index
  VertexId vertex;
  std::vector<Path> sigma;
};

struct NotVGenerator {
  std::size_t s;
  VertexId vertex;
};

// The ideal I = <Z> + sum_i <s_i e_v - sigma_v : v in V[i]>
//                   + sum_i <s_i e_v : v not in V[i]>
// together with what the rewriting engine needs to reduce modulo it.
struct IdealPresentation {
  ZSet z;
  CoefficientModel model;
  std::vector<VGenerator> v_generators;
  std::vector<NotVGenerator> notv_generators;
  // Primitive cycles incident at each vertex that has any.
  std::map<VertexId, std::vector<Path>> cycles_at;
  // v -> i for v in V[i].
  std::map<VertexId, std::size_t> block_of;
  std::size_t vertex_count = 0;
  // True for the presentation of <Z> alone.
  bool z_only = false;

  std::vector<AlgebraElement> generator_elements(std::size_t length_cap) const;
};

// sigma_v: the sum of the primitive cycles at v (zero when there are none).
AlgebraElement sigma(VertexId v, const PrimitiveCycleSet& pcs,
                     const CoefficientModel& model, std::size_t length_cap);

// Throws NotSpecialError if (q, z) is not special and DimensionMismatchError
// if the model does not have one generator per nerve block.
IdealPresentation ideal_generators(const Quiver& q, const ZSet& z,
                                   const PrimitiveCycleSet& pcs,
                                   const NervePartition& partition,
                                   const CoefficientModel& model);

// Presentation of <Z> only; reduction then just discards paths through Z.
IdealPresentation z_ideal(const Quiver& q, const ZSet& z,
                          const PrimitiveCycleSet& pcs,
                          const CoefficientModel& model);

enum class Side { Left, Right };

// Normal form modulo I + A^L + m^{D+1}Q. Left orientation rewrites
// s_i r q to r sigma_{h(q)} q; right orientation to r q sigma_{t(q)}. Both
// give the same result.
AlgebraElement reduce(const AlgebraElement& x, const IdealPresentation& ideal,
                      Side side = Side::Left);
AlgebraElement reduce_right(const AlgebraElement& x,
                            const IdealPresentation& ideal);

// Applies single rewriting steps to randomly chosen terms, choosing the
// orientation of every step at random, until no rule applies.
AlgebraElement reduce_random_order(const AlgebraElement& x,
                                   const IdealPresentation& ideal,
                                   std::mt19937_64& rng);

struct MembershipResult {
  bool member = false;
  Caps caps;
  AlgebraElement normal_form;
};

MembershipResult ideal_membership(const AlgebraElement& x,
                                  const IdealPresentation& ideal);

// Checks (s e_{h(p)} - sigma_{h(p)}) p q, p (s e_v - sigma_v) q and
// p q (s e_{t(q)} - sigma_{t(q)}) agree modulo <Z> and returns their common
// normal form. Throws PreconditionError when p, q are not admissible paths
// meeting at v and InvariantError if the three disagree.
AlgebraElement one_sided_transport(const Coefficient& s, VertexId v,
                                   const Path& p, const Path& q,
                                   const IdealPresentation& z_ideal,
                                   std::size_t length_cap);

}  // namespace strandalg
