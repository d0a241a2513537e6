#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "strandalg/algebra.hpp"

namespace strandalg {

enum class Verdict { Pass, Fail, NotApplicable };

// Structural verdicts follow from exact finite computations; precision
// verdicts come from reductions at the caps in use.
enum class EvidenceKind { Structural, Precision };

struct ConditionResult {
  Verdict verdict = Verdict::NotApplicable;
  EvidenceKind kind = EvidenceKind::Structural;
  // Counterexample on failure, structural reason on pass or not-applicable.
  std::string witness;
  std::map<std::string, std::size_t> constants;

  bool passed() const noexcept { return verdict == Verdict::Pass; }
};

std::string to_string(Verdict v);
std::string to_string(EvidenceKind k);

struct BoundedBelowConstants {
  // Least h > 0 such that admissible paths of length >= h with tail v are
  // right subpaths of powers of primitive cycles at v, and those with head v
  // are left subpaths of such powers.
  std::size_t h_comb = 1;
  // Enumeration bound g + sum d_a (both sides) that the search covered.
  std::size_t search_bound = 0;
  // max(h_comb, 2 * longest primitive cycle): every admissible p of length
  // >= this satisfies p - s^t q in I for a shorter admissible q.
  std::size_t h = 1;
  // An admissible path of length h_comb - 1 outside the periodic regime.
  std::optional<Path> extremal;
};

// Throws NotSpecialError on non-special input.
BoundedBelowConstants bounded_below_constant(const Quiver& q, const ZSet& z,
                                             const PrimitiveCycleSet& pcs);

ConditionResult check_bounded_above(const Quiver& q, const ZSet& z,
                                    const IdealPresentation& ideal, Caps caps);

// Computes the constants and certifies p - s_i^t q in I by reduction for
// every admissible p with h <= |p| < L.
ConditionResult check_bounded_below(const Quiver& q, const ZSet& z,
                                    const PrimitiveCycleSet& pcs,
                                    const IdealPresentation& ideal, Caps caps);

struct ArrowDirectOptions {
  std::uint64_t seed = 1;
  std::size_t trials = 12;
};

// Conditions (5) and (6). Not applicable when (q, z) is not special.
ConditionResult check_arrow_direct(const Quiver& q, const ZSet& z,
                                   const CoefficientModel& model, Caps caps,
                                   ArrowDirectOptions options = {});

struct VerificationReport {
  ConditionResult biserial;
  ConditionResult special;
  ConditionResult bounded_above;
  ConditionResult bounded_below;
  ConditionResult arrow_direct;
  ConditionResult nonvanishing;
  Caps caps_used;
  // Every admissible path of length <= this was found to have a nonzero
  // normal form; nullopt when the sweep did not run.
  std::optional<std::size_t> nonvanishing_checked_up_to;

  bool all_passed() const noexcept;
};

// Throws DimensionMismatchError when the model does not match the nerve.
VerificationReport verify_string_algebra(const Quiver& q, const ZSet& z,
                                         const CoefficientModel& model, Caps caps);

struct TruncationDimensions {
  bool applicable = false;
  std::size_t lhs = 0;
  std::size_t rhs = 0;

  bool equal() const noexcept { return applicable && lhs == rhs; }
};

// Compares dim_k kQ/(<Z> + B^d) with the k-dimension of the normal-form space
// of RQ/(I + A^d) at caps L = D = d. Not applicable for mixed models.
TruncationDimensions truncation_dimension_check(const Quiver& q, const ZSet& z,
                                                const CoefficientModel& model,
                                                std::size_t d);

}  // namespace strandalg
