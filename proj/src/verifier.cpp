#include "strandalg/verifier.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "strandalg/errors.hpp"
#include "strandalg/linalg.hpp"
#include "strandalg/sampling.hpp"

namespace strandalg {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::NotApplicable: return "not applicable";
  }
  return "unknown";
}

std::string to_string(EvidenceKind k) {
  return k == EvidenceKind::Structural ? "structural" : "precision";
}

namespace {

ConditionResult result(Verdict v, EvidenceKind k, std::string witness) {
  ConditionResult r;
  r.verdict = v;
  r.kind = k;
  r.witness = std::move(witness);
  return r;
}

std::vector<Path> admissible_right_extensions(const Quiver& q, const ZSet& z,
                                              const Path& p) {
  std::vector<Path> out;
  for (ArrowId a : q.arrows_into(p.tail())) {
    Path ext = compose(p, q.arrow_path(a));
    if (!z.right_factor(ext)) out.push_back(std::move(ext));
  }
  return out;
}

// d_a from the a-priori bound: follow the unique admissible continuation of
// the arrow a; if it closes up into a cycle c_a with right (left) arrow a,
// return the length of the first power of c_a that factors through Z.
std::size_t continuation_bound(const Quiver& q, const ZSet& z, ArrowId a,
                               Side side) {
  Path p = q.arrow_path(a);
  if (!z.admits(p)) return 0;
  for (;;) {
    auto ext = side == Side::Left ? admissible_left_extensions(q, z, p)
                                  : admissible_right_extensions(q, z, p);
    if (ext.empty()) return 0;
    if (ext.size() > 1) throw InvariantError("continuation is not unique");
    const ArrowId added =
        side == Side::Left ? ext.front().left_arrow() : ext.front().right_arrow();
    if (added == a) {
      const std::size_t limit =
          z.empty() ? 1 : z.max_length() / p.length() + 2;
      for (std::size_t k = 1; k <= limit; ++k) {
        if (!z.admits(power(p, k))) return k * p.length();
      }
      return 0;
    }
    if (p.length() > q.arrow_count()) {
      throw InvariantError("continuation revisits an arrow");
    }
    p = ext.front();
  }
}

// Whether p with tail (Left: head) v is a right (left) subpath of a power of
// a primitive cycle at v.
bool periodic_on(const Path& p, const PrimitiveCycleSet& pcs, Side side) {
  if (p.is_trivial()) return false;
  auto c = side == Side::Right ? pcs.with_right_arrow(p.right_arrow())
                               : pcs.with_left_arrow(p.left_arrow());
  if (!c) return false;
  const Path big = power(*c, p.length() / c->length() + 2);
  return side == Side::Right ? is_right_subpath(p, big) : is_left_subpath(p, big);
}

std::string special_witness(const Quiver& q, const SpecialWitness& w) {
  std::ostringstream out;
  if (w.condition == SpecialCondition::SP1) {
    out << "SP1 at arrow " << q.name(w.pivot) << ": " << q.name(w.first) << "*"
        << q.name(w.pivot) << " and " << q.name(w.second) << "*"
        << q.name(w.pivot) << " are both outside Z";
  } else {
    out << "SP2 at arrow " << q.name(w.pivot) << ": " << q.name(w.pivot) << "*"
        << q.name(w.first) << " and " << q.name(w.pivot) << "*"
        << q.name(w.second) << " are both outside Z";
  }
  return out.str();
}

std::vector<Path> all_paths(const Quiver& q, std::size_t max_length) {
  std::vector<Path> out;
  std::vector<Path> frontier;
  for (VertexId v : q.vertices()) frontier.push_back(Path::trivial(v));
  for (std::size_t len = 0;; ++len) {
    out.insert(out.end(), frontier.begin(), frontier.end());
    if (len == max_length) break;
    std::vector<Path> next;
    for (const Path& p : frontier) {
      for (ArrowId a : q.arrows_out_of(p.head())) {
        next.push_back(compose(q.arrow_path(a), p));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

std::vector<Monomial> monomials_below(std::size_t variables, std::size_t degree) {
  std::vector<Monomial> out;
  Monomial m(variables, 0);
  auto rec = [&](auto&& self, std::size_t i, std::size_t left) -> void {
    if (i == variables) {
      out.push_back(m);
      return;
    }
    for (std::size_t e = 0; e <= left; ++e) {
      m[i] = static_cast<std::uint16_t>(e);
      self(self, i + 1, left - e);
    }
    m[i] = 0;
  };
  if (degree > 0) rec(rec, 0, degree - 1);
  return out;
}

}  // namespace

BoundedBelowConstants bounded_below_constant(const Quiver& q, const ZSet& z,
                                             const PrimitiveCycleSet& pcs) {
  if (!check_special_pair(q, z).special) {
    throw NotSpecialError("bounded-below constant needs a special pair");
  }
  std::size_t tail_bound = q.arrow_count();
  std::size_t head_bound = q.arrow_count();
  for (ArrowId a : q.arrows()) {
    if (!pcs.with_right_arrow(a)) tail_bound += continuation_bound(q, z, a, Side::Left);
    if (!pcs.with_left_arrow(a)) head_bound += continuation_bound(q, z, a, Side::Right);
  }
  BoundedBelowConstants out;
  out.search_bound = std::max(tail_bound, head_bound);
  for (const Path& p : admissible_paths(q, z, out.search_bound + 1)) {
    if (p.is_trivial()) continue;
    if (periodic_on(p, pcs, Side::Right) && periodic_on(p, pcs, Side::Left)) continue;
    if (p.length() > out.search_bound) {
      throw InvariantError("admissible path beyond the search bound is not periodic");
    }
    if (p.length() + 1 > out.h_comb) {
      out.h_comb = p.length() + 1;
      out.extremal = p;
    }
  }
  out.h = std::max(out.h_comb, 2 * pcs.max_length);
  return out;
}

ConditionResult check_bounded_above(const Quiver& q, const ZSet& z,
                                    const IdealPresentation& ideal, Caps caps) {
  for (const Path& r : z.relations()) {
    if (r.length() < 2) {
      return result(Verdict::Fail, EvidenceKind::Structural,
                    "relation " + q.format(r) + " has length " +
                        std::to_string(r.length()));
    }
  }
  for (ArrowId a : q.arrows()) {
    auto x = AlgebraElement::from_path(ideal.model, caps.length, q.arrow_path(a));
    if (reduce(x, ideal).is_zero()) {
      return result(Verdict::Fail, EvidenceKind::Precision,
                    "arrow " + q.name(a) + " reduces to 0");
    }
  }
  return result(Verdict::Pass, EvidenceKind::Precision,
                "relations have length >= 2 and no arrow reduces to 0");
}

ConditionResult check_bounded_below(const Quiver& q, const ZSet& z,
                                    const PrimitiveCycleSet& pcs,
                                    const IdealPresentation& ideal, Caps caps) {
  const BoundedBelowConstants k = bounded_below_constant(q, z, pcs);
  ConditionResult r = result(Verdict::Pass, EvidenceKind::Structural, "");
  r.constants = {{"h_comb", k.h_comb}, {"m", k.h}, {"h", k.h},
                 {"search_bound", k.search_bound}};
  if (caps.length == 0) {
    r.witness = "search exhaustive to length " + std::to_string(k.search_bound);
    return r;
  }
  const CoefficientModel& model = ideal.model;
  std::size_t certified = 0;
  for (const Path& p : admissible_paths(q, z, caps.length - 1)) {
    if (p.length() < k.h) continue;
    for (Side side : {Side::Right, Side::Left}) {
      const VertexId v = side == Side::Right ? p.tail() : p.head();
      auto block = ideal.block_of.find(v);
      auto c = side == Side::Right ? pcs.with_right_arrow(p.right_arrow())
                                   : pcs.with_left_arrow(p.left_arrow());
      if (block == ideal.block_of.end() || !c) {
        r.verdict = Verdict::Fail;
        r.witness = "admissible path " + q.format(p) + " of length >= h is not periodic";
        return r;
      }
      const std::size_t d = p.length() / c->length();
      const std::size_t rem = p.length() % c->length();
      Path rest = side == Side::Right ? p.slice(0, rem) : p.slice(d * c->length(), rem);
      Path shorter = side == Side::Right ? compose(rest, *c) : compose(*c, rest);
      Coefficient st = model.one();
      for (std::size_t j = 0; j + 1 < d; ++j) st = st * model.generator(block->second);
      auto diff = AlgebraElement::from_path(model, caps.length, p) -
                  st * AlgebraElement::from_path(model, caps.length, shorter);
      if (!reduce(diff, ideal).is_zero()) {
        r.verdict = Verdict::Fail;
        r.witness = q.format(p) + " - " + st.to_string() + "*" + q.format(shorter) +
                    " does not reduce to 0";
        return r;
      }
      ++certified;
    }
  }
  r.witness = "search exhaustive to length " + std::to_string(k.search_bound) +
              "; " + std::to_string(certified) + " reductions p - s^t q certified below L";
  return r;
}

ConditionResult check_arrow_direct(const Quiver& q, const ZSet& z,
                                   const CoefficientModel& model, Caps caps,
                                   ArrowDirectOptions options) {
  const SpecialPairData sp = check_special_pair(q, z);
  if (!sp.special) {
    return result(Verdict::NotApplicable, EvidenceKind::Structural,
                  "not special: " + special_witness(q, sp.witnesses.front()));
  }
  const CoefficientModel m = model.with_degree_cap(caps.degree);
  const PrimitiveCycleSet pcs = enumerate_primitive_cycles(q, z);
  const IdealPresentation ideal = ideal_generators(q, z, pcs, nerve_partition(pcs), m);

  // Left rewriting keeps right arrows except when c^{D+1} is traded for
  // -d^{D+1}; below the length cap that never happens if (D+1)|c| >= L.
  for (const auto& [v, cycles] : pcs.by_vertex) {
    if (cycles.size() < 2) continue;
    for (const Path& c : cycles) {
      if ((caps.degree + 1) * c.length() < caps.length) {
        return result(Verdict::NotApplicable, EvidenceKind::Precision,
                      "degree cap too small: " + q.format(c) + "^" +
                          std::to_string(caps.degree + 1) +
                          " is identified with the other cycles at " + q.name(v));
      }
    }
  }

  std::mt19937_64 rng(options.seed);
  const std::size_t walk = std::min<std::size_t>(caps.length, 6);
  auto check_side = [&](Side side) -> std::optional<std::string> {
    for (VertexId w : q.vertices()) {
      auto arrows = side == Side::Left ? q.arrows_out_of(w) : q.arrows_into(w);
      std::vector<AlgebraElement> images;
      for (ArrowId a : arrows) {
        const Path pa = q.arrow_path(a);
        AlgebraElement acc(m, caps.length);
        for (std::size_t t = 0; t < options.trials; ++t) {
          AlgebraElement x =
              side == Side::Left
                  ? random_element(q, m, caps.length, rng, 3, walk, std::nullopt, pa.head())
                  : random_element(q, m, caps.length, rng, 3, walk, pa.tail(), std::nullopt);
          auto a_elem = AlgebraElement::from_path(m, caps.length, pa);
          AlgebraElement nf = side == Side::Left ? reduce(x * a_elem, ideal)
                                                 : reduce_right(a_elem * x, ideal);
          for (const auto& [p, c] : nf.terms()) {
            const bool ok = !p.is_trivial() &&
                            (side == Side::Left ? p.right_arrow() : p.left_arrow()) == a;
            if (!ok) {
              return "normal form of a multiple of " + q.name(a) + " contains " + q.format(p);
            }
            acc.add_term(p, c);
          }
        }
        for (const AlgebraElement& other : images) {
          for (const Path& p : acc.support()) {
            if (other.terms().count(p)) {
              return "multiples of distinct arrows at " + q.name(w) + " share " + q.format(p);
            }
          }
        }
        images.push_back(std::move(acc));
      }
    }
    return std::nullopt;
  };
  if (auto bad = check_side(Side::Left)) {
    return result(Verdict::Fail, EvidenceKind::Structural, "(5) " + *bad);
  }
  if (auto bad = check_side(Side::Right)) {
    return result(Verdict::Fail, EvidenceKind::Structural, "(6) " + *bad);
  }
  return result(Verdict::Pass, EvidenceKind::Structural,
                "normal forms of x*a end in a and of a*x start with a; " +
                    std::to_string(options.trials) + " random multiples per arrow agree");
}

bool VerificationReport::all_passed() const noexcept {
  return biserial.passed() && special.passed() && bounded_above.passed() &&
         bounded_below.passed() && arrow_direct.passed() && nonvanishing.passed();
}

VerificationReport verify_string_algebra(const Quiver& q, const ZSet& z,
                                         const CoefficientModel& model, Caps caps) {
  VerificationReport report;
  report.caps_used = caps;

  const BiserialResult bis = check_biserial(q);
  if (bis.biserial) {
    report.biserial = result(Verdict::Pass, EvidenceKind::Structural,
                             "every vertex has in- and out-degree <= 2");
  } else {
    report.biserial = result(Verdict::Fail, EvidenceKind::Structural,
                             "vertex " + q.name(*bis.vertex) + " has in-degree " +
                                 std::to_string(bis.in_degree) + " and out-degree " +
                                 std::to_string(bis.out_degree));
  }

  const SpecialPairData sp = check_special_pair(q, z);
  if (!sp.special) {
    report.special = result(Verdict::Fail, EvidenceKind::Structural,
                            special_witness(q, sp.witnesses.front()));
    const std::string why = "requires a special pair";
    report.bounded_above = result(Verdict::NotApplicable, EvidenceKind::Structural, why);
    for (const Path& r : z.relations()) {
      if (r.length() < 2) {
        report.bounded_above = result(Verdict::Fail, EvidenceKind::Structural,
                                      "relation " + q.format(r) + " has length " +
                                          std::to_string(r.length()));
        break;
      }
    }
    report.bounded_below = result(Verdict::NotApplicable, EvidenceKind::Structural, why);
    report.arrow_direct = check_arrow_direct(q, z, model, caps);
    report.nonvanishing = result(Verdict::NotApplicable, EvidenceKind::Precision, why);
    return report;
  }
  report.special = result(Verdict::Pass, EvidenceKind::Structural,
                          "every arrow has at most one admissible extension on each side");

  const CoefficientModel m = model.with_degree_cap(caps.degree);
  const PrimitiveCycleSet pcs = enumerate_primitive_cycles(q, z);
  const IdealPresentation ideal = ideal_generators(q, z, pcs, nerve_partition(pcs), m);

  report.bounded_above = check_bounded_above(q, z, ideal, caps);
  report.bounded_below = check_bounded_below(q, z, pcs, ideal, caps);
  report.arrow_direct = check_arrow_direct(q, z, model, caps);

  const std::size_t bound =
      caps.length > pcs.max_length ? caps.length - pcs.max_length : 0;
  report.nonvanishing = result(Verdict::Pass, EvidenceKind::Precision, "");
  std::size_t checked = 0;
  if (bound > 0) {
    for (const Path& p : admissible_paths(q, z, bound - 1)) {
      auto nf = reduce(AlgebraElement::from_path(m, caps.length, p), ideal);
      if (nf.is_zero()) {
        report.nonvanishing.verdict = Verdict::Fail;
        report.nonvanishing.witness = "admissible path " + q.format(p) + " reduces to 0";
        break;
      }
      ++checked;
    }
    report.nonvanishing_checked_up_to = bound - 1;
  }
  if (report.nonvanishing.passed()) {
    report.nonvanishing.witness =
        std::to_string(checked) + " admissible paths have nonzero normal forms";
  }
  return report;
}

TruncationDimensions truncation_dimension_check(const Quiver& q, const ZSet& z,
                                                const CoefficientModel& model,
                                                std::size_t d) {
  TruncationDimensions out;
  if (model.kind() == ModelKind::Mixed) return out;
  out.applicable = true;
  if (d == 0) return out;
  out.lhs = admissible_paths(q, z, d - 1).size();

  const CoefficientModel m = model.with_degree_cap(d);
  const PrimitiveCycleSet pcs = enumerate_primitive_cycles(q, z);
  const IdealPresentation ideal = ideal_generators(q, z, pcs, nerve_partition(pcs), m);

  std::map<std::pair<Path, Monomial>, std::size_t> columns;
  std::vector<std::vector<Scalar>> rows;
  for (const Monomial& alpha : monomials_below(m.variable_count(), d)) {
    Coefficient r = m.zero();
    r.add_term(alpha, 1);
    for (const Path& p : all_paths(q, d - 1)) {
      auto nf = reduce(AlgebraElement::from_term(p, r, d), ideal);
      std::vector<Scalar> row;
      for (const auto& [path, coeff] : nf.terms()) {
        for (const auto& [mono, value] : coeff.terms()) {
          auto [it, fresh] = columns.try_emplace({path, mono}, columns.size());
          if (row.size() <= it->second) row.resize(it->second + 1, Scalar(0));
          row[it->second] = value;
        }
      }
      if (!row.empty()) rows.push_back(std::move(row));
    }
  }
  out.rhs = matrix_rank(std::move(rows), m.characteristic());
  return out;
}

}  // namespace strandalg
