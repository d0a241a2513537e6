#include "strandalg/algebra.hpp"

#include <algorithm>

#include "strandalg/errors.hpp"

namespace strandalg {

Caps default_caps(const Quiver& q, const ZSet& z) {
  const std::size_t l = 2 * (q.arrow_count() + z.max_length());
  return {l, l};
}

AlgebraElement::AlgebraElement(CoefficientModel model, std::size_t length_cap)
    : model_(std::move(model)), length_cap_(length_cap) {}

AlgebraElement AlgebraElement::from_path(CoefficientModel model,
                                         std::size_t length_cap, const Path& p) {
  AlgebraElement x(model, length_cap);
  x.add_term(p, model.one());
  return x;
}

AlgebraElement AlgebraElement::from_term(const Path& p, const Coefficient& c,
                                         std::size_t length_cap) {
  AlgebraElement x(c.model(), length_cap);
  x.add_term(p, c);
  return x;
}

std::vector<Path> AlgebraElement::support() const {
  std::vector<Path> out;
  out.reserve(terms_.size());
  for (const auto& [p, c] : terms_) out.push_back(p);
  return out;
}

void AlgebraElement::add_term(const Path& p, const Coefficient& c) {
  if (!(c.model() == model_)) {
    throw PreconditionError("coefficient from a different model");
  }
  if (p.length() >= length_cap_ || c.is_zero()) return;
  auto it = terms_.find(p);
  if (it == terms_.end()) {
    terms_.emplace(p, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void AlgebraElement::check_compatible(const AlgebraElement& other) const {
  if (!(model_ == other.model_) || length_cap_ != other.length_cap_) {
    throw PreconditionError("algebra elements with different models or caps");
  }
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement out(model_, length_cap_);
  for (const auto& [p, c] : terms_) out.add_term(p, -c);
  return out;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  check_compatible(other);
  for (const auto& [p, c] : other.terms_) add_term(p, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  check_compatible(other);
  for (const auto& [p, c] : other.terms_) add_term(p, -c);
  return *this;
}

AlgebraElement operator*(const Coefficient& c, const AlgebraElement& x) {
  AlgebraElement out(x.model_, x.length_cap_);
  for (const auto& [p, r] : x.terms_) out.add_term(p, c * r);
  return out;
}

std::string AlgebraElement::to_string(const Quiver& q) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [p, c] : terms_) {
    if (!out.empty()) out += " + ";
    const std::string coeff = c.to_string();
    if (coeff == "1") {
      out += q.format(p);
    } else if (c.terms().size() == 1) {
      out += coeff + "*" + q.format(p);
    } else {
      out += "(" + coeff + ")*" + q.format(p);
    }
  }
  return out;
}

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) {
  if (!(x.model() == y.model()) || x.length_cap() != y.length_cap()) {
    throw PreconditionError("algebra elements with different models or caps");
  }
  AlgebraElement out(x.model(), x.length_cap());
  for (const auto& [p, a] : x.terms()) {
    for (const auto& [q, b] : y.terms()) {
      if (p.tail() != q.head() || p.length() + q.length() >= x.length_cap()) {
        continue;
      }
      out.add_term(compose(p, q), a * b);
    }
  }
  return out;
}

namespace {

AlgebraElement sigma_from_table(const std::map<VertexId, std::vector<Path>>& cycles_at,
                                VertexId v, const CoefficientModel& model,
                                std::size_t length_cap) {
  AlgebraElement out(model, length_cap);
  auto it = cycles_at.find(v);
  if (it == cycles_at.end()) return out;
  for (const Path& c : it->second) out.add_term(c, model.one());
  return out;
}

}  // namespace

std::vector<AlgebraElement> IdealPresentation::generator_elements(
    std::size_t length_cap) const {
  std::vector<AlgebraElement> out;
  for (const Path& r : z.relations()) {
    out.push_back(AlgebraElement::from_path(model, length_cap, r));
  }
  for (const auto& g : v_generators) {
    AlgebraElement x = AlgebraElement::from_term(Path::trivial(g.vertex),
                                                 model.generator(g.s), length_cap);
    out.push_back(x - sigma_from_table(cycles_at, g.vertex, model, length_cap));
  }
  for (const auto& g : notv_generators) {
    out.push_back(AlgebraElement::from_term(Path::trivial(g.vertex),
                                            model.generator(g.s), length_cap));
  }
  return out;
}

AlgebraElement sigma(VertexId v, const PrimitiveCycleSet& pcs,
                     const CoefficientModel& model, std::size_t length_cap) {
  return sigma_from_table(pcs.by_vertex, v, model, length_cap);
}

IdealPresentation ideal_generators(const Quiver& q, const ZSet& z,
                                   const PrimitiveCycleSet& pcs,
                                   const NervePartition& partition,
                                   const CoefficientModel& model) {
  if (!check_special_pair(q, z).special) {
    throw NotSpecialError("the ideal is only defined for a special pair");
  }
  if (model.generator_count() != partition.size()) {
    throw DimensionMismatchError(
        "the coefficient model has " + std::to_string(model.generator_count()) +
        " generators but the nerve partition has " +
        std::to_string(partition.size()) + " blocks");
  }
  IdealPresentation out{z, model, {}, {}, pcs.by_vertex, partition.block_of,
                        q.vertex_count(), false};
  for (std::size_t i = 0; i < partition.size(); ++i) {
    for (VertexId v : partition.blocks[i]) {
      out.v_generators.push_back({i, v, primitive_cycles_at(v, pcs)});
    }
  }
  for (std::size_t i = 0; i < partition.size(); ++i) {
    for (VertexId v : q.vertices()) {
      if (partition.block(v) != i) out.notv_generators.push_back({i, v});
    }
  }
  return out;
}

IdealPresentation z_ideal(const Quiver& q, const ZSet& z,
                          const PrimitiveCycleSet& pcs,
                          const CoefficientModel& model) {
  return IdealPresentation{z, model, {}, {}, pcs.by_vertex, {}, q.vertex_count(), true};
}

namespace {

struct Term {
  Path path;
  Coefficient coeff;
};

class Rewriter {
 public:
  Rewriter(const IdealPresentation& ideal, std::size_t length_cap)
      : ideal_(ideal), length_cap_(length_cap) {
    for (const auto& [v, cycles] : ideal.cycles_at) {
      for (const Path& c : cycles) by_left_arrow_.emplace(c.left_arrow(), c);
    }
  }

  // nullopt when r*p is already in normal form; otherwise the terms that
  // replace it (possibly none).
  std::optional<std::vector<Term>> step(const Path& p, const Coefficient& r,
                                        Side side) const {
    // Truncation and R1.
    if (p.length() >= length_cap_ || !ideal_.z.admits(p)) {
      return std::vector<Term>{};
    }
    if (ideal_.z_only) return std::nullopt;

    const VertexId v = side == Side::Left ? p.head() : p.tail();
    std::optional<std::size_t> block;
    if (auto it = ideal_.block_of.find(v); it != ideal_.block_of.end()) {
      block = it->second;
    }
    static const std::vector<Path> no_cycles;
    const auto cycles_it = ideal_.cycles_at.find(v);
    const auto& cycles =
        cycles_it == ideal_.cycles_at.end() ? no_cycles : cycles_it->second;

    // R4: modulo I, sum_{c at v} c^{D+1} = s^{D+1} e_v lies in m^{D+1}, and
    // c^{D+1} times any further arrow lies in <Z> + m^{D+1}. So a path with a
    // proper subpath c^{D+1} vanishes, c^{D+1} vanishes when it is the only
    // top power at v below the length cap, and otherwise only the first
    // cycle's top power is kept.
    if (!p.is_trivial()) {
      if (auto rewritten = truncate_power(p, r)) return rewritten;
    }

    // R3: s_j e_v is in I whenever v is not in V[j].
    Coefficient killed = r;
    for (std::size_t j = 0; j < ideal_.model.generator_count(); ++j) {
      if (block != j) killed = killed.without_generator(j);
    }
    if (!(killed == r)) return std::vector<Term>{{p, killed}};

    // R2: s_i e_v = sigma_v for v in V[i].
    if (block) {
      auto [r0, r1] = r.split_generator(*block);
      if (!r1.is_zero()) {
        std::vector<Term> out{{p, r0}};
        for (const Path& c : cycles) {
          out.push_back({side == Side::Left ? compose(c, p) : compose(p, c), r1});
        }
        return out;
      }
    }
    return std::nullopt;
  }

 private:
  std::optional<std::vector<Term>> truncate_power(const Path& p,
                                                  const Coefficient& r) const {
    const std::size_t copies = ideal_.model.degree_cap() + 1;
    const auto& arrows = p.arrows();
    for (std::size_t i = 0; i < arrows.size(); ++i) {
      auto it = by_left_arrow_.find(arrows[i]);
      if (it == by_left_arrow_.end()) continue;
      const Path& c = it->second;
      const std::size_t span = copies * c.length();
      if (i + span > arrows.size()) continue;
      bool periodic = true;
      for (std::size_t j = 0; j < span && periodic; ++j) {
        periodic = arrows[i + j] == c.arrows()[j % c.length()];
      }
      if (!periodic) continue;
      if (span < arrows.size()) return std::vector<Term>{};
      // Only the top powers below the length cap take part in the relation.
      std::vector<Path> alive;
      for (const Path& d : ideal_.cycles_at.at(p.head())) {
        if (copies * d.length() < length_cap_) alive.push_back(d);
      }
      if (c == alive.front() && alive.size() > 1) return std::nullopt;
      std::vector<Term> out;
      if (c == alive.front()) return out;
      for (const Path& d : alive) {
        if (d != c) out.push_back({power(d, copies), -r});
      }
      return out;
    }
    return std::nullopt;
  }

  const IdealPresentation& ideal_;
  std::size_t length_cap_;
  std::map<ArrowId, Path> by_left_arrow_;
};

void accumulate(std::map<Path, Coefficient>& into, const Path& p,
                const Coefficient& c) {
  auto it = into.find(p);
  if (it == into.end()) {
    into.emplace(p, c);
  } else {
    it->second += c;
  }
}

void check_model(const AlgebraElement& x, const IdealPresentation& ideal) {
  if (!(x.model() == ideal.model)) {
    throw PreconditionError("element and ideal use different coefficient models");
  }
}

}  // namespace

AlgebraElement reduce(const AlgebraElement& x, const IdealPresentation& ideal,
                      Side side) {
  check_model(x, ideal);
  const Rewriter rw(ideal, x.length_cap());
  std::map<Path, Coefficient> pending = x.terms();
  std::map<Path, Coefficient> done;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Path& p = node.key();
    const Coefficient& r = node.mapped();
    if (r.is_zero()) continue;
    auto replacement = rw.step(p, r, side);
    if (!replacement) {
      auto it = done.find(p);
      if (it == done.end()) {
        done.emplace(p, r);
      } else {
        // Merging two normal coefficients can leave a non-normal one in the
        // mixed model (digit overflow), so look at the sum again.
        Coefficient merged = it->second + r;
        done.erase(it);
        accumulate(pending, p, merged);
      }
      continue;
    }
    for (const Term& t : *replacement) accumulate(pending, t.path, t.coeff);
  }
  AlgebraElement out(x.model(), x.length_cap());
  for (const auto& [p, c] : done) out.add_term(p, c);
  return out;
}

AlgebraElement reduce_right(const AlgebraElement& x,
                            const IdealPresentation& ideal) {
  return reduce(x, ideal, Side::Right);
}

AlgebraElement reduce_random_order(const AlgebraElement& x,
                                   const IdealPresentation& ideal,
                                   std::mt19937_64& rng) {
  check_model(x, ideal);
  const Rewriter rw(ideal, x.length_cap());
  std::map<Path, Coefficient> current = x.terms();
  for (;;) {
    std::vector<Path> open;
    for (const auto& [p, c] : current) {
      if (c.is_zero() || rw.step(p, c, Side::Left) || rw.step(p, c, Side::Right)) {
        open.push_back(p);
      }
    }
    if (open.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, open.size() - 1);
    const Path p = open[pick(rng)];
    auto node = current.extract(p);
    const Coefficient r = node.mapped();
    if (r.is_zero()) continue;
    Side side = std::bernoulli_distribution(0.5)(rng) ? Side::Left : Side::Right;
    auto replacement = rw.step(p, r, side);
    if (!replacement) {
      side = side == Side::Left ? Side::Right : Side::Left;
      replacement = rw.step(p, r, side);
    }
    for (const Term& t : *replacement) accumulate(current, t.path, t.coeff);
  }
  AlgebraElement out(x.model(), x.length_cap());
  for (const auto& [p, c] : current) out.add_term(p, c);
  return out;
}

MembershipResult ideal_membership(const AlgebraElement& x,
                                  const IdealPresentation& ideal) {
  AlgebraElement nf = reduce(x, ideal);
  const bool member = nf.is_zero();
  return {member, x.caps(), std::move(nf)};
}

AlgebraElement one_sided_transport(const Coefficient& s, VertexId v,
                                   const Path& p, const Path& q,
                                   const IdealPresentation& z_ideal,
                                   std::size_t length_cap) {
  if (p.tail() != v || q.head() != v) {
    throw PreconditionError("transport needs t(p) = v = h(q)");
  }
  if (!z_ideal.z.admits(p) || !z_ideal.z.admits(q)) {
    throw PreconditionError("transport needs Z-admissible paths");
  }
  const auto& model = z_ideal.model;
  auto relation = [&](VertexId w) {
    return AlgebraElement::from_term(Path::trivial(w), s, length_cap) -
           sigma_from_table(z_ideal.cycles_at, w, model, length_cap);
  };
  const auto pe = AlgebraElement::from_path(model, length_cap, p);
  const auto qe = AlgebraElement::from_path(model, length_cap, q);
  const auto left = reduce(relation(p.head()) * pe * qe, z_ideal);
  const auto middle = reduce(pe * relation(v) * qe, z_ideal);
  const auto right = reduce(pe * qe * relation(q.tail()), z_ideal);
  if (!(left == middle) || !(middle == right)) {
    throw InvariantError("one-sided transport identity fails modulo <Z>");
  }
  return middle;
}

}  // namespace strandalg
