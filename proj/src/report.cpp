#include "strandalg/report.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "strandalg/errors.hpp"

namespace strandalg {

namespace {

LocalRing describe(const Quiver& q, const PeirceBlock& block,
                   const IdealPresentation& ideal, Caps caps) {
  LocalRing ring;
  ring.vertex = block.from;
  // Residue field; the corner at v is an algebra over it unless some s_i
  // acts as the cycle.
  const std::uint64_t p = ideal.model.characteristic();
  const std::string k = p == 0 ? "Q" : "F_" + std::to_string(p);
  // basis[0] is e_v; a single-cycle shape needs basis[j] = c^j.
  if (block.basis.size() >= 2) {
    const Path& c = block.basis[1];
    bool powers = c.is_cycle();
    for (std::size_t j = 1; powers && j < block.basis.size(); ++j) {
      powers = block.basis[j] == power(c, j);
    }
    if (powers) {
      ring.cycle = c;
      const std::size_t m = block.basis.size();
      if (m * c.length() < caps.length) {
        ring.shape = LocalShape::Truncated;
        ring.exponent = m;
        ring.description = k + "[c]/(c^" + std::to_string(m) + "), c = " + q.format(c);
        return ring;
      }
      for (const SAction& act : block.s_action) {
        if (act.from == 0 && act.to == 1 && act.coefficient == 1) {
          ring.shape = LocalShape::PowerSeries;
          ring.acting = act.s;
          const std::string gen =
              ideal.model.names()[act.s] + "*e(" + q.name(block.from) + ")";
          ring.description =
              ideal.model.kind() == ModelKind::Mixed && act.s == 0
                  ? "Z_" + std::to_string(p) + ", c = " + q.format(c) + " = " + gen
                  : k + "[[c]], c = " + q.format(c) + " = " + gen;
          return ring;
        }
      }
    }
  } else if (block.basis.size() == 1) {
    ring.shape = LocalShape::Truncated;
    ring.exponent = 1;
    ring.description = k;
    return ring;
  }
  ring.description = "general, " + std::to_string(block.basis.size()) + " basis paths";
  return ring;
}

}  // namespace

PeirceReport peirce_report(const Quiver& q, const IdealPresentation& ideal,
                           Caps caps) {
  PeirceReport report;
  report.caps = caps;
  report.s_names = ideal.model.names();
  std::map<std::pair<VertexId, VertexId>, std::vector<Path>> by_pair;
  if (caps.length > 0) {
    for (const Path& p : admissible_paths(q, ideal.z, caps.length - 1)) {
      by_pair[{p.tail(), p.head()}].push_back(p);
    }
  }
  const CoefficientModel& model = ideal.model;
  for (VertexId from : q.vertices()) {
    for (VertexId to : q.vertices()) {
      PeirceBlock block{from, to, by_pair[{from, to}], {}};
      for (std::size_t s = 0; s < model.generator_count(); ++s) {
        for (std::size_t j = 0; j < block.basis.size(); ++j) {
          auto x = AlgebraElement::from_term(block.basis[j], model.generator(s), caps.length);
          const AlgebraElement nf = reduce(x, ideal);
          for (const auto& [p, c] : nf.terms()) {
            auto it = std::find(block.basis.begin(), block.basis.end(), p);
            if (it == block.basis.end() || !c.is_constant()) {
              throw InvariantError("s-action leaves the Peirce basis at " + q.format(p));
            }
            block.s_action.push_back(
                {s, j, static_cast<std::size_t>(it - block.basis.begin()), c.constant_term()});
          }
        }
      }
      if (from == to) report.local_rings.push_back(describe(q, block, ideal, caps));
      report.pairs.push_back(std::move(block));
    }
  }
  return report;
}

std::string render_text(const Quiver& q, const PeirceReport& report) {
  std::ostringstream out;
  for (const PeirceBlock& b : report.pairs) {
    if (b.basis.empty()) continue;
    out << "e(" << q.name(b.to) << ")*A*e(" << q.name(b.from) << "): ";
    for (std::size_t j = 0; j < b.basis.size(); ++j) {
      out << (j ? ", " : "") << q.format(b.basis[j]);
    }
    out << "\n";
    for (const SAction& a : b.s_action) {
      out << "  " << report.s_names[a.s] << ": " << a.from << " -> " << a.to;
      if (a.coefficient != 1) out << " (" << scalar_to_string(a.coefficient) << ")";
      out << "\n";
    }
  }
  for (const LocalRing& r : report.local_rings) {
    out << "local ring at " << q.name(r.vertex) << ": " << r.description << "\n";
  }
  return out.str();
}

}  // namespace strandalg
