#include "strandalg/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "strandalg/errors.hpp"
#include "strandalg/expression.hpp"
#include "strandalg/qz_format.hpp"
#include "strandalg/report.hpp"
#include "strandalg/verifier.hpp"

namespace strandalg {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::string file;
  bool json = false;
  std::optional<std::size_t> length;
  std::optional<std::size_t> degree;
  std::string expression;
  std::size_t d = 0;
};

// Input loaded once per command, with caps and model resolved.
struct Session {
  QzFile file;
  Caps caps;
  CoefficientModel model = CoefficientModel::equicharacteristic(0, {}, 0);
};

std::optional<std::pair<std::size_t, std::size_t>> env_caps() {
  const char* raw = std::getenv("STRANDALG_CAPS");
  if (!raw || !*raw) return std::nullopt;
  std::string s(raw);
  const auto comma = s.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(s);
    return std::pair{static_cast<std::size_t>(std::stoull(s.substr(0, comma))),
                     static_cast<std::size_t>(std::stoull(s.substr(comma + 1)))};
  } catch (const std::exception&) {
    throw InputError("STRANDALG_CAPS must look like L,D");
  }
}

Session open(const Options& o) {
  Session s{load_qz(o.file), {}, CoefficientModel::equicharacteristic(0, {}, 0)};
  s.caps = default_caps(s.file.quiver, s.file.z);
  if (s.file.model) {
    if (s.file.model->length_cap) s.caps.length = *s.file.model->length_cap;
    if (s.file.model->degree_cap) s.caps.degree = *s.file.model->degree_cap;
  }
  if (auto e = env_caps()) s.caps = {e->first, e->second};
  if (o.length) s.caps.length = *o.length;
  if (o.degree) s.caps.degree = *o.degree;

  if (s.file.model) {
    const ModelSpec& m = *s.file.model;
    s.model = m.kind == ModelKind::Mixed
                  ? CoefficientModel::mixed(m.characteristic, m.names, s.caps.degree)
                  : CoefficientModel::equicharacteristic(m.characteristic, m.names,
                                                         s.caps.degree);
  } else {
    std::size_t n = 0;
    if (check_special_pair(s.file.quiver, s.file.z).special) {
      n = nerve_partition(enumerate_primitive_cycles(s.file.quiver, s.file.z)).size();
    }
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("s" + std::to_string(i));
    s.model = CoefficientModel::equicharacteristic(0, names, s.caps.degree);
  }
  return s;
}

IdealPresentation build_ideal(const Session& s) {
  const PrimitiveCycleSet pcs = enumerate_primitive_cycles(s.file.quiver, s.file.z);
  return ideal_generators(s.file.quiver, s.file.z, pcs, nerve_partition(pcs), s.model);
}

json paths_json(const Quiver& q, const std::vector<Path>& paths) {
  json out = json::array();
  for (const Path& p : paths) out.push_back(q.format(p));
  return out;
}

json condition_json(const ConditionResult& r) {
  json out{{"verdict", to_string(r.verdict)}, {"kind", to_string(r.kind)}};
  if (!r.witness.empty()) out["witness"] = r.witness;
  if (!r.constants.empty()) {
    json c = json::object();
    for (const auto& [k, v] : r.constants) c[k] = v;
    out["constants"] = c;
  }
  return out;
}

int cmd_check(const Options& o, std::ostream& out) {
  const Session s = open(o);
  const Quiver& q = s.file.quiver;
  const BiserialResult bis = check_biserial(q);
  const SpecialPairData sp = check_special_pair(q, s.file.z);
  if (o.json) {
    json j{{"name", s.file.name},
           {"vertices", q.vertex_count()},
           {"arrows", q.arrow_count()},
           {"relations", paths_json(q, s.file.z.relations())},
           {"biserial", bis.biserial},
           {"special", sp.special}};
    if (!bis.biserial) j["biserial_witness"] = q.name(*bis.vertex);
    json w = json::array();
    for (const SpecialWitness& x : sp.witnesses) {
      w.push_back({{"condition", x.condition == SpecialCondition::SP1 ? "SP1" : "SP2"},
                   {"pivot", q.name(x.pivot)},
                   {"arrows", {q.name(x.first), q.name(x.second)}}});
    }
    j["special_witnesses"] = w;
    out << j.dump(2) << "\n";
  } else {
    out << "quiver " << s.file.name << ": " << q.vertex_count() << " vertices, "
        << q.arrow_count() << " arrows, " << s.file.z.size() << " relations\n";
    out << "biserial: " << (bis.biserial ? "yes" : "no");
    if (!bis.biserial) out << " (vertex " << q.name(*bis.vertex) << ")";
    out << "\nspecial: " << (sp.special ? "yes" : "no") << "\n";
  }
  return bis.biserial && sp.special ? 0 : 1;
}

int cmd_primitives(const Options& o, std::ostream& out) {
  const Session s = open(o);
  const Quiver& q = s.file.quiver;
  const PrimitiveCycleSet pcs = enumerate_primitive_cycles(q, s.file.z);
  if (o.json) {
    json by_vertex = json::object();
    for (const auto& [v, cycles] : pcs.by_vertex) by_vertex[q.name(v)] = paths_json(q, cycles);
    out << json{{"cycles", paths_json(q, pcs.cycles)}, {"by_vertex", by_vertex}}.dump(2)
        << "\n";
  } else {
    for (const Path& c : pcs.cycles) out << q.format(c) << "\n";
  }
  return 0;
}

int cmd_nerve(const Options& o, std::ostream& out) {
  const Session s = open(o);
  const Quiver& q = s.file.quiver;
  const NervePartition nerve = nerve_partition(enumerate_primitive_cycles(q, s.file.z));
  if (o.json) {
    json blocks = json::array();
    for (const auto& b : nerve.blocks) {
      json names = json::array();
      for (VertexId v : b) names.push_back(q.name(v));
      blocks.push_back(names);
    }
    out << json{{"blocks", blocks}}.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < nerve.blocks.size(); ++i) {
      out << (i ? " " : "") << "V[" << i + 1 << "]={";
      for (std::size_t j = 0; j < nerve.blocks[i].size(); ++j) {
        out << (j ? "," : "") << q.name(nerve.blocks[i][j]);
      }
      out << "}";
    }
    out << "\n";
  }
  return 0;
}

int cmd_ideal(const Options& o, std::ostream& out) {
  const Session s = open(o);
  const Quiver& q = s.file.quiver;
  const IdealPresentation ideal = build_ideal(s);
  const auto& names = s.model.names();
  if (o.json) {
    json v = json::array();
    for (const VGenerator& g : ideal.v_generators) {
      v.push_back({{"s", names[g.s]}, {"vertex", q.name(g.vertex)},
                   {"sigma", paths_json(q, g.sigma)}});
    }
    json nv = json::array();
    for (const NotVGenerator& g : ideal.notv_generators) {
      nv.push_back({{"s", names[g.s]}, {"vertex", q.name(g.vertex)}});
    }
    out << json{{"relations", paths_json(q, s.file.z.relations())},
                {"v_generators", v},
                {"notv_generators", nv}}
               .dump(2)
        << "\n";
  } else {
    for (const Path& r : s.file.z.relations()) out << q.format(r) << "\n";
    for (const VGenerator& g : ideal.v_generators) {
      out << names[g.s] << "*e(" << q.name(g.vertex) << ")";
      for (const Path& c : g.sigma) out << " - " << q.format(c);
      out << "\n";
    }
    for (const NotVGenerator& g : ideal.notv_generators) {
      out << names[g.s] << "*e(" << q.name(g.vertex) << ")\n";
    }
  }
  return 0;
}

int cmd_reduce(const Options& o, std::ostream& out) {
  const Session s = open(o);
  const Quiver& q = s.file.quiver;
  const IdealPresentation ideal = build_ideal(s);
  const AlgebraElement x = parse_element(o.expression, q, ideal, s.caps.length);
  const AlgebraElement nf = reduce(x, ideal);
  if (o.json) {
    json terms = json::array();
    for (const auto& [p, c] : nf.terms()) {
      terms.push_back({{"path", q.format(p)}, {"coefficient", c.to_string()}});
    }
    out << json{{"input", o.expression},
                {"normal_form", nf.to_string(q)},
                {"terms", terms},
                {"member", nf.is_zero()},
                {"caps", {{"L", s.caps.length}, {"D", s.caps.degree}}}}
               .dump(2)
        << "\n";
  } else {
    out << nf.to_string(q) << "\n";
  }
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Session s = open(o);
  const VerificationReport r =
      verify_string_algebra(s.file.quiver, s.file.z, s.model, s.caps);
  const std::pair<const char*, const ConditionResult*> rows[] = {
      {"biserial", &r.biserial},         {"special", &r.special},
      {"bounded_above", &r.bounded_above}, {"bounded_below", &r.bounded_below},
      {"arrow_direct", &r.arrow_direct},   {"nonvanishing", &r.nonvanishing}};
  if (o.json) {
    json j = json::object();
    for (const auto& [name, c] : rows) j[name] = condition_json(*c);
    j["caps_used"] = {{"L", r.caps_used.length}, {"D", r.caps_used.degree}};
    j["nonvanishing_checked_up_to"] =
        r.nonvanishing_checked_up_to ? json(*r.nonvanishing_checked_up_to) : json(nullptr);
    j["string_algebra"] = r.all_passed();
    out << j.dump(2) << "\n";
  } else {
    for (const auto& [name, c] : rows) {
      out << name << ": " << to_string(c->verdict) << " (" << to_string(c->kind) << ")";
      for (const auto& [k, v] : c->constants) out << " " << k << "=" << v;
      if (!c->witness.empty()) out << " - " << c->witness;
      out << "\n";
    }
    out << "caps: L=" << r.caps_used.length << " D=" << r.caps_used.degree << "\n";
    out << (r.all_passed() ? "string algebra\n" : "not verified\n");
  }
  return r.all_passed() ? 0 : 1;
}

int cmd_truncdim(const Options& o, std::ostream& out) {
  const Session s = open(o);
  if (s.model.kind() == ModelKind::Mixed) {
    throw PreconditionError("truncdim is not applicable to a mixed-characteristic model");
  }
  const TruncationDimensions t =
      truncation_dimension_check(s.file.quiver, s.file.z, s.model, o.d);
  if (o.json) {
    out << json{{"d", o.d}, {"lhs_dim", t.lhs}, {"rhs_dim", t.rhs}, {"equal", t.equal()}}
               .dump(2)
        << "\n";
  } else {
    out << "d=" << o.d << " lhs=" << t.lhs << " rhs=" << t.rhs
        << (t.equal() ? " equal" : " differ") << "\n";
  }
  return t.equal() ? 0 : 1;
}

int cmd_report(const Options& o, std::ostream& out) {
  const Session s = open(o);
  const Quiver& q = s.file.quiver;
  const PeirceReport r = peirce_report(q, build_ideal(s), s.caps);
  if (o.json) {
    json pairs = json::array();
    for (const PeirceBlock& b : r.pairs) {
      json act = json::array();
      for (const SAction& a : b.s_action) {
        json e{{"s", r.s_names[a.s]}, {"from_basis_idx", a.from}, {"to_basis_idx", a.to}};
        if (a.coefficient != 1) e["coefficient"] = scalar_to_string(a.coefficient);
        act.push_back(e);
      }
      pairs.push_back({{"from", q.name(b.from)},
                       {"to", q.name(b.to)},
                       {"basis", paths_json(q, b.basis)},
                       {"s_action", act}});
    }
    json rings = json::array();
    for (const LocalRing& l : r.local_rings) {
      rings.push_back({{"vertex", q.name(l.vertex)}, {"description", l.description}});
    }
    out << json{{"caps", {{"L", r.caps.length}, {"D", r.caps.degree}}},
                {"pairs", pairs},
                {"local_rings", rings}}
               .dump(2)
        << "\n";
  } else {
    out << render_text(q, r);
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quiver algebras over regular local rings: string-algebra checks",
               "strandalg"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "quiver description (.qz)")->required();
    sub->add_flag("--json", o.json, "machine-readable output");
    sub->add_option("-L,--length-cap", o.length, "path length cap L");
    sub->add_option("-D,--degree-cap", o.degree, "coefficient degree cap D");
  };
  std::map<CLI::App*, int (*)(const Options&, std::ostream&)> handlers;
  auto add = [&](const char* name, const char* help, int (*fn)(const Options&, std::ostream&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    common(sub);
    handlers[sub] = fn;
    return sub;
  };
  add("check", "biserial and special-pair checks", cmd_check);
  add("primitives", "list primitive cycles", cmd_primitives);
  add("nerve", "primitive-nerve partition", cmd_nerve);
  add("ideal", "generators of the ideal I", cmd_ideal);
  add("reduce", "normal form of an element expression", cmd_reduce)
      ->add_option("expression", o.expression, "e.g. \"s1*e(1) - path(a*y*x)\"")
      ->required();
  add("verify", "check the string-algebra conditions", cmd_verify);
  add("truncdim", "compare truncation dimensions at length d", cmd_truncdim)
      ->add_option("d", o.d, "truncation length")
      ->required();
  add("report", "Peirce decomposition by vertex pairs", cmd_report);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  try {
    for (const auto& [sub, fn] : handlers) {
      if (sub->parsed()) return fn(o, out);
    }
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << "\n";
    return 2;
  } catch (const DimensionMismatchError& e) {
    err << "model mismatch: " << e.what() << "\n";
    return 2;
  } catch (const CompositionError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace strandalg
