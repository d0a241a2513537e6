#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "strandalg/errors.hpp"
#include "strandalg/sampling.hpp"
#include "support.hpp"

using namespace strandalg;
using testing_support::element;
using testing_support::Loaded;
using testing_support::load;
using testing_support::word;

namespace {

// Generators as strings: "s*e(v) - c1 - c2" with the cycles sorted.
std::set<std::string> generator_strings(const Loaded& l) {
  const Quiver& q = l.file.quiver;
  const auto& names = l.ideal.model.names();
  std::set<std::string> out;
  for (const VGenerator& g : l.ideal.v_generators) {
    std::set<std::string> cycles;
    for (const Path& c : g.sigma) cycles.insert(q.format(c));
    std::string s = names[g.s] + "*e(" + q.name(g.vertex) + ")";
    for (const auto& c : cycles) s += " - " + c;
    out.insert(s);
  }
  for (const NotVGenerator& g : l.ideal.notv_generators) {
    out.insert(names[g.s] + "*e(" + q.name(g.vertex) + ")");
  }
  return out;
}

AlgebraElement times(const Loaded& l, const std::string& gen, const std::string& w) {
  const auto i = l.ideal.model.find_generator(gen);
  REQUIRE(i);
  return l.ideal.model.generator(*i) * element(l, word(l, w));
}

std::string nf(const Loaded& l, const AlgebraElement& x) {
  return reduce(x, l.ideal).to_string(l.file.quiver);
}

}  // namespace

TEST_CASE("ideal generators of the introductory example") {
  const Loaded l = load("intro");
  CHECK(generator_strings(l) ==
        std::set<std::string>{"p*e(1) - a*y*x - y*x*a", "p*e(2) - x*a*y - z*w",
                              "p*e(3) - w*z", "t*e(4) - b", "t*e(1)", "t*e(2)",
                              "t*e(3)", "t*e(5)", "p*e(4)", "p*e(5)"});
}

TEST_CASE("ideal generators of the running example") {
  const Loaded l = load("running");
  CHECK(generator_strings(l) ==
        std::set<std::string>{"p*e(1) - a5*b1 - x", "p*e(2) - b1*a5", "t*e(4) - a2*b2",
                              "t*e(5) - a1*z*b3 - b2*a2", "t*e(6) - b3*a1*z - z*b3*a1",
                              "t*e(1)", "t*e(2)", "t*e(3)", "p*e(3)", "p*e(4)", "p*e(5)",
                              "p*e(6)"});
}

TEST_CASE("model must match the nerve") {
  const auto f = testing_support::fixture("intro");
  const auto pcs = enumerate_primitive_cycles(f.quiver, f.z);
  CHECK_THROWS_AS(ideal_generators(f.quiver, f.z, pcs, nerve_partition(pcs),
                                   CoefficientModel::equicharacteristic(0, {"s"}, 4)),
                  DimensionMismatchError);
}

TEST_CASE("reductions in the introductory example") {
  const Loaded l = load("intro");
  CHECK(nf(l, times(l, "t", "e(4)")) == "b");
  CHECK(nf(l, times(l, "t", "b")) == "b*b");
  CHECK(nf(l, times(l, "p", "e(1)")) == "a*y*x + y*x*a");
  CHECK(nf(l, times(l, "p", "e(3)")) == "w*z");
  CHECK(nf(l, times(l, "t", "e(1)")) == "0");
  CHECK(nf(l, times(l, "p", "e(5)")) == "0");
  CHECK(nf(l, times(l, "p", "c")) == "0");
  CHECK(nf(l, element(l, word(l, "c*c*c"))) == "0");
  CHECK(nf(l, element(l, word(l, "w*x"))) == "0");
  // 3 is p in the 3-adic model.
  CHECK(nf(l, l.ideal.model.constant(3) * element(l, word(l, "x"))) == "x*a*y*x");
  CHECK(nf(l, l.ideal.model.constant(4) * element(l, word(l, "c"))) == "c");
}

TEST_CASE("multiplication skips non-composable pairs and truncates") {
  const Loaded l = load("intro");
  const auto x = element(l, word(l, "x"));
  const auto y = element(l, word(l, "y"));
  CHECK((x * x).is_zero());
  CHECK((y * x).to_string(l.file.quiver) == "y*x");
  AlgebraElement big = element(l, word(l, "b"));
  for (std::size_t k = 1; k < l.caps.length; ++k) big = big * element(l, word(l, "b"));
  CHECK(big.is_zero());
}

TEST_CASE("degree truncation identifies the top powers of competing cycles") {
  auto f = testing_support::fixture("intro");
  const auto pcs = enumerate_primitive_cycles(f.quiver, f.z);
  const auto model = CoefficientModel::equicharacteristic(0, {"p", "t"}, 1);
  const auto ideal = ideal_generators(f.quiver, f.z, pcs, nerve_partition(pcs), model);
  auto el = [&](const std::string& w) {
    return AlgebraElement::from_path(model, 12, parse_word(f.quiver, w));
  };
  // (zw)^2 + (xay)^2 = sigma_2^2 = p^2 e_2, which lies in m^2.
  CHECK(reduce(el("z*w*z*w") + el("x*a*y*x*a*y"), ideal).is_zero());
  CHECK_FALSE(reduce(el("z*w*z*w"), ideal).is_zero());
  CHECK(reduce(el("z*w*z*w*z*w"), ideal).is_zero());
  // A lone cycle's top power is s^2 e_4.
  CHECK(reduce(el("b*b"), ideal).is_zero());
  CHECK_FALSE(reduce(el("b"), ideal).is_zero());
  // A top power inside a longer path vanishes.
  CHECK(reduce(el("y*x*a*y*x*a*y"), ideal).is_zero());
  CHECK(reduce(el("w*z*w*z*w"), ideal).is_zero());
}

TEST_CASE("top powers past the length cap drop out of the relation") {
  // Two cycles at 1: a and b*c. With D = 1 and L = 4, (b*c)^2 is truncated,
  // so a^2 = s^2 e_1 - (b*c)^2 vanishes as well.
  const auto f = parse_qz(
      "quiver q\nvertices 1 2\narrows\n  a: 1 -> 1\n  b: 2 -> 1\n  c: 1 -> 2\n"
      "relations\n  a*b\n  c*a\n");
  const auto pcs = enumerate_primitive_cycles(f.quiver, f.z);
  REQUIRE(pcs.by_vertex.at(*f.quiver.find_vertex("1")).size() == 2);
  const auto model = CoefficientModel::equicharacteristic(2, {"s"}, 1);
  const auto ideal = ideal_generators(f.quiver, f.z, pcs, nerve_partition(pcs), model);
  auto el = [&](std::size_t L, const std::string& w) {
    return AlgebraElement::from_path(model, L, parse_word(f.quiver, w));
  };
  CHECK(reduce(el(4, "a*a"), ideal).is_zero());
  CHECK_FALSE(reduce(el(5, "a*a"), ideal).is_zero());
  CHECK(reduce(el(5, "a*a") + el(5, "b*c*b*c"), ideal).is_zero());
}

TEST_CASE("one-sided transport modulo Z") {
  const Loaded l = load("intro");
  const auto zi = z_ideal(l.file.quiver, l.file.z, l.pcs, l.ideal.model);
  const Coefficient p = l.ideal.model.generator(0);
  const auto v2 = *l.file.quiver.find_vertex("2");
  const AlgebraElement r =
      one_sided_transport(p, v2, word(l, "w"), word(l, "z"), zi, l.caps.length);
  CHECK(r == reduce(p * element(l, word(l, "w*z")) - element(l, word(l, "w*z*w*z")), zi));
  CHECK_FALSE(r.is_zero());
  CHECK_THROWS_AS(one_sided_transport(p, v2, word(l, "w"), word(l, "a"), zi, l.caps.length),
                  PreconditionError);
}

TEST_CASE("membership") {
  const Loaded l = load("running");
  const auto m = ideal_membership(times(l, "p", "e(1)") - element(l, word(l, "x")) -
                                      element(l, word(l, "a5*b1")),
                                  l.ideal);
  CHECK(m.member);
  CHECK(m.caps == l.caps);
  const auto n = ideal_membership(element(l, word(l, "x")), l.ideal);
  CHECK_FALSE(n.member);
  CHECK(n.normal_form.to_string(l.file.quiver) == "x");
}

TEST_CASE("property: reduction is canonical") {
  std::mt19937_64 rng(99);
  for (const auto& name : testing_support::kWorkedFixtures) {
    CAPTURE(name);
    const Loaded l = load(name);
    const Quiver& q = l.file.quiver;
    const auto& model = l.ideal.model;
    const std::size_t L = l.caps.length;
    const auto gens = l.ideal.generator_elements(L);
    for (int i = 0; i < 40; ++i) {
      const auto x = random_element(q, model, L, rng, 4, 8);
      const auto y = random_element(q, model, L, rng, 4, 8);
      const auto rx = reduce(x, l.ideal);
      // Idempotent; orientation and rule order do not matter.
      CHECK(reduce(rx, l.ideal) == rx);
      CHECK(reduce_right(x, l.ideal) == rx);
      CHECK(reduce_random_order(x, l.ideal, rng) == rx);
      // Linear up to re-reduction of digit carries.
      CHECK(reduce(x + y, l.ideal) == reduce(rx + reduce(y, l.ideal), l.ideal));
      // Two-sided multiples of generators vanish.
      std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
      const auto& g = gens[pick(rng)];
      const auto u = random_element(q, model, L, rng, 2, 5);
      const auto w = random_element(q, model, L, rng, 2, 5);
      CHECK(reduce(u * g * w, l.ideal).is_zero());
      // Normal forms are supported on admissible paths with constant coefficients.
      for (const auto& [p, c] : rx.terms()) {
        CHECK(l.file.z.admits(p));
        CHECK(c.is_constant());
      }
    }
  }
}

TEST_CASE("property: sigma commutes with admissible paths modulo Z") {
  for (const auto& name : testing_support::kWorkedFixtures) {
    const Loaded l = load(name);
    const auto zi = z_ideal(l.file.quiver, l.file.z, l.pcs, l.ideal.model);
    for (const Path& p : admissible_paths(l.file.quiver, l.file.z, 6)) {
      const auto lhs = element(l, p) * sigma(p.tail(), l.pcs, l.ideal.model, l.caps.length);
      const auto rhs = sigma(p.head(), l.pcs, l.ideal.model, l.caps.length) * element(l, p);
      CHECK(reduce(lhs - rhs, zi).is_zero());
    }
  }
}
