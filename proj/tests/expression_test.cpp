#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "strandalg/errors.hpp"
#include "strandalg/expression.hpp"
#include "support.hpp"

using namespace strandalg;
using testing_support::load;

namespace {

std::string reduced(const testing_support::Loaded& l, const std::string& text) {
  return reduce(parse_element(text, l.file.quiver, l.ideal, l.caps.length), l.ideal)
      .to_string(l.file.quiver);
}

}  // namespace

TEST_CASE("generators of the ideal reduce to zero") {
  const auto l = load("intro");
  CHECK(reduced(l, "p*e(1) - path(a*y*x) - path(y*x*a)") == "0");
  CHECK(reduced(l, "t*e(4) - b") == "0");
  CHECK(reduced(l, "p*e(2) - sigma(2)") == "0");
  CHECK(reduced(l, "t*e(5)") == "0");
}

TEST_CASE("arithmetic") {
  const auto l = load("intro");
  CHECK(reduced(l, "t^2*e(4)") == "b*b");
  CHECK(reduced(l, "(t + 1)*e(4)") == "e(4) + b");
  CHECK(reduced(l, "-b + b") == "0");
  CHECK(reduced(l, "2*c - c") == "c");
  CHECK(reduced(l, "x*a*(e(1) + a)") == "x*a");
  CHECK(reduced(l, "b^0") == reduced(l, "1"));
}

TEST_CASE("errors carry columns") {
  const auto l = load("intro");
  auto column = [&](const std::string& text) -> std::size_t {
    try {
      parse_element(text, l.file.quiver, l.ideal, l.caps.length);
    } catch (const InputError& e) {
      return e.column();
    }
    return 0;
  };
  CHECK(column("t*e(4) - q") == 10);
  CHECK(column("path(x*w)") > 0);
  CHECK(column("e(9)") == 3);
  CHECK(column("(b") == 3);
  CHECK(column("b )") == 3);
}

TEST_CASE("a name that is both an arrow and a generator is ambiguous") {
  const auto f = parse_qz(
      "quiver q\nvertices 1\narrows\n  t: 1 -> 1\nrelations\nmodel kind=equi char=0 s=t\n");
  const auto pcs = enumerate_primitive_cycles(f.quiver, f.z);
  const auto ideal = ideal_generators(f.quiver, f.z, pcs, nerve_partition(pcs),
                                      CoefficientModel::equicharacteristic(0, {"t"}, 4));
  CHECK_THROWS_AS(parse_element("t", f.quiver, ideal, 4), InputError);
  CHECK_NOTHROW(parse_element("path(t)", f.quiver, ideal, 4));
}
