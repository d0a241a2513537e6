#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "strandalg/report.hpp"
#include "support.hpp"

using namespace strandalg;
using testing_support::load;

namespace {

const PeirceBlock& block(const Quiver& q, const PeirceReport& r, const std::string& from,
                         const std::string& to) {
  for (const PeirceBlock& b : r.pairs) {
    if (q.name(b.from) == from && q.name(b.to) == to) return b;
  }
  FAIL("no such pair");
  return r.pairs.front();
}

const LocalRing& ring(const Quiver& q, const PeirceReport& r, const std::string& v) {
  for (const LocalRing& l : r.local_rings) {
    if (q.name(l.vertex) == v) return l;
  }
  FAIL("no such vertex");
  return r.local_rings.front();
}

}  // namespace

TEST_CASE("introductory example: truncated and power-series corners") {
  const auto l = load("intro");
  const Quiver& q = l.file.quiver;
  const PeirceReport r = peirce_report(q, l.ideal, l.caps);
  const PeirceBlock& b55 = block(q, r, "5", "5");
  CHECK(testing_support::formatted(q, b55.basis) ==
        std::set<std::string>{"e(5)", "c", "c*c"});
  CHECK(b55.s_action.empty());
  CHECK(ring(q, r, "5").shape == LocalShape::Truncated);
  CHECK(ring(q, r, "5").exponent == 3);

  const PeirceBlock& b44 = block(q, r, "4", "4");
  CHECK(b44.basis.size() == l.caps.length);
  CHECK(q.format(b44.basis[1]) == "b");
  const LocalRing& r4 = ring(q, r, "4");
  CHECK(r4.shape == LocalShape::PowerSeries);
  REQUIRE(r4.acting);
  CHECK(l.ideal.model.names()[*r4.acting] == "t");
  bool t_e4_is_b = false;
  for (const SAction& a : b44.s_action) t_e4_is_b |= (a.s == 1 && a.from == 0 && a.to == 1);
  CHECK(t_e4_is_b);

  CHECK(block(q, r, "5", "1").basis.empty());
  CHECK(block(q, r, "1", "4").basis.empty());
}

TEST_CASE("basis counts match brute force") {
  for (const auto& name : {"intro", "running", "dvr_row4"}) {
    const auto l = load(name);
    const Quiver& q = l.file.quiver;
    const PeirceReport r = peirce_report(q, l.ideal, l.caps);
    const auto walks =
        oracle::admissible_walks(oracle::from_file(l.file), l.caps.length - 1);
    for (const PeirceBlock& b : r.pairs) {
      const auto count = std::count_if(walks.begin(), walks.end(), [&](const oracle::Walk& w) {
        return w.tail == q.name(b.from) && w.head == q.name(b.to);
      });
      CHECK(b.basis.size() == static_cast<std::size_t>(count));
    }
  }
}

TEST_CASE("vertices outside V carry no s-action on their corner") {
  const auto l = load("intro");
  const Quiver& q = l.file.quiver;
  const PeirceReport r = peirce_report(q, l.ideal, l.caps);
  CHECK(block(q, r, "5", "5").s_action.empty());
  CHECK(ring(q, r, "3").description == "Z_3, c = w*z = p*e(3)");
  CHECK(ring(q, r, "4").description == "F_3[[c]], c = b = t*e(4)");
  CHECK(render_text(q, r).find("local ring at 5: F_3[c]/(c^3)") != std::string::npos);
}
