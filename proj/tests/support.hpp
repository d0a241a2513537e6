#pragma once

#include <set>
#include <string>
#include <vector>

#include "strandalg/algebra.hpp"
#include "strandalg/qz_format.hpp"

namespace testing_support {

using namespace strandalg;

inline const std::vector<std::string> kWorkedFixtures = {
    "intro", "running", "mathieu", "dvr_row1", "dvr_row2",
    "dvr_row3", "dvr_row4", "dvr_row5"};

inline QzFile fixture(const std::string& name) {
  return load_qz(std::string(STRANDALG_FIXTURE_DIR) + "/" + name + ".qz");
}

// Model declared by the file, with degree cap D. Mixed models become F_p
// when `equi` is set.
inline CoefficientModel model_of(const QzFile& f, std::size_t degree, bool equi = false) {
  const ModelSpec m = f.model.value_or(ModelSpec{});
  if (m.kind == ModelKind::Mixed && !equi) {
    return CoefficientModel::mixed(m.characteristic, m.names, degree);
  }
  return CoefficientModel::equicharacteristic(m.characteristic, m.names, degree);
}

struct Loaded {
  QzFile file;
  Caps caps;
  PrimitiveCycleSet pcs;
  NervePartition nerve;
  IdealPresentation ideal;
};

inline Loaded load(const std::string& name, bool equi = false) {
  QzFile f = fixture(name);
  const Caps caps = default_caps(f.quiver, f.z);
  PrimitiveCycleSet pcs = enumerate_primitive_cycles(f.quiver, f.z);
  NervePartition nerve = nerve_partition(pcs);
  IdealPresentation ideal =
      ideal_generators(f.quiver, f.z, pcs, nerve, model_of(f, caps.degree, equi));
  return {std::move(f), caps, std::move(pcs), std::move(nerve), std::move(ideal)};
}

inline std::set<std::string> formatted(const Quiver& q, const std::vector<Path>& paths) {
  std::set<std::string> out;
  for (const Path& p : paths) out.insert(q.format(p));
  return out;
}

inline AlgebraElement element(const Loaded& l, const Path& p) {
  return AlgebraElement::from_path(l.ideal.model, l.caps.length, p);
}

inline Path word(const Loaded& l, const std::string& w) {
  return parse_word(l.file.quiver, w);
}

}  // namespace testing_support
