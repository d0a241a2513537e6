#include "strandalg/sampling.hpp"

namespace strandalg {

std::optional<Path> random_path(const Quiver& q, std::mt19937_64& rng,
                                std::size_t max_length,
                                std::optional<VertexId> head,
                                std::optional<VertexId> tail) {
  if (q.vertex_count() == 0) return std::nullopt;
  std::uniform_int_distribution<std::uint32_t> vertex(
      0, static_cast<std::uint32_t>(q.vertex_count() - 1));
  std::uniform_int_distribution<std::size_t> length(0, max_length);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Path p = Path::trivial(tail ? *tail : static_cast<VertexId>(vertex(rng)));
    const std::size_t target = length(rng);
    while (p.length() < target) {
      auto out = q.arrows_out_of(p.head());
      if (out.empty()) break;
      std::uniform_int_distribution<std::size_t> pick(0, out.size() - 1);
      p = compose(q.arrow_path(out[pick(rng)]), p);
    }
    if (!head || p.head() == *head) return p;
  }
  return std::nullopt;
}

Coefficient random_coefficient(const CoefficientModel& model, std::mt19937_64& rng,
                               std::size_t max_degree) {
  Coefficient c = model.zero();
  std::uniform_int_distribution<int> count(1, 3);
  std::uniform_int_distribution<int> scalar(-4, 4);
  std::uniform_int_distribution<std::size_t> degree(0, max_degree);
  const int n = count(rng);
  for (int k = 0; k < n; ++k) {
    Coefficient term = model.constant(scalar(rng));
    if (model.generator_count() > 0) {
      std::uniform_int_distribution<std::size_t> gen(0, model.generator_count() - 1);
      const std::size_t d = degree(rng);
      for (std::size_t j = 0; j < d; ++j) term = term * model.generator(gen(rng));
    }
    c += term;
  }
  return c;
}

AlgebraElement random_element(const Quiver& q, const CoefficientModel& model,
                              std::size_t length_cap, std::mt19937_64& rng,
                              std::size_t terms, std::size_t max_length,
                              std::optional<VertexId> head,
                              std::optional<VertexId> tail) {
  AlgebraElement x(model, length_cap);
  for (std::size_t k = 0; k < terms; ++k) {
    auto p = random_path(q, rng, max_length, head, tail);
    if (!p) continue;
    x.add_term(*p, random_coefficient(model, rng, 2));
  }
  return x;
}

}  // namespace strandalg
