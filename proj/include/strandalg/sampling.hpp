#pragma once

#include <cstddef>
#include <optional>
#include <random>

#include "strandalg/algebra.hpp"

namespace strandalg {

// A random path (not necessarily admissible) of length <= max_length with the
// requested endpoints, or nullopt if a bounded number of random walks finds
// none.
std::optional<Path> random_path(const Quiver& q, std::mt19937_64& rng,
                                std::size_t max_length,
                                std::optional<VertexId> head = std::nullopt,
                                std::optional<VertexId> tail = std::nullopt);

// A random coefficient: a few monomials of degree <= max_degree with small
// integer scalars.
Coefficient random_coefficient(const CoefficientModel& model, std::mt19937_64& rng,
                               std::size_t max_degree);

// Sum of `terms` random terms r * p with the requested endpoints.
AlgebraElement random_element(const Quiver& q, const CoefficientModel& model,
                              std::size_t length_cap, std::mt19937_64& rng,
                              std::size_t terms, std::size_t max_length,
                              std::optional<VertexId> head = std::nullopt,
                              std::optional<VertexId> tail = std::nullopt);

}  // namespace strandalg
