#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "xturan/hypergraph.hpp"

namespace xturan {

using Rng = std::mt19937_64;

// Independent stream for trial `index` of a run seeded with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

// Uniform integer in [0, bound) by rejection, identical on every platform.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

// Uniform m-subset of `pool`, returned sorted.
std::vector<Vertex> random_subset(Rng& rng, std::vector<Vertex> pool, std::size_t m);

void shuffle(Rng& rng, std::vector<Vertex>& items);

}  // namespace xturan
