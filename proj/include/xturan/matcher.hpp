#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "xturan/hypergraph.hpp"

namespace xturan {

// Backtracking subgraph (not induced) embedding of a fixed pattern into a host
// of the same uniformity. Candidates come from the neighbourhood of an already
// mapped pattern neighbour and are filtered by degree, side and adjacency.
class Matcher {
 public:
  // host_side / pattern_side, when non-empty, restrict pattern vertex x to host
  // vertices v with host_side[v] == pattern_side[x].
  Matcher(const Hypergraph& host, std::vector<int> host_side = {});

  // First embedding in the canonical search order, or nullopt. `fixed` pins
  // pattern vertices to host vertices before the search starts.
  std::optional<std::vector<Vertex>> find(
      const Hypergraph& pattern, std::span<const int> pattern_side = {},
      std::span<const std::pair<Vertex, Vertex>> fixed = {}) const;

  // Embedding that uses the host edge `host_edge` (sorted), if any.
  std::optional<std::vector<Vertex>> find_through_edge(const Hypergraph& pattern,
                                                       std::span<const Vertex> host_edge,
                                                       std::span<const int> pattern_side = {}) const;

  std::uint64_t nodes() const { return nodes_; }

 private:
  const Hypergraph& host_;
  std::vector<int> host_side_;
  std::vector<std::int64_t> host_degree_;
  std::vector<std::vector<Vertex>> co_neighbours_;
  std::vector<std::vector<std::uint64_t>> adjacency_bits_;  // 2-graphs only
  mutable std::uint64_t nodes_ = 0;

  bool adjacent(Vertex a, Vertex b) const;
};

// True when `embedding` maps every pattern edge onto a host edge injectively
// (and respects sides when both side vectors are given).
bool is_valid_embedding(const Hypergraph& host, const Hypergraph& pattern,
                        std::span<const Vertex> embedding, std::span<const int> host_side = {},
                        std::span<const int> pattern_side = {});

}  // namespace xturan
