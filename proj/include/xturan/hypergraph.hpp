#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "xturan/error.hpp"

namespace xturan {

using Vertex = std::int32_t;
using Int128 = __int128;

std::string to_string(Int128 value);

// r-uniform hypergraph on vertices {0..n-1}. Edges are stored flat, each edge
// sorted, the edge list strictly increasing in lexicographic order.
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(int r, int n);
  // Sorts every edge and the edge list. Throws InvalidInput on a vertex out of
  // range, a repeated vertex inside an edge, or a duplicated edge.
  Hypergraph(int r, int n, const std::vector<std::vector<Vertex>>& edges);

  static Hypergraph graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

  int uniformity() const { return r_; }
  int order() const { return n_; }
  std::size_t size() const { return r_ == 0 ? 0 : flat_.size() / r_; }
  bool empty() const { return flat_.empty(); }

  std::span<const Vertex> edge(std::size_t i) const {
    return {flat_.data() + i * r_, static_cast<std::size_t>(r_)};
  }
  std::vector<std::vector<Vertex>> edge_list() const;
  const std::vector<Vertex>& flat() const { return flat_; }

  bool has_edge(std::span<const Vertex> sorted_edge) const;

  std::vector<std::int64_t> degrees() const;
  std::int64_t max_degree() const;

  // Subgraph induced on `vertices`, relabelled in the given order.
  Hypergraph induced(std::span<const Vertex> vertices) const;
  // Vertex v of this graph becomes perm[v] in the result.
  Hypergraph relabel(std::span<const Vertex> perm) const;
  Hypergraph with_edge(std::span<const Vertex> e) const;
  Hypergraph without_edge(std::size_t index) const;
  // Adds isolated vertices so the order becomes n.
  Hypergraph padded(int n) const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;
  friend auto operator<=>(const Hypergraph& a, const Hypergraph& b) {
    if (auto c = a.r_ <=> b.r_; c != 0) return c;
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.flat_ <=> b.flat_;
  }

 private:
  int r_ = 2;
  int n_ = 0;
  std::vector<Vertex> flat_;
};

// Neighbour lists of a 2-graph, each sorted.
std::vector<std::vector<Vertex>> adjacency_lists(const Hypergraph& g);

// Bipartite graph with m left and n right vertices, edges (left, right).
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  BipartiteGraph(int m, int n, std::vector<std::pair<Vertex, Vertex>> edges);

  static BipartiteGraph complete(int m, int n);

  int left_size() const { return m_; }
  int right_size() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }

  std::vector<std::int64_t> left_degrees() const;
  std::vector<std::int64_t> right_degrees() const;
  std::vector<std::vector<Vertex>> left_neighbours() const;
  std::vector<std::vector<Vertex>> right_neighbours() const;
  bool has_edge(Vertex left, Vertex right) const;

  // Left vertex i becomes i, right vertex j becomes m + j.
  Hypergraph to_graph() const;
  BipartiteGraph transposed() const;
  BipartiteGraph induced(std::span<const Vertex> left, std::span<const Vertex> right) const;

  friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

 private:
  int m_ = 0;
  int n_ = 0;
  std::vector<std::pair<Vertex, Vertex>> edges_;
};

struct DegreeProfile {
  std::vector<std::int64_t> degrees;
  std::int64_t max = 0;
  std::int64_t min = 0;
  double avg = 0.0;
};

DegreeProfile degree_profile(const Hypergraph& h);

}  // namespace xturan
