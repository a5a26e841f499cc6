#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "xturan/hypergraph.hpp"
#include "xturan/patterns.hpp"

namespace xturan {

// One round of dependent random choice on a bipartite host, followed by a
// greedy embedding of an s-bounded bipartite pattern (W2 = side 1 of the
// pattern has maximum degree s).
struct DrcReport {
  int s = 0;
  int t = 0;                 // |W2|
  double c = 0.0;            // 2 (|V(F)|^s / s! + |V(F)|)
  std::string richer_side;   // "left" or "right": the side with the larger sum of d^s
  double richer_sum = 0.0;
  double norm_s = 0.0;       // sum of d^s over both sides
  bool precondition_ok = false;  // richer_sum >= C (m + n)^s / 2
  double expected_x = 0.0;       // sum over the richer side of (d / |other side|)^s
  double expected_y_bound = 0.0; // C(|richer side|, s) (t / |other side|)^s

  // From the reported trial; vertices are host labels (left i, right m + j).
  std::vector<Vertex> anchors;
  std::vector<Vertex> x;
  std::vector<Vertex> x_pruned;
  int bad_sets = 0;
  bool pruned_ok = false;  // every s-subset of x_pruned has at least t common neighbours
  std::optional<std::vector<Vertex>> embedding;  // pattern vertex -> host label
  int trials_used = 0;
};

// Throws InvalidParameter unless the pattern is an ordered bipartite 2-graph.
// A run where no trial embeds F is reported with embedding = nullopt.
DrcReport drc_embed(const BipartiteGraph& g, const PatternSpec& spec, int trials, std::uint64_t seed);

// max over W2 of the pattern degree (at least 1).
int pattern_s(const PatternSpec& spec);

}  // namespace xturan
