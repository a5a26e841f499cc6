#pragma once

#include <vector>

#include "xturan/hypergraph.hpp"

namespace xturan {

struct CanonicalForm {
  Hypergraph graph;             // relabelled copy
  std::vector<Vertex> labeling; // labeling[v] = new label of v
};

// Canonical relabelling by colour refinement and individualisation, taking the
// lexicographically least edge list over the search leaves. `colour`, when
// given, is preserved: vertices of smaller colour get smaller labels.
CanonicalForm canonical_form(const Hypergraph& g, const std::vector<int>& colour = {});

bool isomorphic(const Hypergraph& a, const Hypergraph& b);

}  // namespace xturan
