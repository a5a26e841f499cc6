#pragma once

#include <optional>
#include <string>
#include <vector>

#include "xturan/hypergraph.hpp"

namespace xturan {

struct TauValues {
  std::optional<int> tau_part;
  std::optional<int> tau_ind;
  std::vector<Vertex> ind_witness;  // S, sorted
  std::vector<int> part_witness;    // part index per vertex, part 0 distinguished
};

// A forbidden r-graph or family. `sides`, when non-empty, holds one side
// vector per member (0 = W1, mapped to the left of a host; 1 = W2) and turns
// containment into ordered containment for bipartite hosts.
struct PatternSpec {
  std::string name;
  std::vector<Hypergraph> members;
  std::vector<std::vector<int>> sides;
  std::optional<TauValues> tau_cache;

  int uniformity() const { return members.front().uniformity(); }
  bool ordered() const { return !sides.empty(); }
  const Hypergraph& pattern() const { return members.front(); }
};

// Checks member uniformities agree and that sides, if any, split every edge.
void validate(const PatternSpec& spec);

PatternSpec single_pattern(std::string name, Hypergraph f, std::vector<int> sides = {});

struct FreenessWitness {
  bool free = true;
  std::optional<std::vector<Vertex>> embedding;  // pattern vertex -> host vertex
  int member = -1;
};

// Plain subgraph containment; sides are ignored.
FreenessWitness is_free(const Hypergraph& host, const PatternSpec& spec);
// Ordered containment when the spec carries sides (W1 -> left, W2 -> right),
// otherwise plain containment in the underlying graph (right j -> m + j).
FreenessWitness is_free(const BipartiteGraph& host, const PatternSpec& spec);

// Smallest vertex sets by increasing size, lexicographic order within a size.
TauValues tau_values(const Hypergraph& f);

struct FamilyTau {
  int tau_part = 0;
  int tau_ind = 0;
  std::vector<std::string> warnings;  // members skipped as not r-partite
};

// Minimum over r-partite members. Throws NotDegenerate if there is none.
FamilyTau family_tau(const PatternSpec& spec);

// Sum over K_t-inducing t-sets S of C(d_{G,r}(S), pages).
Int128 book_count(const Hypergraph& g, int t, int r, int pages);

Int128 binomial(std::int64_t n, std::int64_t k);

// Vertices of W2 (side 1) have degree at most s.
bool is_s_bounded(const Hypergraph& f, const std::vector<int>& sides, int s);

Hypergraph cycle_graph(int k);
Hypergraph path_graph(int k);
Hypergraph complete_graph(int k);
// Complete r-partite r-graph; part i occupies the next sizes[i] vertices.
Hypergraph complete_partite(const std::vector<int>& sizes);

// Registry names: C{k}, K{s},{t}, K{s}, P{k}, K^{r}_{s1,...,sr},
// tau-gap-3graph, C<={2l}. Anything else is tried as a pattern file.
PatternSpec resolve_pattern(const std::string& name_or_path);
std::optional<PatternSpec> registry_pattern(const std::string& name);

}  // namespace xturan
