#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "xturan/hypergraph.hpp"
#include "xturan/norms.hpp"
#include "xturan/patterns.hpp"

namespace xturan {

enum class Objective { PNorm, Left, Right, Edges };

const char* to_string(Objective o);

struct Certificate {
  std::variant<Hypergraph, BipartiteGraph> host;
  NormValue value;
  std::string method;  // "exact" or "heuristic"
  double p = 1.0;
  Objective objective = Objective::PNorm;
  std::string forbidden;
  std::optional<std::uint64_t> seed;
  std::uint64_t nodes = 0;
  std::uint64_t stagnation = 0;  // heuristic: moves since the last improvement
};

// Thrown when a search exhausts its node budget; carries the best host found.
class PartialResult : public Error {
 public:
  PartialResult(const std::string& what, Certificate best)
      : Error(ErrorKind::BudgetExceeded, what), best_(std::move(best)) {}
  const Certificate& best() const { return best_; }

 private:
  Certificate best_;
};

struct SearchLimits {
  std::uint64_t node_budget = 50'000'000;
  bool enforce_size_guard = true;  // n <= 10 for 2-graphs, n <= 8 for 3-graphs, m*n <= 25
};

// Recomputes the value and re-checks freeness; throws std::logic_error on a
// mismatch. Called on every certificate the search functions return.
void verify_certificate(const Certificate& cert, const PatternSpec& spec);

NormValue objective_value(const Certificate& cert);

// Maximum p-norm over F-free r-graphs on n vertices by level-wise canonical
// augmentation. The host is the least canonical form among maximisers.
Certificate exact_max_pnorm(int n, const PatternSpec& spec, double p, const SearchLimits& limits = {});

// Maximum of the objective over ordered-F-free m x n bipartite graphs.
Certificate exact_zarankiewicz(int m, int n, const PatternSpec& spec, double p, Objective objective,
                               const SearchLimits& limits = {});

// Every F-free graph on n vertices up to isomorphism (canonical forms).
std::vector<Hypergraph> free_graphs(int n, const PatternSpec& spec);
// Every r-graph on n vertices up to isomorphism.
std::vector<Hypergraph> all_graphs(int n, int r = 2);

struct LocalSearchOptions {
  std::uint64_t budget = 2000;  // number of attempted moves
  std::uint64_t seed = 0;
  std::optional<Certificate> init;
};

// Hill climbing over additions, removals and swaps that keep the host F-free.
// Never returns less than its best initialisation.
Certificate local_search_max_pnorm(int n, const PatternSpec& spec, double p,
                                   const LocalSearchOptions& options = {});

}  // namespace xturan
