#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "xturan/hypergraph.hpp"
#include "xturan/norms.hpp"
#include "xturan/patterns.hpp"

namespace xturan {

// `count` vertices of degree `degree`.
struct DegreeClass {
  std::int64_t degree = 0;
  std::int64_t count = 0;
};

struct ConstructionParams {
  int n = 0;
  int t = 1;
  int r = 2;
  int q = 0;
  std::vector<int> sizes;   // complete_r_partite
  std::string pattern;      // random_deletion target
  double c = 1.0;           // random_deletion: edge probability c * n^-theta
  std::optional<double> theta;
  std::uint64_t seed = 0;
  bool check = true;        // run is_free against the natural forbidden pattern
};

struct ConstructionReport {
  std::string kind;
  std::vector<std::pair<std::string, std::string>> params;
  Hypergraph graph;
  // Closed-form degree sequence; absent for random constructions.
  std::optional<std::vector<DegreeClass>> predicted_classes;
  std::optional<FreenessWitness> checked;
  std::string checked_against;
  double theta = 0.0;       // random_deletion only
  std::size_t deleted = 0;  // random_deletion only
};

NormValue predicted_pnorm(const std::vector<DegreeClass>& classes, double p);

// kind: star_like, complete_r_partite, cycle, path, polarity, random_deletion.
ConstructionReport construct(const std::string& kind, const ConstructionParams& params);

// S^r(n, t): r-subsets of [n] meeting [t] in exactly one vertex.
Hypergraph star_like(int n, int t, int r);
// Erdős–Rényi polarity graph of PG(2, q), q prime, loops removed.
Hypergraph polarity_graph(int q);
Hypergraph random_deletion(int n, const PatternSpec& spec, double c, double theta,
                           std::uint64_t seed, std::size_t* deleted = nullptr);
// Default deletion exponent (v - r) / (e - 1) of a pattern.
double deletion_exponent(const Hypergraph& f);

bool is_prime(int q);

double fact11_lower_bound(int n, int r, double p, int tau_ind, double ex_n);

}  // namespace xturan
