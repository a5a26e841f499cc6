#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "xturan/hypergraph.hpp"
#include "xturan/norms.hpp"

namespace xturan {

// Three-way comparison of norm values: exact when both are exact integers,
// otherwise with relative tolerance kFloatTolerance.
int compare(const NormValue& a, const NormValue& b);

// Edges meeting every part exactly once.
Hypergraph crossing_subgraph(const Hypergraph& h, const std::vector<int>& part_of);

struct PartitionResult {
  std::vector<int> part_of;  // part index in [0, r) per vertex
  NormValue value;           // p-norm of the crossing subgraph
  Hypergraph subgraph;
};

// Part sizes differ by at most one; larger parts come first.
std::vector<int> balanced_part_sizes(int n, int r);

// Best of `trials` uniformly random balanced r-partitions. With `exhaustive`
// every balanced partition is scored instead. Ties go to the lexicographically
// smallest part assignment.
PartitionResult best_balanced_partition(const Hypergraph& h, double p, int trials,
                                        std::uint64_t seed, bool exhaustive = false);

struct SampleResult {
  std::vector<Vertex> sample;  // W, sorted
  NormValue achieved;          // sum over v in U of d^p in H[U + W]
  double expectation = 0.0;    // exact E[sum over v in U of d(v, W)]
  double empirical_mean = 0.0; // mean of the achieved values over the trials
};

// Probability that a fixed k-set lies in a uniform m-subset of a pool of size n.
double containment_probability(std::int64_t n, std::int64_t m, int k);

SampleResult best_sample(const Hypergraph& h, const std::vector<Vertex>& u, int m, double p,
                         int trials, std::uint64_t seed);

// As best_sample, drawing W from `pool` only.
SampleResult best_sample_from(const Hypergraph& h, const std::vector<Vertex>& u,
                              const std::vector<Vertex>& pool, int m, double p, int trials,
                              std::uint64_t seed);

}  // namespace xturan
