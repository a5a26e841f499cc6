#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "xturan/hypergraph.hpp"

namespace xturan {

// Norm values are exact (integer arithmetic) whenever p is a nonnegative
// integer and the sum fits in 127 bits; otherwise a double.
struct NormValue {
  double value = 0.0;
  bool exact = false;
  std::optional<Int128> integer;

  static NormValue from_integer(Int128 v);
  static NormValue from_double(double v);
};

enum class Side { Left, Right, Both };

inline constexpr double kFloatTolerance = 1e-9;

bool is_integer_exponent(double p);

// d^p with 0^p = 0 for every p (so p = 0 counts nonzero degrees).
double degree_power(std::int64_t d, double p);

// Sum of d^p over the given degrees.
NormValue norm_of_degrees(std::span<const std::int64_t> degrees, double p);

NormValue p_norm(const Hypergraph& h, double p);
NormValue p_norm(const BipartiteGraph& g, double p, Side side = Side::Both);

// Sum over t-subsets T of d(T)^p, d(T) = number of edges containing T.
NormValue tp_norm(const Hypergraph& h, int t, double p);

// All k-cliques of a 2-graph, each sorted ascending, in lexicographic order.
std::vector<std::vector<Vertex>> cliques(const Hypergraph& g, int k);

// For every t-subset S inducing K_t, the number of K_r containing S. Keys are
// sorted vertex lists; only sets with a nonzero count appear.
std::vector<std::pair<std::vector<Vertex>, std::int64_t>> clique_extension_counts(
    const Hypergraph& g, int t, int r);

NormValue trp_norm(const Hypergraph& g, int t, int r, double p);

// Number of walks with k edges (W_{k+1}). Throws Overflow past 2^64 - 1.
std::uint64_t walk_count(const Hypergraph& g, int k);

struct EvenCycle {
  std::vector<Vertex> vertices;  // cyclic order, length 2i
};

// Looks for two distinct paths with `length` edges sharing both endpoints and
// returns an even cycle of length in [4, 2*length] inside their union.
std::optional<EvenCycle> even_cycle_witness(const Hypergraph& g, int length);

}  // namespace xturan
