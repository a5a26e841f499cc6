#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "xturan/hypergraph.hpp"
#include "xturan/norms.hpp"
#include "xturan/patterns.hpp"

namespace xturan {

struct RegularizationConstants {
  int r = 2;
  double alpha = 0.5;
  double p = 1.0;
  double eps = 0.5;
  double delta = 0.0;
  double eps1 = 0.0;
  double log2_k = 0.0;  // K = 2^log2_k
  double k = 0.0;
  bool overridden = false;  // K supplied by the caller instead of derived

  // Self-checks of the defining relations.
  double eps1_residual = 0.0;
  bool delta_in_range = false;
  bool k_first = false;   // K^delta >= 2^(1 + p(r-1))
  bool k_second = false;  // K^(4 delta) eps1 / 2^(2 + p alpha) > K^(2 delta)
  bool certified() const { return delta_in_range && k_first && k_second && std::abs(eps1_residual) <= 1e-12; }
};

// Throws Regime when p is outside [1, 1/(r-1-alpha)). A positive k_override
// replaces the minimal K (the result is then flagged as not certified when it
// fails the inequalities).
RegularizationConstants derive_constants(int r, double alpha, double p, double eps,
                                         double k_override = 0.0);

// {v : d(v)^p >= K ||H||_p / |V(H)|}, sorted.
std::vector<Vertex> heavy_vertices(const Hypergraph& h, double p, double k);

struct RegularizationStep {
  int i = 0;
  int vertices = 0;
  double norm = 0.0;
  double phi = 0.0;
  int heavy = 0;
  double heavy_mass = 0.0;
  // Filled when the step was taken (G_i -> G_{i+1}).
  bool taken = false;
  int next_vertices = 0;
  double next_phi = 0.0;
  bool growth_ok = false;    // phi_{i+1} >= K^(2 delta) phi_i
  bool sandwich_ok = false;  // (1/K)^(i+1) n <= |V_{i+1}| <= (2/K)^(i+1) n
  int attempts = 0;
  double expectation = 0.0;  // exact E[sum over U of d(v, W)] for the draw
};

struct RegularizationTrace {
  RegularizationConstants constants;
  double c = 0.0;  // the C the run is measured against
  bool precondition_warning = false;
  std::vector<RegularizationStep> steps;
  int k = 0;
  std::string stop_reason;  // "heavy-mass", "size-floor"; failures: "resample-exhausted", "step-budget"
  std::vector<Vertex> gk_vertices;  // original labels
  std::vector<Vertex> h_vertices;   // original labels
  Hypergraph h;
  double gk_norm = 0.0;
  double h_norm = 0.0;
  std::int64_t h_max_degree = 0;
  bool delta_ok = false;  // Delta(H)^p < K ||G_k||_p / |V(G_k)|
  bool norm_ok = false;   // ||H||_p >= (1 - eps) ||G_k||_p
  bool steps_ok = true;   // every taken step passed both checks
  // Finite-n surrogates of the remaining conclusions, informational only.
  bool conclusion_i = false;
  bool conclusion_ii = false;
  bool conclusion_iv = false;
};

class RegularizationFailure : public Error {
 public:
  RegularizationFailure(ErrorKind kind, const std::string& what, RegularizationTrace trace)
      : Error(kind, what), trace_(std::move(trace)) {}
  const RegularizationTrace& trace() const { return trace_; }

 private:
  RegularizationTrace trace_;
};

struct RegularizationOptions {
  int trials = 16;
  std::uint64_t seed = 0;
  int max_steps = 64;
  int n1 = 8;
  double c = 0.0;  // 0: use Phi(G)
};

RegularizationTrace regularize(const Hypergraph& g, const RegularizationConstants& constants,
                               const RegularizationOptions& options = {});

struct DyadicResult {
  std::vector<Vertex> u;  // indices into the degree sequence
  int t = 0;              // ceil(log2 N)
  int chosen_class = 0;   // degrees in [2^(i-1), 2^i)
  std::vector<double> class_sums;  // index i-1 holds class i
  std::int64_t edges = 0;          // sum of degrees over U
  double guarantee = 0.0;          // |U|^(1-1/p)/2 * (sum d^p / t)^(1/p)
  bool holds = false;
};

DyadicResult dyadic_select(std::span<const std::int64_t> degrees, double n_product, double p);
DyadicResult dyadic_select(const BipartiteGraph& g, double p);

struct CriticalReport {
  double p_star = 0.0;
  double c_f = 0.0;
  std::vector<int> part_of;
  int part = 0;
  double part_sum = 0.0;
  double h_norm = 0.0;
  double g_norm = 0.0;
  bool pigeonhole_ok = false;  // part_sum >= ||H|| / r
  bool partition_ok = false;   // ||H|| >= (r!/r^r)^p* ||G|| / 2
  DyadicResult dyadic;
  double semibip_bound = 0.0;  // C_F |U|^(1+alpha-(r-1)) n^(r-1)
  bool semibip_ok = false;
  double implied_bound = 0.0;  // upper bound on ||G||_p* from the argument
  bool bound_ok = false;
  double log_form = 0.0;       // n^(p*(r-1)) log n
};

// Runs the critical-exponent argument on an F-free G as a checker. Throws
// InvalidInput when G contains a member of the family.
CriticalReport critical_pipeline(const Hypergraph& g, const PatternSpec& spec, double alpha, double c_f,
                                 int trials = 64, std::uint64_t seed = 0);

// Largest z(m,n)/(m^alpha n) over exhaustively solved m <= n with m*n <= max_product.
double calibrate_cf(const PatternSpec& spec, double alpha, int max_product = 25);

struct BipartiteStep {
  int i = 0;
  int left = 0;
  int right = 0;
  double norm_left = 0.0;
  double phi = 0.0;
  int heavy = 0;
  double heavy_mass = 0.0;
  bool taken = false;
  int attempts = 0;
  double next_phi = 0.0;
  bool growth_ok = false;   // phi_{i+1} >= 2^(delta - eps') phi_i
  bool halving_ok = false;  // |A_{i+1}| = floor(|A_i|/2), |B_{i+1}| = floor(|B_i|/2)
};

struct BipartiteTrace {
  double p = 0.0, alpha = 0.0, beta = 0.0, delta = 0.0, eps = 0.0;
  std::vector<BipartiteStep> steps;
  int k = 0;
  double k_star = 1.0;
  std::string stop_reason;  // "heavy-mass", "size-floor" or "growth-failed"
  bool growth_failed = false;
  bool steps_ok = true;
};

// eps <= 0 selects eps' = delta / 2.
BipartiteTrace bipartite_regularize(const BipartiteGraph& g, double p, double alpha, double beta,
                                    double eps = 0.0, std::uint64_t seed = 0, int trials = 16);

}  // namespace xturan
