#include "xturan/regularization.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "xturan/random.hpp"
#include "xturan/sampling.hpp"
#include "xturan/search.hpp"

namespace xturan {

RegularizationConstants derive_constants(int r, double alpha, double p, double eps, double k_override) {
  require(r >= 2, "r must be at least 2");
  require(alpha > r - 2 && alpha < r - 1, "alpha must lie in (r-2, r-1)");
  require(eps > 0 && eps < 1, "eps must lie in (0, 1)");
  const double p_star = 1.0 / (r - 1 - alpha);
  if (!(p >= 1.0 && p < p_star))
    fail(ErrorKind::Regime, "p must lie in [1, 1/(r-1-alpha)) = [1, " + std::to_string(p_star) + ")");
  RegularizationConstants c;
  c.r = r;
  c.alpha = alpha;
  c.p = p;
  c.eps = eps;
  c.delta = (1 - p * (r - 1 - alpha)) / 4;
  c.delta_in_range = c.delta > 0 && c.delta < 0.25;

  const double target = std::pow(1 - eps, 1 / p);
  auto f = [&](double x) { return 1 - x - std::pow((r - 1) * x, 1 / p) - target; };
  double lo = 0.0, hi = eps;  // f(lo) > 0 > f(hi), f decreasing
  for (int it = 0; it < 200 && hi - lo > 0; ++it) {
    double mid = (lo + hi) / 2;
    if (mid <= lo || mid >= hi) break;
    (f(mid) > 0 ? lo : hi) = mid;
  }
  c.eps1 = (lo + hi) / 2;
  c.eps1_residual = f(c.eps1);

  if (k_override > 0) {
    require(k_override >= 2, "K must be at least 2");
    c.overridden = true;
    c.log2_k = std::log2(k_override);
    c.k = k_override;
  } else {
    // smallest integer k with k delta >= 1 + p(r-1) and 2 delta k > 2 + p alpha - log2 eps1
    const double first = (1 + p * (r - 1)) / c.delta;
    const double second = (2 + p * alpha - std::log2(c.eps1)) / (2 * c.delta);
    double k = std::max(std::ceil(first), std::floor(second) + 1);
    while (k * c.delta < 1 + p * (r - 1)) ++k;
    while (!(2 * c.delta * k > 2 + p * alpha - std::log2(c.eps1))) ++k;
    c.log2_k = k;
    c.k = std::exp2(k);
  }
  const double lk = c.log2_k;
  c.k_first = lk * c.delta >= 1 + p * (r - 1);
  c.k_second = 4 * c.delta * lk + std::log2(c.eps1) - (2 + p * alpha) > 2 * c.delta * lk;
  return c;
}

std::vector<Vertex> heavy_vertices(const Hypergraph& h, double p, double k) {
  std::vector<Vertex> u;
  if (h.order() == 0 || h.empty()) return u;
  const double norm = p_norm(h, p).value;
  const double threshold = k * norm / h.order();
  auto deg = h.degrees();
  for (Vertex v = 0; v < h.order(); ++v)
    if (degree_power(deg[v], p) >= threshold) u.push_back(v);
  return u;
}

namespace {

double phi(double norm, int vertices, double p, double alpha) {
  return norm / std::pow(static_cast<double>(vertices), 1 + p * alpha);
}

}  // namespace

RegularizationTrace regularize(const Hypergraph& g, const RegularizationConstants& constants,
                               const RegularizationOptions& options) {
  require(options.trials >= 1, "trials must be at least 1");
  require(options.n1 >= 1, "N1 must be at least 1");
  require(g.uniformity() == constants.r, "graph uniformity differs from the constants' r");
  require(g.order() >= 1, "the graph needs at least one vertex");
  const double p = constants.p;
  const double alpha = constants.alpha;
  const double k = constants.k;
  const int n = g.order();

  RegularizationTrace trace;
  trace.constants = constants;
  const double g_norm = p_norm(g, p).value;
  trace.c = options.c > 0 ? options.c : phi(g_norm, n, p, alpha);
  trace.precondition_warning = g_norm < trace.c * std::pow(static_cast<double>(n), 1 + p * alpha);

  std::vector<Vertex> labels(n);  // current vertex -> original label
  std::iota(labels.begin(), labels.end(), 0);
  Hypergraph current = g;
  for (int i = 0;; ++i) {
    RegularizationStep step;
    step.i = i;
    step.vertices = current.order();
    step.norm = p_norm(current, p).value;
    step.phi = phi(step.norm, step.vertices, p, alpha);
    auto u = heavy_vertices(current, p, k);
    auto deg = current.degrees();
    step.heavy = static_cast<int>(u.size());
    for (Vertex v : u) step.heavy_mass += degree_power(deg[v], p);

    const bool light = step.heavy_mass < constants.eps1 * step.norm;
    if (light || current.order() <= options.n1) {
      trace.steps.push_back(step);
      trace.k = i;
      trace.stop_reason = light ? "heavy-mass" : "size-floor";
      std::vector<char> heavy(current.order(), 0);
      for (Vertex v : u) heavy[v] = 1;
      std::vector<Vertex> w;
      for (Vertex v = 0; v < current.order(); ++v)
        if (!heavy[v]) w.push_back(v);
      trace.gk_vertices = labels;
      trace.h = current.induced(w);
      for (Vertex v : w) trace.h_vertices.push_back(labels[v]);
      trace.gk_norm = step.norm;
      trace.h_norm = p_norm(trace.h, p).value;
      trace.h_max_degree = trace.h.max_degree();
      const double threshold = k * step.norm / step.vertices;
      trace.delta_ok = step.norm == 0 || degree_power(trace.h_max_degree, p) < threshold;
      trace.norm_ok = trace.h_norm >= (1 - constants.eps) * trace.gk_norm;
      const double m = static_cast<double>(w.size());
      const double d = constants.delta;
      trace.conclusion_i = trace.h_norm >= (1 - constants.eps) * trace.c * std::pow(m, 1 + p * alpha);
      trace.conclusion_ii = m >= std::pow(std::pow(trace.c, 1 / d) * n, d / (1 - 3 * d)) / 2;
      const double c_hat = (1 - constants.eps) * std::pow(trace.c, 1 / p) /
                           (constants.r * std::pow(k, (p - 1) / p));
      trace.conclusion_iv = static_cast<double>(trace.h.size()) > c_hat * std::pow(m, 1 + alpha);
      return trace;
    }
    if (i >= options.max_steps) {
      trace.steps.push_back(step);
      trace.k = i;
      trace.stop_reason = "step-budget";
      throw RegularizationFailure(ErrorKind::StepBudget,
                                  "step budget of " + std::to_string(options.max_steps) + " exhausted",
                                  trace);
    }

    // Draw V_{i+1} from V(G_i) \ U_i, keeping the best of several draws until
    // the potential grows by K^(2 delta).
    std::vector<char> in_u(current.order(), 0);
    for (Vertex v : u) in_u[v] = 1;
    std::vector<Vertex> pool;
    for (Vertex v = 0; v < current.order(); ++v)
      if (!in_u[v]) pool.push_back(v);
    const int m = static_cast<int>(std::floor(current.order() / k));
    const double need = std::pow(k, 2 * constants.delta) * step.phi;
    bool accepted = false;
    Hypergraph next;
    std::vector<Vertex> next_labels;
    for (int attempt = 0; attempt < options.trials && !accepted; ++attempt) {
      auto sample = best_sample_from(current, u, pool, m, p, 1,
                                     derive_seed(options.seed, static_cast<std::uint64_t>(i) * 1000003 + attempt));
      std::vector<Vertex> keep(u);
      keep.insert(keep.end(), sample.sample.begin(), sample.sample.end());
      std::sort(keep.begin(), keep.end());
      auto candidate = current.induced(keep);
      double next_phi = phi(p_norm(candidate, p).value, candidate.order(), p, alpha);
      step.attempts = attempt + 1;
      step.expectation = sample.expectation;
      if (next_phi >= need) {
        accepted = true;
        next = std::move(candidate);
        for (Vertex v : keep) next_labels.push_back(labels[v]);
        step.next_phi = next_phi;
      }
    }
    if (!accepted) {
      trace.steps.push_back(step);
      trace.k = i;
      trace.stop_reason = "resample-exhausted";
      throw RegularizationFailure(ErrorKind::ResampleExhausted,
                                  "potential growth not reached in " + std::to_string(options.trials) +
                                      " draws at step " + std::to_string(i),
                                  trace);
    }
    step.taken = true;
    step.next_vertices = next.order();
    step.growth_ok = step.next_phi >= need;
    const double lower = std::pow(1 / k, i + 1) * n;
    const double upper = std::pow(2 / k, i + 1) * n;
    step.sandwich_ok = lower <= step.next_vertices * (1 + 1e-12) && step.next_vertices <= upper * (1 + 1e-12);
    trace.steps_ok = trace.steps_ok && step.growth_ok && step.sandwich_ok;
    trace.steps.push_back(step);
    current = std::move(next);
    labels = std::move(next_labels);
  }
}

DyadicResult dyadic_select(std::span<const std::int64_t> degrees, double n_product, double p) {
  require(p >= 1.0, "p must be at least 1");
  require(n_product >= 2, "the product of the other part sizes must be at least 2");
  DyadicResult out;
  out.t = static_cast<int>(std::ceil(std::log2(n_product) - 1e-12));
  double total = 0.0;
  for (std::size_t v = 0; v < degrees.size(); ++v) {
    auto d = degrees[v];
    if (d <= 0) continue;
    int cls = 1;
    while ((std::int64_t{1} << cls) <= d) ++cls;  // d in [2^(cls-1), 2^cls)
    if (static_cast<int>(out.class_sums.size()) < cls) out.class_sums.resize(cls, 0.0);
    const double w = degree_power(d, p);
    out.class_sums[cls - 1] += w;
    total += w;
  }
  if (total == 0.0) fail(ErrorKind::EmptySelection, "every degree in the distinguished part is zero");
  int best = 0;
  for (int i = 1; i < static_cast<int>(out.class_sums.size()); ++i)
    if (out.class_sums[i] > out.class_sums[best]) best = i;
  out.chosen_class = best + 1;
  for (std::size_t v = 0; v < degrees.size(); ++v) {
    auto d = degrees[v];
    if (d >= (std::int64_t{1} << best) && d < (std::int64_t{1} << (best + 1))) {
      out.u.push_back(static_cast<Vertex>(v));
      out.edges += d;
    }
  }
  const double size = static_cast<double>(out.u.size());
  out.guarantee = std::pow(size, 1 - 1 / p) / 2 * std::pow(total / out.t, 1 / p);
  out.holds = out.edges >= out.guarantee;
  return out;
}

DyadicResult dyadic_select(const BipartiteGraph& g, double p) {
  auto deg = g.left_degrees();
  return dyadic_select(deg, g.right_size(), p);
}

CriticalReport critical_pipeline(const Hypergraph& g, const PatternSpec& spec, double alpha, double c_f,
                                 int trials, std::uint64_t seed) {
  const int r = g.uniformity();
  require(alpha < r - 1, "alpha must be below r-1");
  require(c_f > 0, "C_F must be positive");
  if (!is_free(g, spec).free) fail(ErrorKind::InvalidInput, "the graph contains the forbidden pattern");
  CriticalReport out;
  out.c_f = c_f;
  out.p_star = 1.0 / (r - 1 - alpha);
  const double ps = out.p_star;
  const double n = g.order();
  out.g_norm = p_norm(g, ps).value;

  auto part = best_balanced_partition(g, ps, trials, seed);
  out.part_of = part.part_of;
  out.h_norm = part.value.value;
  const double r_fact = std::tgamma(r + 1.0);
  out.partition_ok = out.h_norm >= 0.5 * std::pow(r_fact / std::pow(r, r), ps) * out.g_norm;

  auto deg = part.subgraph.degrees();
  std::vector<double> sums(r, 0.0);
  std::vector<int> sizes(r, 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    sums[part.part_of[v]] += degree_power(deg[v], ps);
    ++sizes[part.part_of[v]];
  }
  out.part = static_cast<int>(std::max_element(sums.begin(), sums.end()) - sums.begin());
  out.part_sum = sums[out.part];
  out.pigeonhole_ok = out.part_sum >= out.h_norm / r * (1 - 1e-12);

  std::vector<std::int64_t> part_degrees;
  std::vector<Vertex> part_vertices;
  for (Vertex v = 0; v < g.order(); ++v)
    if (part.part_of[v] == out.part) {
      part_degrees.push_back(deg[v]);
      part_vertices.push_back(v);
    }
  double product = 1.0;
  for (int i = 0; i < r; ++i)
    if (i != out.part) product *= sizes[i];
  if (out.part_sum > 0 && product >= 2) {
    out.dyadic = dyadic_select(part_degrees, product, ps);
    for (auto& v : out.dyadic.u) v = part_vertices[v];
    const double m = static_cast<double>(out.dyadic.u.size());
    out.semibip_bound = c_f * std::pow(m, 1 + alpha - (r - 1)) * std::pow(n, r - 1);
    out.semibip_ok = out.dyadic.edges <= out.semibip_bound;
  } else {
    out.semibip_ok = true;  // nothing to select: the bound holds vacuously
  }
  const double log_n = n >= 2 ? std::log2(n) : 1.0;
  out.log_form = std::pow(n, ps * (r - 1)) * log_n;
  out.implied_bound = std::pow(c_f, ps) * std::pow(2.0, 2 * ps + 1) * r *
                      std::pow(std::pow(r, r) / r_fact, ps) * out.log_form;
  out.bound_ok = out.g_norm <= out.implied_bound;
  return out;
}

double calibrate_cf(const PatternSpec& spec, double alpha, int max_product) {
  double best = 0.0;
  for (int m = 1; m * m <= max_product; ++m)
    for (int n = m; m * n <= max_product; ++n) {
      auto cert = exact_zarankiewicz(m, n, spec, 1.0, Objective::Edges);
      best = std::max(best, cert.value.value / (std::pow(m, alpha) * n));
    }
  return best;
}

BipartiteTrace bipartite_regularize(const BipartiteGraph& g, double p, double alpha, double beta, double eps,
                                    std::uint64_t seed, int trials) {
  const double gap = 2 - alpha - beta;
  require(gap > 0, "alpha + beta must be below 2");
  require(p > 1 && p < 1 / gap, "p must lie in (1, 1/(2-alpha-beta))");
  require(trials >= 1, "trials must be at least 1");
  BipartiteTrace out;
  out.p = p;
  out.alpha = alpha;
  out.beta = beta;
  out.delta = (1 - p * gap) / 2;
  out.eps = eps > 0 ? eps : out.delta / 2;
  const double n = std::max(g.left_size(), g.right_size());
  const double loglog = n > 2 ? std::log2(std::log2(n)) : 0.0;
  out.k_star = std::max(1.0, 2 / out.delta * loglog);

  auto phi_of = [&](const BipartiteGraph& h) {
    const double norm = p_norm(h, p, Side::Left).value;
    return norm / (std::pow(h.left_size(), 1 - p * (1 - alpha)) * std::pow(h.right_size(), p * beta));
  };
  const double factor = std::pow(2.0, out.delta - out.eps);
  BipartiteGraph current = g;
  for (int i = 0;; ++i) {
    BipartiteStep step;
    step.i = i;
    step.left = current.left_size();
    step.right = current.right_size();
    step.norm_left = p_norm(current, p, Side::Left).value;
    step.phi = step.left > 0 && step.right > 0 ? phi_of(current) : 0.0;
    auto deg = current.left_degrees();
    const double threshold = std::pow(2 * step.norm_left / std::max(1, step.left), 1 / p);
    std::vector<Vertex> u;
    for (Vertex v = 0; v < step.left; ++v)
      if (deg[v] > 0 && static_cast<double>(deg[v]) >= threshold) {
        u.push_back(v);
        step.heavy_mass += degree_power(deg[v], p);
      }
    step.heavy = static_cast<int>(u.size());
    auto stop = [&](const std::string& why) {
      out.steps.push_back(step);
      out.k = i;
      out.stop_reason = why;
      out.growth_failed = why == "growth-failed";
      return out;
    };
    if (step.norm_left == 0 || step.heavy_mass < std::pow(2.0, -out.eps) * step.norm_left)
      return stop("heavy-mass");
    if (step.left < 2 || step.right < 2) return stop("size-floor");

    const int next_left = step.left / 2;
    const int next_right = step.right / 2;
    std::vector<char> in_u(step.left, 0);
    for (Vertex v : u) in_u[v] = 1;
    std::vector<Vertex> pool;
    for (Vertex v = 0; v < step.left; ++v)
      if (!in_u[v]) pool.push_back(v);
    std::vector<Vertex> rights(step.right);
    std::iota(rights.begin(), rights.end(), 0);
    bool accepted = false;
    for (int attempt = 0; attempt < trials && !accepted; ++attempt) {
      Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i) * 1000003 + attempt));
      std::vector<Vertex> left(u);
      auto extra = random_subset(rng, pool, static_cast<std::size_t>(next_left) - u.size());
      left.insert(left.end(), extra.begin(), extra.end());
      std::sort(left.begin(), left.end());
      auto right = random_subset(rng, rights, next_right);
      auto candidate = current.induced(left, right);
      const double next_phi = phi_of(candidate);
      step.attempts = attempt + 1;
      if (next_phi >= factor * step.phi) {
        accepted = true;
        step.taken = true;
        step.next_phi = next_phi;
        step.growth_ok = true;
        step.halving_ok = candidate.left_size() == next_left && candidate.right_size() == next_right;
        out.steps_ok = out.steps_ok && step.halving_ok;
        out.steps.push_back(step);
        current = std::move(candidate);
      }
    }
    if (!accepted) return stop("growth-failed");
  }
}

}  // namespace xturan
