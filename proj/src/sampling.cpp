#include "xturan/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "xturan/random.hpp"

namespace xturan {

int compare(const NormValue& a, const NormValue& b) {
  if (a.integer && b.integer) {
    if (*a.integer < *b.integer) return -1;
    if (*a.integer > *b.integer) return 1;
    return 0;
  }
  double scale = std::max({1.0, std::abs(a.value), std::abs(b.value)});
  if (std::abs(a.value - b.value) <= kFloatTolerance * scale) return 0;
  return a.value < b.value ? -1 : 1;
}

Hypergraph crossing_subgraph(const Hypergraph& h, const std::vector<int>& part_of) {
  const int r = h.uniformity();
  std::vector<std::vector<Vertex>> kept;
  std::vector<char> seen(r);
  for (std::size_t i = 0; i < h.size(); ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    bool crossing = true;
    for (Vertex v : h.edge(i)) {
      int part = part_of[v];
      if (seen[part]) {
        crossing = false;
        break;
      }
      seen[part] = 1;
    }
    if (crossing) {
      auto e = h.edge(i);
      kept.emplace_back(e.begin(), e.end());
    }
  }
  return Hypergraph(r, h.order(), kept);
}

std::vector<int> balanced_part_sizes(int n, int r) {
  std::vector<int> sizes(r, n / r);
  for (int i = 0; i < n % r; ++i) ++sizes[i];
  return sizes;
}

namespace {

bool better(const PartitionResult& candidate, const PartitionResult& best) {
  int c = compare(candidate.value, best.value);
  if (c != 0) return c > 0;
  return candidate.part_of < best.part_of;
}

PartitionResult score(const Hypergraph& h, std::vector<int> part_of, double p) {
  PartitionResult out;
  out.subgraph = crossing_subgraph(h, part_of);
  out.value = p_norm(out.subgraph, p);
  out.part_of = std::move(part_of);
  return out;
}

}  // namespace

PartitionResult best_balanced_partition(const Hypergraph& h, double p, int trials,
                                        std::uint64_t seed, bool exhaustive) {
  require(trials >= 1, "trials must be at least 1");
  const int n = h.order();
  const int r = h.uniformity();
  auto sizes = balanced_part_sizes(n, r);
  std::optional<PartitionResult> best;
  auto offer = [&](std::vector<int> part_of) {
    auto candidate = score(h, std::move(part_of), p);
    if (!best || better(candidate, *best)) best = std::move(candidate);
  };

  if (exhaustive) {
    std::vector<int> part_of(n, -1);
    std::vector<int> remaining = sizes;
    std::function<void(int)> rec = [&](int v) {
      if (v == n) {
        offer(part_of);
        return;
      }
      for (int part = 0; part < r; ++part) {
        if (remaining[part] == 0) continue;
        --remaining[part];
        part_of[v] = part;
        rec(v + 1);
        ++remaining[part];
      }
    };
    rec(0);
    return *best;
  }

  for (int trial = 0; trial < trials; ++trial) {
    Rng rng(derive_seed(seed, trial));
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    shuffle(rng, order);
    std::vector<int> part_of(n);
    int pos = 0;
    for (int part = 0; part < r; ++part)
      for (int k = 0; k < sizes[part]; ++k) part_of[order[pos++]] = part;
    offer(std::move(part_of));
  }
  return *best;
}

double containment_probability(std::int64_t n, std::int64_t m, int k) {
  if (m < k) return 0.0;
  double prob = 1.0;
  for (int i = 0; i < k; ++i)
    prob *= static_cast<double>(m - i) / static_cast<double>(n - i);
  return prob;
}

SampleResult best_sample(const Hypergraph& h, const std::vector<Vertex>& u, int m, double p,
                         int trials, std::uint64_t seed) {
  std::vector<Vertex> all(h.order());
  std::iota(all.begin(), all.end(), 0);
  return best_sample_from(h, u, all, m, p, trials, seed);
}

SampleResult best_sample_from(const Hypergraph& h, const std::vector<Vertex>& u,
                              const std::vector<Vertex>& pool, int m, double p, int trials,
                              std::uint64_t seed) {
  require(m >= 0 && m <= static_cast<int>(pool.size()), "sample size exceeds the vertex pool");
  require(trials >= 1, "trials must be at least 1");
  require(p >= 1.0, "p must be at least 1");
  const int n = h.order();
  const int r = h.uniformity();
  std::vector<char> in_u(n, 0), in_pool(n, 0);
  for (Vertex v : u) {
    if (v < 0 || v >= n) fail(ErrorKind::InvalidParameter, "U contains a vertex out of range");
    in_u[v] = 1;
  }
  for (Vertex v : pool) in_pool[v] = 1;

  SampleResult out;
  {
    // link edges of U-vertices lying inside the pool
    std::int64_t inside = 0;
    for (std::size_t i = 0; i < h.size(); ++i) {
      auto e = h.edge(i);
      for (Vertex v : e) {
        if (!in_u[v]) continue;
        bool all_in = true;
        for (Vertex w : e)
          if (w != v && !in_pool[w]) all_in = false;
        if (all_in) ++inside;
      }
    }
    out.expectation = static_cast<double>(inside) *
                      containment_probability(static_cast<std::int64_t>(pool.size()), m, r - 1);
  }

  std::optional<NormValue> best_value;
  double sum = 0.0;
  std::vector<char> keep(n);
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng(derive_seed(seed, trial));
    auto w = random_subset(rng, pool, m);
    for (Vertex v = 0; v < n; ++v) keep[v] = in_u[v];
    for (Vertex v : w) keep[v] = 1;
    std::vector<std::int64_t> deg(n, 0);
    for (std::size_t i = 0; i < h.size(); ++i) {
      auto e = h.edge(i);
      bool inside = std::all_of(e.begin(), e.end(), [&](Vertex v) { return keep[v] != 0; });
      if (!inside) continue;
      for (Vertex v : e) ++deg[v];
    }
    std::vector<std::int64_t> selected;
    selected.reserve(u.size());
    for (Vertex v : u) selected.push_back(deg[v]);
    auto value = norm_of_degrees(selected, p);
    sum += value.value;
    bool take = !best_value;
    if (!take) {
      int c = compare(value, *best_value);
      take = c > 0 || (c == 0 && w < out.sample);
    }
    if (take) {
      best_value = value;
      out.sample = std::move(w);
    }
  }
  out.achieved = *best_value;
  out.empirical_mean = sum / trials;
  return out;
}

}  // namespace xturan
