#include "xturan/drc.hpp"

#include <algorithm>
#include <cmath>

#include "xturan/matcher.hpp"
#include "xturan/norms.hpp"
#include "xturan/random.hpp"

namespace xturan {

namespace {

constexpr std::uint64_t kSubsetLimit = 20'000'000;

std::vector<Vertex> intersect(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Calls f on every s-subset of `items` (as index lists) in lexicographic order.
template <class F>
void for_each_subset(int size, int s, F&& f) {
  if (s > size || s <= 0) return;
  std::vector<int> idx(s);
  for (int i = 0; i < s; ++i) idx[i] = i;
  while (true) {
    f(idx);
    int i = s - 1;
    while (i >= 0 && idx[i] == size - s + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

int pattern_s(const PatternSpec& spec) {
  require(spec.members.size() == 1, "the embedder takes a single pattern");
  require(spec.ordered() && spec.uniformity() == 2, "the pattern must be an ordered bipartite graph");
  const auto& f = spec.pattern();
  const auto& side = spec.sides.front();
  auto deg = f.degrees();
  int s = 1;
  for (Vertex x = 0; x < f.order(); ++x)
    if (side[x] == 1) s = std::max<int>(s, static_cast<int>(deg[x]));
  return s;
}

DrcReport drc_embed(const BipartiteGraph& g, const PatternSpec& spec, int trials, std::uint64_t seed) {
  require(trials >= 1, "trials must be at least 1");
  const int s = pattern_s(spec);
  const auto& f = spec.pattern();
  const auto& side = spec.sides.front();
  require(is_s_bounded(f, side, s), "the pattern is not s-bounded");

  DrcReport out;
  out.s = s;
  const int v_f = f.order();
  std::vector<Vertex> w1, w2;
  for (Vertex x = 0; x < v_f; ++x) (side[x] == 0 ? w1 : w2).push_back(x);
  out.t = static_cast<int>(w2.size());
  out.c = 2 * (std::pow(v_f, s) / std::tgamma(s + 1.0) + v_f);

  const int m = g.left_size();
  const int n = g.right_size();
  const double left_sum = p_norm(g, s, Side::Left).value;
  const double right_sum = p_norm(g, s, Side::Right).value;
  out.norm_s = left_sum + right_sum;
  const bool rich_left = left_sum >= right_sum;
  out.richer_side = rich_left ? "left" : "right";
  out.richer_sum = rich_left ? left_sum : right_sum;
  out.precondition_ok = out.richer_sum >= out.c * std::pow(m + n, s) / 2;

  // Work in host labels: left i -> i, right j -> m + j.
  auto host = g.to_graph();
  auto adj = adjacency_lists(host);
  std::vector<Vertex> rich, other;
  for (int i = 0; i < m; ++i) (rich_left ? rich : other).push_back(i);
  for (int j = 0; j < n; ++j) (rich_left ? other : rich).push_back(m + j);
  const double n_other = static_cast<double>(other.size());
  if (n_other > 0) {
    for (Vertex v : rich) out.expected_x += std::pow(adj[v].size() / n_other, s);
    out.expected_y_bound = static_cast<double>(binomial(rich.size(), s)) * std::pow(out.t / n_other, s);
  }

  // W2 by decreasing pattern degree.
  auto fdeg = f.degrees();
  auto f_adj = adjacency_lists(f);
  std::stable_sort(w2.begin(), w2.end(), [&](Vertex a, Vertex b) { return fdeg[a] > fdeg[b]; });

  const DrcReport base = out;
  for (int trial = 0; trial < trials; ++trial) {
    DrcReport r = base;
    r.trials_used = trial + 1;
    if (other.empty() || rich.empty()) {
      out = r;
      break;
    }
    Rng rng(derive_seed(seed, trial));
    for (int i = 0; i < s; ++i) r.anchors.push_back(other[uniform_below(rng, other.size())]);
    r.x = adj[r.anchors[0]];
    for (int i = 1; i < s; ++i) r.x = intersect(r.x, adj[r.anchors[i]]);

    const int xs = static_cast<int>(r.x.size());
    if (xs >= s && static_cast<std::uint64_t>(binomial(xs, s)) > kSubsetLimit)
      fail(ErrorKind::BudgetExceeded, "too many s-subsets in the common neighbourhood");
    std::vector<char> deleted(xs, 0);
    for_each_subset(xs, s, [&](const std::vector<int>& idx) {
      for (int i : idx)
        if (deleted[i]) return;
      auto common = adj[r.x[idx[0]]];
      for (int k = 1; k < s && static_cast<int>(common.size()) >= r.t; ++k) common = intersect(common, adj[r.x[idx[k]]]);
      if (static_cast<int>(common.size()) < r.t) {
        deleted[idx[0]] = 1;
        ++r.bad_sets;
      }
    });
    for (int i = 0; i < xs; ++i)
      if (!deleted[i]) r.x_pruned.push_back(r.x[i]);

    r.pruned_ok = true;
    for_each_subset(static_cast<int>(r.x_pruned.size()), s, [&](const std::vector<int>& idx) {
      auto common = adj[r.x_pruned[idx[0]]];
      for (int k = 1; k < s; ++k) common = intersect(common, adj[r.x_pruned[idx[k]]]);
      if (static_cast<int>(common.size()) < r.t) r.pruned_ok = false;
    });

    // W1 -> X_pruned in order, then each W2 vertex to an unused common
    // neighbour of its images.
    if (r.x_pruned.size() >= w1.size()) {
      std::vector<Vertex> phi(v_f, -1);
      std::vector<char> used(m + n, 0);
      for (std::size_t i = 0; i < w1.size(); ++i) {
        phi[w1[i]] = r.x_pruned[i];
        used[r.x_pruned[i]] = 1;
      }
      bool ok = true;
      for (Vertex y : w2) {
        std::vector<Vertex> cand = other;
        for (Vertex x : f_adj[y]) cand = intersect(cand, adj[phi[x]]);
        auto it = std::find_if(cand.begin(), cand.end(), [&](Vertex v) { return !used[v]; });
        if (it == cand.end()) {
          ok = false;
          break;
        }
        phi[y] = *it;
        used[*it] = 1;
      }
      if (ok) {
        if (!is_valid_embedding(host, f, phi)) throw std::logic_error("drc produced an invalid embedding");
        r.embedding = std::move(phi);
      }
    }
    out = std::move(r);
    if (out.embedding) break;
  }
  return out;
}

}  // namespace xturan
