#include "xturan/matcher.hpp"

#include <algorithm>
#include <functional>

namespace xturan {

namespace {

std::vector<std::vector<Vertex>> co_neighbour_lists(const Hypergraph& h) {
  std::vector<std::vector<Vertex>> out(h.order());
  for (std::size_t i = 0; i < h.size(); ++i) {
    auto e = h.edge(i);
    for (Vertex a : e)
      for (Vertex b : e)
        if (a != b) out[a].push_back(b);
  }
  for (auto& list : out) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return out;
}

struct Plan {
  std::vector<Vertex> order;                        // pattern vertices in search order
  std::vector<int> anchor;                          // earlier position sharing an edge, or -1
  std::vector<std::vector<int>> earlier_neighbours; // positions (2-graphs)
  std::vector<std::vector<std::size_t>> completed;  // pattern edges finished at this position
};

Plan make_plan(const Hypergraph& pattern, std::span<const std::pair<Vertex, Vertex>> fixed) {
  const int k = pattern.order();
  auto co = co_neighbour_lists(pattern);
  auto deg = pattern.degrees();
  Plan plan;
  std::vector<int> position(k, -1);
  std::vector<int> links(k, 0);
  auto place = [&](Vertex x) {
    position[x] = static_cast<int>(plan.order.size());
    plan.order.push_back(x);
    for (Vertex y : co[x]) ++links[y];
  };
  for (auto [x, v] : fixed) place(x);
  while (static_cast<int>(plan.order.size()) < k) {
    Vertex best = -1;
    for (Vertex x = 0; x < k; ++x) {
      if (position[x] >= 0) continue;
      if (best < 0 || links[x] > links[best] || (links[x] == links[best] && deg[x] > deg[best]))
        best = x;
    }
    place(best);
  }
  plan.anchor.assign(k, -1);
  plan.earlier_neighbours.assign(k, {});
  plan.completed.assign(k, {});
  for (int i = 0; i < k; ++i) {
    Vertex x = plan.order[i];
    for (Vertex y : co[x]) {
      int j = position[y];
      if (j < i) {
        plan.earlier_neighbours[i].push_back(j);
        if (plan.anchor[i] < 0 || j < plan.anchor[i]) plan.anchor[i] = j;
      }
    }
  }
  for (std::size_t ei = 0; ei < pattern.size(); ++ei) {
    int last = -1;
    for (Vertex x : pattern.edge(ei)) last = std::max(last, position[x]);
    plan.completed[last].push_back(ei);
  }
  return plan;
}

}  // namespace

Matcher::Matcher(const Hypergraph& host, std::vector<int> host_side)
    : host_(host), host_side_(std::move(host_side)), host_degree_(host.degrees()),
      co_neighbours_(co_neighbour_lists(host)) {
  if (host.uniformity() == 2) {
    const std::size_t words = (host.order() + 63) / 64;
    adjacency_bits_.assign(host.order(), std::vector<std::uint64_t>(words, 0));
    for (std::size_t i = 0; i < host.size(); ++i) {
      auto e = host.edge(i);
      adjacency_bits_[e[0]][e[1] / 64] |= std::uint64_t{1} << (e[1] % 64);
      adjacency_bits_[e[1]][e[0] / 64] |= std::uint64_t{1} << (e[0] % 64);
    }
  }
}

bool Matcher::adjacent(Vertex a, Vertex b) const {
  return (adjacency_bits_[a][b / 64] >> (b % 64)) & 1;
}

std::optional<std::vector<Vertex>> Matcher::find(
    const Hypergraph& pattern, std::span<const int> pattern_side,
    std::span<const std::pair<Vertex, Vertex>> fixed) const {
  require(pattern.uniformity() == host_.uniformity(), "pattern and host uniformity differ");
  const int k = pattern.order();
  if (k > host_.order()) return std::nullopt;
  const bool sided = !host_side_.empty() && !pattern_side.empty();
  const bool graph = host_.uniformity() == 2;
  auto plan = make_plan(pattern, fixed);
  auto pdeg = pattern.degrees();
  std::vector<Vertex> image(k, -1);  // by position
  std::vector<char> used(host_.order(), 0);
  std::vector<Vertex> fixed_host(k, -1);
  for (std::size_t i = 0; i < fixed.size(); ++i) fixed_host[i] = fixed[i].second;
  std::vector<Vertex> all;
  std::vector<Vertex> mapped(k, -1);  // by pattern vertex
  std::vector<Vertex> buffer;

  auto fits = [&](int i, Vertex v) {
    Vertex x = plan.order[i];
    if (used[v]) return false;
    if (host_degree_[v] < pdeg[x]) return false;
    if (sided && host_side_[v] != pattern_side[x]) return false;
    if (graph) {
      for (int j : plan.earlier_neighbours[i])
        if (!adjacent(image[j], v)) return false;
    }
    return true;
  };

  std::function<bool(int)> rec = [&](int i) -> bool {
    if (i == k) return true;
    ++nodes_;
    Vertex x = plan.order[i];
    std::span<const Vertex> candidates;
    if (fixed_host[i] >= 0) {
      buffer = {fixed_host[i]};
      candidates = buffer;
    } else if (plan.anchor[i] >= 0) {
      candidates = co_neighbours_[image[plan.anchor[i]]];
    } else {
      if (all.empty()) {
        all.resize(host_.order());
        for (Vertex v = 0; v < host_.order(); ++v) all[v] = v;
      }
      candidates = all;
    }
    std::vector<Vertex> local(candidates.begin(), candidates.end());
    for (Vertex v : local) {
      if (!fits(i, v)) continue;
      image[i] = v;
      mapped[x] = v;
      bool ok = true;
      if (!graph) {
        std::vector<Vertex> e(host_.uniformity());
        for (std::size_t ei : plan.completed[i]) {
          auto pe = pattern.edge(ei);
          for (std::size_t t = 0; t < pe.size(); ++t) e[t] = mapped[pe[t]];
          std::sort(e.begin(), e.end());
          if (!host_.has_edge(e)) {
            ok = false;
            break;
          }
        }
      }
      if (ok) {
        used[v] = 1;
        if (rec(i + 1)) return true;
        used[v] = 0;
      }
      image[i] = -1;
      mapped[x] = -1;
    }
    return false;
  };

  if (!rec(0)) return std::nullopt;
  return mapped;
}

std::optional<std::vector<Vertex>> Matcher::find_through_edge(
    const Hypergraph& pattern, std::span<const Vertex> host_edge,
    std::span<const int> pattern_side) const {
  const int r = pattern.uniformity();
  std::vector<Vertex> target(host_edge.begin(), host_edge.end());
  for (std::size_t ei = 0; ei < pattern.size(); ++ei) {
    auto pe = pattern.edge(ei);
    std::vector<Vertex> perm(target);
    std::sort(perm.begin(), perm.end());
    do {
      std::vector<std::pair<Vertex, Vertex>> fixed;
      for (int t = 0; t < r; ++t) fixed.emplace_back(pe[t], perm[t]);
      if (auto m = find(pattern, pattern_side, fixed)) return m;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return std::nullopt;
}

bool is_valid_embedding(const Hypergraph& host, const Hypergraph& pattern,
                        std::span<const Vertex> embedding, std::span<const int> host_side,
                        std::span<const int> pattern_side) {
  if (static_cast<int>(embedding.size()) != pattern.order()) return false;
  std::vector<Vertex> seen(embedding.begin(), embedding.end());
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  for (Vertex v : embedding)
    if (v < 0 || v >= host.order()) return false;
  if (!host_side.empty() && !pattern_side.empty()) {
    for (Vertex x = 0; x < pattern.order(); ++x)
      if (host_side[embedding[x]] != pattern_side[x]) return false;
  }
  std::vector<Vertex> e(pattern.uniformity());
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    auto pe = pattern.edge(i);
    for (std::size_t t = 0; t < pe.size(); ++t) e[t] = embedding[pe[t]];
    std::sort(e.begin(), e.end());
    if (!host.has_edge(e)) return false;
  }
  return true;
}

}  // namespace xturan
