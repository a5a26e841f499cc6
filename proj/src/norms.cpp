#include "xturan/norms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

namespace xturan {

namespace {

bool checked_pow(std::int64_t base, int exp, Int128& out) {
  Int128 acc = 1;
  for (int i = 0; i < exp; ++i) {
    if (__builtin_mul_overflow(acc, static_cast<Int128>(base), &acc)) return false;
  }
  out = acc;
  return true;
}

NormValue sum_powers(std::span<const std::int64_t> values, double p) {
  require(p >= 0.0, "p must be nonnegative");
  if (is_integer_exponent(p)) {
    int e = static_cast<int>(p);
    Int128 total = 0;
    bool ok = true;
    for (std::int64_t d : values) {
      if (d == 0) continue;
      Int128 term;
      if (!checked_pow(d, e, term) || __builtin_add_overflow(total, term, &total)) {
        ok = false;
        break;
      }
    }
    if (ok) return NormValue::from_integer(total);
  }
  double total = 0.0;
  for (std::int64_t d : values) total += degree_power(d, p);
  return NormValue::from_double(total);
}

template <typename Fn>
void for_each_subset(std::span<const Vertex> set, int t, Fn&& fn) {
  std::vector<Vertex> chosen;
  chosen.reserve(t);
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (static_cast<int>(chosen.size()) == t) {
      fn(chosen);
      return;
    }
    std::size_t need = t - chosen.size();
    for (std::size_t i = start; i + need <= set.size(); ++i) {
      chosen.push_back(set[i]);
      rec(i + 1);
      chosen.pop_back();
    }
  };
  rec(0);
}

}  // namespace

NormValue NormValue::from_integer(Int128 v) {
  NormValue out;
  out.value = static_cast<double>(v);
  out.exact = true;
  out.integer = v;
  return out;
}

NormValue NormValue::from_double(double v) {
  NormValue out;
  out.value = v;
  return out;
}

bool is_integer_exponent(double p) { return p >= 0.0 && p <= 64.0 && std::floor(p) == p; }

double degree_power(std::int64_t d, double p) {
  if (d == 0) return 0.0;
  return std::pow(static_cast<double>(d), p);
}

NormValue norm_of_degrees(std::span<const std::int64_t> degrees, double p) {
  return sum_powers(degrees, p);
}

NormValue p_norm(const Hypergraph& h, double p) {
  auto d = h.degrees();
  return sum_powers(d, p);
}

NormValue p_norm(const BipartiteGraph& g, double p, Side side) {
  std::vector<std::int64_t> d;
  if (side != Side::Right) {
    auto l = g.left_degrees();
    d.insert(d.end(), l.begin(), l.end());
  }
  if (side != Side::Left) {
    auto r = g.right_degrees();
    d.insert(d.end(), r.begin(), r.end());
  }
  return sum_powers(d, p);
}

NormValue tp_norm(const Hypergraph& h, int t, double p) {
  require(t >= 1 && t < h.uniformity(), "t must satisfy 1 <= t < r");
  require(p > 0.0, "p must be positive for the (t,p)-norm");
  if (t == 1) return p_norm(h, p);
  std::map<std::vector<Vertex>, std::int64_t> counts;
  for (std::size_t i = 0; i < h.size(); ++i)
    for_each_subset(h.edge(i), t, [&](const std::vector<Vertex>& s) { ++counts[s]; });
  std::vector<std::int64_t> values;
  values.reserve(counts.size());
  for (const auto& [k, v] : counts) values.push_back(v);
  return sum_powers(values, p);
}

std::vector<std::vector<Vertex>> cliques(const Hypergraph& g, int k) {
  require(g.uniformity() == 2, "cliques need a 2-graph");
  require(k >= 0, "clique size must be nonnegative");
  std::vector<std::vector<Vertex>> out;
  if (k == 0) {
    out.emplace_back();
    return out;
  }
  auto adj = adjacency_lists(g);
  std::vector<std::vector<char>> is_adj(g.order(), std::vector<char>(g.order(), 0));
  for (Vertex v = 0; v < g.order(); ++v)
    for (Vertex u : adj[v]) is_adj[v][u] = 1;
  std::vector<Vertex> current;
  std::function<void(const std::vector<Vertex>&)> rec = [&](const std::vector<Vertex>& cand) {
    if (static_cast<int>(current.size()) == k) {
      out.push_back(current);
      return;
    }
    for (std::size_t i = 0; i < cand.size(); ++i) {
      Vertex v = cand[i];
      std::vector<Vertex> next;
      for (std::size_t j = i + 1; j < cand.size(); ++j)
        if (is_adj[v][cand[j]]) next.push_back(cand[j]);
      if (static_cast<int>(current.size() + 1 + next.size()) < k) continue;
      current.push_back(v);
      rec(next);
      current.pop_back();
    }
  };
  std::vector<Vertex> all(g.order());
  for (Vertex v = 0; v < g.order(); ++v) all[v] = v;
  rec(all);
  return out;
}

std::vector<std::pair<std::vector<Vertex>, std::int64_t>> clique_extension_counts(
    const Hypergraph& g, int t, int r) {
  require(t >= 0 && t < r, "need 0 <= t < r");
  std::map<std::vector<Vertex>, std::int64_t> counts;
  for (const auto& c : cliques(g, r))
    for_each_subset(c, t, [&](const std::vector<Vertex>& s) { ++counts[s]; });
  return {counts.begin(), counts.end()};
}

NormValue trp_norm(const Hypergraph& g, int t, int r, double p) {
  require(g.uniformity() == 2, "(t,r,p)-norm is defined for 2-graphs");
  require(t >= 0 && t < r, "need 0 <= t < r");
  require(p > 0.0, "p must be positive for the (t,r,p)-norm");
  auto counts = clique_extension_counts(g, t, r);
  std::vector<std::int64_t> values;
  values.reserve(counts.size());
  for (const auto& [k, v] : counts) values.push_back(v);
  return sum_powers(values, p);
}

std::uint64_t walk_count(const Hypergraph& g, int k) {
  require(k >= 1, "walk length must be at least 1");
  auto adj = adjacency_lists(g);
  std::vector<std::uint64_t> x(g.order(), 1), y(g.order());
  for (int step = 0; step < k; ++step) {
    for (Vertex v = 0; v < g.order(); ++v) {
      std::uint64_t s = 0;
      for (Vertex u : adj[v])
        if (__builtin_add_overflow(s, x[u], &s)) fail(ErrorKind::Overflow, "walk count overflow");
      y[v] = s;
    }
    std::swap(x, y);
  }
  std::uint64_t total = 0;
  for (auto v : x)
    if (__builtin_add_overflow(total, v, &total)) fail(ErrorKind::Overflow, "walk count overflow");
  return total;
}

namespace {

// Shortest even cycle of length in [4, max_len] in a small graph given by an
// edge list; ties broken by the lexicographically smallest vertex sequence.
std::optional<EvenCycle> even_cycle_in(const std::vector<std::pair<Vertex, Vertex>>& edges,
                                       int max_len) {
  std::map<Vertex, std::vector<Vertex>> adj;
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& [v, n] : adj) {
    std::sort(n.begin(), n.end());
    n.erase(std::unique(n.begin(), n.end()), n.end());
  }
  std::optional<std::vector<Vertex>> best;
  std::vector<Vertex> path;
  std::function<void(Vertex)> dfs = [&](Vertex v) {
    for (Vertex u : adj[v]) {
      if (u == path.front() && path.size() >= 4 && path.size() % 2 == 0 &&
          static_cast<int>(path.size()) <= max_len) {
        if (!best || path.size() < best->size() ||
            (path.size() == best->size() && path < *best))
          best = path;
        continue;
      }
      if (u <= path.front()) continue;
      if (std::find(path.begin(), path.end(), u) != path.end()) continue;
      if (static_cast<int>(path.size()) >= max_len) continue;
      path.push_back(u);
      dfs(u);
      path.pop_back();
    }
  };
  for (const auto& [v, n] : adj) {
    path = {v};
    dfs(v);
  }
  if (!best) return std::nullopt;
  return EvenCycle{*best};
}

}  // namespace

std::optional<EvenCycle> even_cycle_witness(const Hypergraph& g, int length) {
  require(length >= 2, "path length must be at least 2");
  require(g.uniformity() == 2, "even cycle search needs a 2-graph");
  auto adj = adjacency_lists(g);
  std::vector<char> on_path(g.order(), 0);
  std::vector<Vertex> path;
  std::optional<EvenCycle> found;

  for (Vertex start = 0; start < g.order() && !found; ++start) {
    std::map<Vertex, std::vector<std::vector<Vertex>>> by_end;
    std::function<void(Vertex)> dfs = [&](Vertex v) {
      if (found) return;
      if (static_cast<int>(path.size()) == length + 1) {
        if (v <= start) return;
        auto& seen = by_end[v];
        for (const auto& other : seen) {
          std::vector<std::pair<Vertex, Vertex>> edges;
          for (std::size_t i = 0; i + 1 < path.size(); ++i) edges.emplace_back(path[i], path[i + 1]);
          for (std::size_t i = 0; i + 1 < other.size(); ++i)
            edges.emplace_back(other[i], other[i + 1]);
          if (auto c = even_cycle_in(edges, 2 * length)) {
            found = c;
            return;
          }
        }
        seen.push_back(path);
        return;
      }
      for (Vertex u : adj[v]) {
        if (on_path[u]) continue;
        on_path[u] = 1;
        path.push_back(u);
        dfs(u);
        path.pop_back();
        on_path[u] = 0;
      }
    };
    on_path[start] = 1;
    path = {start};
    dfs(start);
    on_path[start] = 0;
  }
  return found;
}

}  // namespace xturan
