#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace oracle {

std::vector<Edge> Small::edges() const {
  std::vector<Edge> out;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (has(a, b)) out.emplace_back(a, b);
  return out;
}

std::vector<Edge> all_pairs(int n) {
  std::vector<Edge> out;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) out.emplace_back(a, b);
  return out;
}

Small from_mask(int n, std::uint64_t mask, const std::vector<Edge>& pairs) {
  Small g(n);
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if (mask >> k & 1u) g.add(pairs[k].first, pairs[k].second);
  return g;
}

bool contains(const Small& g, int k, const std::vector<Edge>& pattern) {
  if (k > g.n) return false;
  std::vector<int> image(k, -1);
  std::uint64_t used = 0;
  std::function<bool(int)> place = [&](int x) {
    if (x == k) {
      for (auto [a, b] : pattern)
        if (!g.has(image[a], image[b])) return false;
      return true;
    }
    for (int v = 0; v < g.n; ++v) {
      if (used >> v & 1u) continue;
      image[x] = v;
      used |= std::uint64_t{1} << v;
      bool ok = place(x + 1);
      used &= ~(std::uint64_t{1} << v);
      if (ok) return true;
    }
    return false;
  };
  return place(0);
}

double power_sum(const Small& g, double p) {
  double s = 0;
  for (int v = 0; v < g.n; ++v) {
    int d = g.degree(v);
    if (d > 0) s += std::pow(d, p);
  }
  return s;
}

std::int64_t power_sum_int(const Small& g, int p) {
  std::int64_t s = 0;
  for (int v = 0; v < g.n; ++v) {
    std::int64_t d = g.degree(v), t = 1;
    for (int i = 0; i < p; ++i) t *= d;
    s += t;
  }
  return s;
}

std::vector<std::int64_t> max_power_sum(int n, int k, const std::vector<Edge>& pattern, const std::vector<int>& ps) {
  auto pairs = all_pairs(n);
  std::vector<std::int64_t> best(ps.size(), 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    auto g = from_mask(n, mask, pairs);
    if (contains(g, k, pattern)) continue;
    for (std::size_t i = 0; i < ps.size(); ++i) best[i] = std::max(best[i], power_sum_int(g, ps[i]));
  }
  return best;
}

int ex_c4(int n) {
  auto pairs = all_pairs(n);
  Small g(n);
  int best = 0;
  // Adding ab closes a C4 iff some neighbour of a and some neighbour of b are adjacent
  // (through distinct vertices), i.e. a path a-x-y-b exists.
  auto closes = [&](int a, int b) {
    for (int x = 0; x < n; ++x) {
      if (!g.has(a, x) || x == b) continue;
      std::uint64_t ys = g.adj[x] & g.adj[b] & ~(std::uint64_t{1} << a);
      if (ys) return true;
    }
    return false;
  };
  std::function<void(std::size_t, int)> go = [&](std::size_t i, int edges) {
    best = std::max(best, edges);
    if (i == pairs.size() || edges + static_cast<int>(pairs.size() - i) <= best) return;
    auto [a, b] = pairs[i];
    if (!closes(a, b)) {
      g.add(a, b);
      go(i + 1, edges + 1);
      g.adj[a] &= ~(std::uint64_t{1} << b);
      g.adj[b] &= ~(std::uint64_t{1} << a);
    }
    go(i + 1, edges);
  };
  go(0, 0);
  return best;
}

Zaran zarankiewicz_c4(int m, int n) {
  Zaran best;
  const int cells = m * n;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
    std::vector<std::uint64_t> row(m);
    for (int i = 0; i < m; ++i) row[i] = mask >> (i * n) & ((std::uint64_t{1} << n) - 1);
    bool free = true;
    for (int a = 0; a < m && free; ++a)
      for (int b = a + 1; b < m && free; ++b)
        if (__builtin_popcountll(row[a] & row[b]) >= 2) free = false;
    if (!free) continue;
    std::int64_t e = 0, l2 = 0;
    for (int i = 0; i < m; ++i) {
      std::int64_t d = __builtin_popcountll(row[i]);
      e += d;
      l2 += d * d;
    }
    best.edges = std::max(best.edges, e);
    best.left_p2 = std::max(best.left_p2, l2);
  }
  return best;
}

unsigned __int128 walks(const Small& g, int k) {
  using U = unsigned __int128;
  std::vector<U> count(g.n, 1);
  for (int step = 0; step < k; ++step) {
    std::vector<U> next(g.n, 0);
    for (int v = 0; v < g.n; ++v)
      for (int w = 0; w < g.n; ++w)
        if (g.has(v, w)) next[v] += count[w];
    count = std::move(next);
  }
  U total = 0;
  for (auto c : count) total += c;
  return total;
}

namespace {

std::vector<std::vector<int>> cliques_of(const Small& g, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> go = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v < g.n; ++v) {
      bool ok = true;
      for (int u : cur) ok = ok && g.has(u, v);
      if (!ok) continue;
      cur.push_back(v);
      go(v + 1);
      cur.pop_back();
    }
  };
  go(0);
  return out;
}

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<std::int64_t> spine_degrees(const Small& g, int t, int r) {
  auto spines = cliques_of(g, t);
  auto big = cliques_of(g, r);
  std::vector<std::int64_t> out;
  for (auto& s : spines) {
    std::int64_t c = 0;
    for (auto& k : big) c += subset_of(s, k);
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::int64_t books(const Small& g, int t, int r, int pages) {
  auto spines = cliques_of(g, t);
  auto big = cliques_of(g, r);
  std::int64_t total = 0;
  for (auto& s : spines) {
    std::vector<int> through;
    for (std::size_t i = 0; i < big.size(); ++i)
      if (subset_of(s, big[i])) through.push_back(static_cast<int>(i));
    // every pages-subset of `through`, listed explicitly
    std::vector<int> pick;
    std::function<void(std::size_t)> go = [&](std::size_t start) {
      if (static_cast<int>(pick.size()) == pages) {
        ++total;
        return;
      }
      for (std::size_t i = start; i < through.size(); ++i) {
        pick.push_back(through[i]);
        go(i + 1);
        pick.pop_back();
      }
    };
    go(0);
  }
  return total;
}

std::int64_t trp(const Small& g, int t, int r, int p) {
  std::int64_t total = 0;
  for (auto d : spine_degrees(g, t, r)) {
    std::int64_t x = 1;
    for (int i = 0; i < p; ++i) x *= d;
    total += x;
  }
  return total;
}

int tau_exactly_once(const Small& g) {
  int best = -1;
  auto edges = g.edges();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.n); ++s) {
    bool ok = true;
    for (auto [a, b] : edges)
      if (((s >> a) & 1u) + ((s >> b) & 1u) != 1) {
        ok = false;
        break;
      }
    if (ok && (best < 0 || __builtin_popcountll(s) < best)) best = __builtin_popcountll(s);
  }
  return best;
}

}  // namespace oracle
