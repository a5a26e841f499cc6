#include "xturan/hypergraph.hpp"

#include <algorithm>
#include <numeric>

namespace xturan {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidParameter: return "invalid-parameter";
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::NotDegenerate: return "not-degenerate";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::BudgetExceeded: return "budget-exceeded";
    case ErrorKind::ResampleExhausted: return "resample-exhausted";
    case ErrorKind::StepBudget: return "step-budget";
    case ErrorKind::EmptySelection: return "empty-selection";
    case ErrorKind::Regime: return "regime";
    case ErrorKind::Overflow: return "overflow";
  }
  return "unknown";
}

std::string to_string(Int128 value) {
  if (value == 0) return "0";
  bool negative = value < 0;
  unsigned __int128 u = negative ? static_cast<unsigned __int128>(-(value + 1)) + 1
                                 : static_cast<unsigned __int128>(value);
  std::string out;
  while (u > 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (negative) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

Hypergraph::Hypergraph(int r, int n) : r_(r), n_(n) {
  if (r < 1) fail(ErrorKind::InvalidInput, "uniformity must be positive");
  if (n < 0) fail(ErrorKind::InvalidInput, "vertex count must be nonnegative");
}

Hypergraph::Hypergraph(int r, int n, const std::vector<std::vector<Vertex>>& edges)
    : Hypergraph(r, n) {
  std::vector<std::vector<Vertex>> sorted;
  sorted.reserve(edges.size());
  for (const auto& e : edges) {
    if (static_cast<int>(e.size()) != r)
      fail(ErrorKind::InvalidInput, "edge size differs from uniformity");
    auto s = e;
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] < 0 || s[i] >= n) fail(ErrorKind::InvalidInput, "edge vertex out of range");
      if (i > 0 && s[i] == s[i - 1]) fail(ErrorKind::InvalidInput, "repeated vertex in edge");
    }
    sorted.push_back(std::move(s));
  }
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    fail(ErrorKind::InvalidInput, "duplicate edge");
  flat_.reserve(sorted.size() * r);
  for (const auto& e : sorted) flat_.insert(flat_.end(), e.begin(), e.end());
}

Hypergraph Hypergraph::graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  std::vector<std::vector<Vertex>> e;
  e.reserve(edges.size());
  for (auto [a, b] : edges) e.push_back({a, b});
  return Hypergraph(2, n, e);
}

std::vector<std::vector<Vertex>> Hypergraph::edge_list() const {
  std::vector<std::vector<Vertex>> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) {
    auto e = edge(i);
    out.emplace_back(e.begin(), e.end());
  }
  return out;
}

bool Hypergraph::has_edge(std::span<const Vertex> sorted_edge) const {
  std::size_t lo = 0, hi = size();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    auto e = edge(mid);
    auto cmp = std::lexicographical_compare_three_way(e.begin(), e.end(), sorted_edge.begin(),
                                                      sorted_edge.end());
    if (cmp == 0) return true;
    if (cmp < 0)
      lo = mid + 1;
    else
      hi = mid;
  }
  return false;
}

std::vector<std::int64_t> Hypergraph::degrees() const {
  std::vector<std::int64_t> d(n_, 0);
  for (Vertex v : flat_) ++d[v];
  return d;
}

std::int64_t Hypergraph::max_degree() const {
  auto d = degrees();
  return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

Hypergraph Hypergraph::induced(std::span<const Vertex> vertices) const {
  std::vector<Vertex> index(n_, -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<Vertex>(i);
  Hypergraph out(r_, static_cast<int>(vertices.size()));
  std::vector<std::vector<Vertex>> kept;
  for (std::size_t i = 0; i < size(); ++i) {
    auto e = edge(i);
    std::vector<Vertex> mapped;
    mapped.reserve(r_);
    bool inside = true;
    for (Vertex v : e) {
      if (index[v] < 0) {
        inside = false;
        break;
      }
      mapped.push_back(index[v]);
    }
    if (inside) kept.push_back(std::move(mapped));
  }
  return Hypergraph(r_, static_cast<int>(vertices.size()), kept);
}

Hypergraph Hypergraph::relabel(std::span<const Vertex> perm) const {
  std::vector<std::vector<Vertex>> mapped;
  mapped.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) {
    std::vector<Vertex> e;
    for (Vertex v : edge(i)) e.push_back(perm[v]);
    mapped.push_back(std::move(e));
  }
  return Hypergraph(r_, n_, mapped);
}

Hypergraph Hypergraph::with_edge(std::span<const Vertex> e) const {
  auto edges = edge_list();
  edges.emplace_back(e.begin(), e.end());
  return Hypergraph(r_, n_, edges);
}

Hypergraph Hypergraph::without_edge(std::size_t index) const {
  Hypergraph out = *this;
  out.flat_.erase(out.flat_.begin() + index * r_, out.flat_.begin() + (index + 1) * r_);
  return out;
}

Hypergraph Hypergraph::padded(int n) const {
  require(n >= n_, "padding cannot shrink a hypergraph");
  Hypergraph out = *this;
  out.n_ = n;
  return out;
}

std::vector<std::vector<Vertex>> adjacency_lists(const Hypergraph& g) {
  require(g.uniformity() == 2, "adjacency lists need a 2-graph");
  std::vector<std::vector<Vertex>> adj(g.order());
  for (std::size_t i = 0; i < g.size(); ++i) {
    auto e = g.edge(i);
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

BipartiteGraph::BipartiteGraph(int m, int n, std::vector<std::pair<Vertex, Vertex>> edges)
    : m_(m), n_(n), edges_(std::move(edges)) {
  if (m < 0 || n < 0) fail(ErrorKind::InvalidInput, "side sizes must be nonnegative");
  for (auto [a, b] : edges_) {
    if (a < 0 || a >= m || b < 0 || b >= n)
      fail(ErrorKind::InvalidInput, "bipartite edge index out of range");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    fail(ErrorKind::InvalidInput, "duplicate bipartite edge");
}

BipartiteGraph BipartiteGraph::complete(int m, int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i < m; ++i)
    for (Vertex j = 0; j < n; ++j) e.emplace_back(i, j);
  return BipartiteGraph(m, n, std::move(e));
}

std::vector<std::int64_t> BipartiteGraph::left_degrees() const {
  std::vector<std::int64_t> d(m_, 0);
  for (auto [a, b] : edges_) ++d[a];
  return d;
}

std::vector<std::int64_t> BipartiteGraph::right_degrees() const {
  std::vector<std::int64_t> d(n_, 0);
  for (auto [a, b] : edges_) ++d[b];
  return d;
}

std::vector<std::vector<Vertex>> BipartiteGraph::left_neighbours() const {
  std::vector<std::vector<Vertex>> out(m_);
  for (auto [a, b] : edges_) out[a].push_back(b);
  return out;
}

std::vector<std::vector<Vertex>> BipartiteGraph::right_neighbours() const {
  std::vector<std::vector<Vertex>> out(n_);
  for (auto [a, b] : edges_) out[b].push_back(a);
  return out;
}

bool BipartiteGraph::has_edge(Vertex left, Vertex right) const {
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(left, right));
}

Hypergraph BipartiteGraph::to_graph() const {
  std::vector<std::pair<Vertex, Vertex>> e;
  e.reserve(edges_.size());
  for (auto [a, b] : edges_) e.emplace_back(a, m_ + b);
  return Hypergraph::graph(m_ + n_, e);
}

BipartiteGraph BipartiteGraph::transposed() const {
  std::vector<std::pair<Vertex, Vertex>> e;
  e.reserve(edges_.size());
  for (auto [a, b] : edges_) e.emplace_back(b, a);
  return BipartiteGraph(n_, m_, std::move(e));
}

BipartiteGraph BipartiteGraph::induced(std::span<const Vertex> left,
                                       std::span<const Vertex> right) const {
  std::vector<Vertex> li(m_, -1), ri(n_, -1);
  for (std::size_t i = 0; i < left.size(); ++i) li[left[i]] = static_cast<Vertex>(i);
  for (std::size_t j = 0; j < right.size(); ++j) ri[right[j]] = static_cast<Vertex>(j);
  std::vector<std::pair<Vertex, Vertex>> e;
  for (auto [a, b] : edges_)
    if (li[a] >= 0 && ri[b] >= 0) e.emplace_back(li[a], ri[b]);
  return BipartiteGraph(static_cast<int>(left.size()), static_cast<int>(right.size()),
                        std::move(e));
}

DegreeProfile degree_profile(const Hypergraph& h) {
  DegreeProfile p;
  p.degrees = h.degrees();
  if (p.degrees.empty()) return p;
  auto [lo, hi] = std::minmax_element(p.degrees.begin(), p.degrees.end());
  p.min = *lo;
  p.max = *hi;
  p.avg = static_cast<double>(std::accumulate(p.degrees.begin(), p.degrees.end(), std::int64_t{0})) /
          static_cast<double>(p.degrees.size());
  return p;
}

}  // namespace xturan
