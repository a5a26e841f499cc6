#include "xturan/canonical.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace xturan {

namespace {

class Labeler {
 public:
  Labeler(const Hypergraph& g) : g_(g), n_(g.order()), r_(g.uniformity()), incident_(n_) {
    for (std::size_t e = 0; e < g.size(); ++e)
      for (Vertex v : g.edge(e)) incident_[v].push_back(e);
  }

  CanonicalForm run(std::vector<int> cell) {
    refine(cell);
    search(cell);
    CanonicalForm out;
    out.labeling = best_labeling_;
    out.graph = g_.relabel(best_labeling_);
    return out;
  }

 private:
  const Hypergraph& g_;
  int n_;
  int r_;
  std::vector<std::vector<std::size_t>> incident_;
  std::optional<std::vector<Vertex>> best_flat_;
  std::vector<Vertex> best_labeling_;

  // Splits cells by the multiset of cell-patterns of incident edges until stable.
  // Cell ids stay ranks 0..k-1 and refinement keeps the existing order.
  void refine(std::vector<int>& cell) const {
    int cells = count(cell);
    std::vector<std::vector<std::int64_t>> sig(n_);
    std::vector<std::int64_t> others;
    while (true) {
      for (Vertex v = 0; v < n_; ++v) {
        sig[v].clear();
        sig[v].push_back(cell[v]);
        for (std::size_t e : incident_[v]) {
          others.clear();
          for (Vertex w : g_.edge(e))
            if (w != v) others.push_back(cell[w]);
          std::sort(others.begin(), others.end());
          std::int64_t code = 0;
          for (auto c : others) code = code * 131 + c + 1;
          sig[v].push_back(code);
        }
        std::sort(sig[v].begin() + 1, sig[v].end());
      }
      std::vector<Vertex> order(n_);
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return sig[a] < sig[b]; });
      int rank = -1;
      for (int i = 0; i < n_; ++i) {
        if (i == 0 || sig[order[i]] != sig[order[i - 1]]) ++rank;
        cell[order[i]] = rank;
      }
      int now = rank + 1;
      if (now == cells) return;
      cells = now;
    }
  }

  static int count(const std::vector<int>& cell) {
    return cell.empty() ? 0 : *std::max_element(cell.begin(), cell.end()) + 1;
  }

  // Swapping u and v maps the edge set onto itself.
  bool twins(Vertex u, Vertex v) const {
    std::vector<Vertex> e(r_);
    for (Vertex a : {u, v}) {
      Vertex b = a == u ? v : u;
      for (std::size_t ei : incident_[a]) {
        auto edge = g_.edge(ei);
        if (std::find(edge.begin(), edge.end(), b) != edge.end()) continue;
        for (int i = 0; i < r_; ++i) e[i] = edge[i] == a ? b : edge[i];
        std::sort(e.begin(), e.end());
        if (!g_.has_edge(e)) return false;
      }
    }
    return true;
  }

  void search(const std::vector<int>& cell) {
    const int cells = count(cell);
    if (cells == n_) {
      std::vector<Vertex> label(cell.begin(), cell.end());
      auto h = g_.relabel(label);
      if (!best_flat_ || h.flat() < *best_flat_) {
        best_flat_ = h.flat();
        best_labeling_ = std::move(label);
      }
      return;
    }
    std::vector<int> size(cells, 0);
    for (int c : cell) ++size[c];
    int target = 0;
    while (size[target] == 1) ++target;
    std::vector<Vertex> tried;
    for (Vertex v = 0; v < n_; ++v) {
      if (cell[v] != target) continue;
      bool skip = false;
      for (Vertex u : tried)
        if (twins(u, v)) {
          skip = true;
          break;
        }
      if (skip) continue;
      tried.push_back(v);
      std::vector<int> next(n_);
      for (Vertex w = 0; w < n_; ++w) next[w] = cell[w] <= target ? cell[w] : cell[w] + 1;
      for (Vertex w = 0; w < n_; ++w)
        if (cell[w] == target && w != v) next[w] = target + 1;
      refine(next);
      search(next);
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const Hypergraph& g, const std::vector<int>& colour) {
  const int n = g.order();
  std::vector<int> cell(n, 0);
  if (!colour.empty()) {
    require(static_cast<int>(colour.size()) == n, "colour vector size must equal the order");
    std::vector<int> values(colour);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (Vertex v = 0; v < n; ++v)
      cell[v] = static_cast<int>(std::lower_bound(values.begin(), values.end(), colour[v]) - values.begin());
  }
  if (n == 0) return {g, {}};
  return Labeler(g).run(std::move(cell));
}

bool isomorphic(const Hypergraph& a, const Hypergraph& b) {
  if (a.uniformity() != b.uniformity() || a.order() != b.order() || a.size() != b.size())
    return false;
  return canonical_form(a).graph == canonical_form(b).graph;
}

}  // namespace xturan
