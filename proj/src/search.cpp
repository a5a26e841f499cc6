#include "xturan/search.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <map>
#include <stdexcept>
#include <unordered_set>

#include "xturan/canonical.hpp"
#include "xturan/constructions.hpp"
#include "xturan/matcher.hpp"
#include "xturan/random.hpp"
#include "xturan/sampling.hpp"

namespace xturan {

const char* to_string(Objective o) {
  switch (o) {
    case Objective::PNorm: return "both";
    case Objective::Left: return "left";
    case Objective::Right: return "right";
    case Objective::Edges: return "edges";
  }
  return "?";
}

namespace {

using Mask = unsigned __int128;

struct MaskHash {
  std::size_t operator()(Mask m) const {
    auto lo = static_cast<std::uint64_t>(m);
    auto hi = static_cast<std::uint64_t>(m >> 64);
    return std::hash<std::uint64_t>{}(lo ^ (hi * 0x9e3779b97f4a7c15ULL));
  }
};

// One search problem: hosts on n vertices whose edges come from `candidates`,
// objective sum of d^p over `counted` vertices.
struct Problem {
  int r = 2;
  int n = 0;
  std::vector<int> colour;  // preserved by canonical labelling; empty = none
  std::vector<int> host_side;
  std::vector<std::vector<Vertex>> candidates;
  const PatternSpec* spec = nullptr;  // nullptr: nothing forbidden
  std::vector<char> counted;
  double p = 1.0;
};

class Engine {
 public:
  explicit Engine(const Problem& problem) : pb_(problem) {
    require(pb_.candidates.size() <= 128, "too many potential edges for the exact search");
    for (std::size_t i = 0; i < pb_.candidates.size(); ++i) index_[pb_.candidates[i]] = static_cast<int>(i);
  }

  Mask encode(const Hypergraph& g) const {
    Mask m = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      auto e = g.edge(i);
      m |= Mask{1} << index_.at(std::vector<Vertex>(e.begin(), e.end()));
    }
    return m;
  }

  Hypergraph decode(Mask m) const {
    std::vector<std::vector<Vertex>> edges;
    for (std::size_t i = 0; i < pb_.candidates.size(); ++i)
      if ((m >> i) & 1) edges.push_back(pb_.candidates[i]);
    return Hypergraph(pb_.r, pb_.n, edges);
  }

  Mask canonical(const Hypergraph& g) const { return encode(canonical_form(g, pb_.colour).graph); }

  NormValue value(const std::vector<std::int64_t>& deg) const {
    std::vector<std::int64_t> picked;
    for (int v = 0; v < pb_.n; ++v)
      if (pb_.counted[v]) picked.push_back(deg[v]);
    return norm_of_degrees(picked, pb_.p);
  }

  // Adding edge `e` to g keeps the host free of the forbidden family.
  bool addable(const Hypergraph& g, std::span<const Vertex> e) const {
    if (!pb_.spec) return true;
    auto h = g.with_edge(e);
    Matcher matcher(h, pb_.host_side);
    const bool ordered = !pb_.host_side.empty() && pb_.spec->ordered();
    for (std::size_t i = 0; i < pb_.spec->members.size(); ++i) {
      std::span<const int> side;
      if (ordered) side = pb_.spec->sides[i];
      if (matcher.find_through_edge(pb_.spec->members[i], e, side)) return false;
    }
    return true;
  }

  struct Best {
    std::optional<NormValue> value;
    Hypergraph host;
  };

  // Level-wise augmentation. With `collect` every reachable canonical graph is
  // stored in `all` and nothing is pruned.
  Best run(std::uint64_t budget, std::uint64_t& nodes, std::vector<Hypergraph>* all,
           const std::function<Certificate(const Best&)>& partial) const {
    Best best;
    std::vector<Mask> level{canonical(Hypergraph(pb_.r, pb_.n))};
    while (!level.empty()) {
      std::sort(level.begin(), level.end());
      std::unordered_set<Mask, MaskHash> next;
      for (Mask m : level) {
        if (++nodes > budget)
          throw PartialResult("node budget exhausted after " + std::to_string(budget) + " nodes",
                              partial(best));
        auto g = decode(m);
        if (all) all->push_back(g);
        auto deg = g.degrees();
        auto v = value(deg);
        if (!best.value || compare(v, *best.value) > 0 ||
            (compare(v, *best.value) == 0 && g < best.host)) {
          best.value = v;
          best.host = g;
        }
        std::vector<std::size_t> add;
        for (std::size_t i = 0; i < pb_.candidates.size(); ++i)
          if (!((m >> i) & 1) && addable(g, pb_.candidates[i])) add.push_back(i);
        if (!all) {
          auto bound = deg;
          for (std::size_t i : add)
            for (Vertex w : pb_.candidates[i]) ++bound[w];
          if (compare(value(bound), *best.value) < 0) continue;
        }
        for (std::size_t i : add) next.insert(canonical(g.with_edge(pb_.candidates[i])));
      }
      level.assign(next.begin(), next.end());
    }
    return best;
  }

 private:
  const Problem& pb_;
  std::map<std::vector<Vertex>, int> index_;
};

std::vector<std::vector<Vertex>> all_r_subsets(int n, int r) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> e(r);
  std::function<void(int, Vertex)> rec = [&](int i, Vertex from) {
    if (i == r) {
      out.push_back(e);
      return;
    }
    for (Vertex v = from; v < n; ++v) {
      e[i] = v;
      rec(i + 1, v + 1);
    }
  };
  rec(0, 0);
  return out;
}

BipartiteGraph to_bipartite(const Hypergraph& g, int m) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < g.size(); ++i) {
    auto e = g.edge(i);
    edges.emplace_back(e[0], e[1] - m);
  }
  return BipartiteGraph(m, g.order() - m, std::move(edges));
}

}  // namespace

NormValue objective_value(const Certificate& cert) {
  if (auto* g = std::get_if<Hypergraph>(&cert.host)) return p_norm(*g, cert.p);
  const auto& b = std::get<BipartiteGraph>(cert.host);
  switch (cert.objective) {
    case Objective::Left: return p_norm(b, cert.p, Side::Left);
    case Objective::Right: return p_norm(b, cert.p, Side::Right);
    case Objective::Edges: return NormValue::from_integer(static_cast<Int128>(b.size()));
    case Objective::PNorm: return p_norm(b, cert.p, Side::Both);
  }
  return {};
}

void verify_certificate(const Certificate& cert, const PatternSpec& spec) {
  auto recomputed = objective_value(cert);
  if (compare(recomputed, cert.value) != 0)
    throw std::logic_error("certificate value does not match its host");
  bool free = std::visit([&](const auto& host) { return is_free(host, spec).free; }, cert.host);
  if (!free) throw std::logic_error("certificate host contains the forbidden pattern");
}

Certificate exact_max_pnorm(int n, const PatternSpec& spec, double p, const SearchLimits& limits) {
  validate(spec);
  require(p >= 1.0, "p must be at least 1");
  require(n >= 1, "n must be positive");
  const int r = spec.uniformity();
  if (limits.enforce_size_guard) {
    require(r != 2 || n <= 10, "exhaustive search on 2-graphs is limited to n <= 10");
    require(r == 2 || n <= 8, "exhaustive search on r-graphs (r >= 3) is limited to n <= 8");
  }
  Problem pb;
  pb.r = r;
  pb.n = n;
  pb.candidates = all_r_subsets(n, r);
  pb.spec = &spec;
  pb.counted.assign(n, 1);
  pb.p = p;
  Engine engine(pb);
  auto make = [&](const Engine::Best& best) {
    Certificate c;
    c.host = best.host;
    c.value = best.value.value_or(NormValue::from_integer(0));
    c.method = "exact";
    c.p = p;
    c.forbidden = spec.name;
    return c;
  };
  std::uint64_t nodes = 0;
  auto best = engine.run(limits.node_budget, nodes, nullptr,
                         [&](const Engine::Best& b) {
                           auto c = make(b);
                           c.method = "partial";
                           c.nodes = nodes;
                           return c;
                         });
  auto cert = make(best);
  cert.nodes = nodes;
  verify_certificate(cert, spec);
  return cert;
}

Certificate exact_zarankiewicz(int m, int n, const PatternSpec& spec, double p, Objective objective,
                               const SearchLimits& limits) {
  validate(spec);
  require(spec.uniformity() == 2, "Zarankiewicz problems need a 2-graph pattern");
  require(p >= 1.0, "p must be at least 1");
  require(m >= 1 && n >= 1, "both sides must be nonempty");
  require(objective != Objective::PNorm, "choose left, right or edges");
  if (limits.enforce_size_guard) require(m * n <= 25, "exhaustive Zarankiewicz search needs m*n <= 25");
  Problem pb;
  pb.n = m + n;
  pb.colour.assign(m + n, 1);
  std::fill(pb.colour.begin(), pb.colour.begin() + m, 0);
  pb.host_side = pb.colour;
  for (Vertex a = 0; a < m; ++a)
    for (Vertex b = 0; b < n; ++b) pb.candidates.push_back({a, static_cast<Vertex>(m + b)});
  pb.spec = &spec;
  pb.counted.assign(m + n, 0);
  if (objective == Objective::Right)
    std::fill(pb.counted.begin() + m, pb.counted.end(), 1);
  else
    std::fill(pb.counted.begin(), pb.counted.begin() + m, 1);
  pb.p = objective == Objective::Edges ? 1.0 : p;
  Engine engine(pb);
  auto make = [&](const Engine::Best& best) {
    Certificate c;
    c.host = to_bipartite(best.host.order() ? best.host : Hypergraph(2, m + n), m);
    c.value = best.value.value_or(NormValue::from_integer(0));
    c.method = "exact";
    c.p = pb.p;
    c.objective = objective;
    c.forbidden = spec.name;
    return c;
  };
  std::uint64_t nodes = 0;
  auto best = engine.run(limits.node_budget, nodes, nullptr, [&](const Engine::Best& b) {
    auto c = make(b);
    c.method = "partial";
    c.nodes = nodes;
    return c;
  });
  auto cert = make(best);
  cert.nodes = nodes;
  verify_certificate(cert, spec);
  return cert;
}

std::vector<Hypergraph> free_graphs(int n, const PatternSpec& spec) {
  validate(spec);
  Problem pb;
  pb.r = spec.uniformity();
  pb.n = n;
  pb.candidates = all_r_subsets(n, pb.r);
  pb.spec = &spec;
  pb.counted.assign(n, 1);
  Engine engine(pb);
  std::vector<Hypergraph> out;
  std::uint64_t nodes = 0;
  engine.run(UINT64_MAX, nodes, &out, [](const Engine::Best&) { return Certificate{}; });
  return out;
}

std::vector<Hypergraph> all_graphs(int n, int r) {
  Problem pb;
  pb.r = r;
  pb.n = n;
  pb.candidates = all_r_subsets(n, r);
  pb.counted.assign(n, 1);
  Engine engine(pb);
  std::vector<Hypergraph> out;
  std::uint64_t nodes = 0;
  engine.run(UINT64_MAX, nodes, &out, [](const Engine::Best&) { return Certificate{}; });
  return out;
}

namespace {

bool keeps_free(const Hypergraph& g, std::span<const Vertex> e, const PatternSpec& spec) {
  auto h = g.with_edge(e);
  Matcher matcher(h);
  for (const auto& f : spec.members)
    if (matcher.find_through_edge(f, e)) return false;
  return true;
}

// Polarity graph on the smallest prime q with q^2+q+1 >= n, trimmed to n
// vertices by repeatedly deleting a vertex of least degree.
std::optional<Hypergraph> trimmed_polarity(int n) {
  int q = 2;
  while (q * q + q + 1 < n || !is_prime(q)) ++q;
  auto g = polarity_graph(q);
  std::vector<Vertex> keep(g.order());
  std::iota(keep.begin(), keep.end(), 0);
  while (static_cast<int>(keep.size()) > n) {
    auto h = g.induced(keep);
    auto deg = h.degrees();
    auto it = std::min_element(deg.begin(), deg.end());
    keep.erase(keep.begin() + (it - deg.begin()));
  }
  return g.induced(keep);
}

}  // namespace

Certificate local_search_max_pnorm(int n, const PatternSpec& spec, double p,
                                   const LocalSearchOptions& options) {
  validate(spec);
  require(options.budget >= 1, "budget must be at least 1");
  require(p >= 1.0, "p must be at least 1");
  require(n >= 1, "n must be positive");
  const int r = spec.uniformity();

  std::vector<Hypergraph> inits{Hypergraph(r, n)};
  if (options.init) {
    const auto* h = std::get_if<Hypergraph>(&options.init->host);
    require(h && h->order() == n && h->uniformity() == r, "initial host has the wrong shape");
    require(is_free(*h, spec).free, "initial host contains the forbidden pattern");
    inits.push_back(*h);
  }
  if (auto tau = family_tau(spec); tau.tau_ind >= 2 && tau.tau_ind - 1 < n && r <= n - tau.tau_ind + 2) {
    auto star = star_like(n, tau.tau_ind - 1, r);
    if (is_free(star, spec).free) inits.push_back(star);
  }
  if (spec.pattern().size() >= 2) {
    auto g = random_deletion(n, spec, 1.0, deletion_exponent(spec.pattern()), derive_seed(options.seed, 0));
    inits.push_back(g);
  }
  if (r == 2 && spec.members.size() == 1 && isomorphic(spec.pattern(), cycle_graph(4)))
    inits.push_back(*trimmed_polarity(n));

  auto better = [](const NormValue& a, const Hypergraph& ga, const NormValue& b, const Hypergraph& gb) {
    int c = compare(a, b);
    return c > 0 || (c == 0 && ga < gb);
  };
  Hypergraph best = inits.front();
  NormValue best_value = p_norm(best, p);
  std::uint64_t since = 0;

  // The budget is split evenly over the initialisations; each gets its own climb.
  const std::uint64_t share = std::max<std::uint64_t>(1, options.budget / inits.size());
  for (std::size_t start = 0; start < inits.size(); ++start) {
    Rng rng(derive_seed(options.seed, start + 1));
    Hypergraph current = inits[start];
    NormValue current_value = p_norm(current, p);
    if (better(current_value, current, best_value, best)) {
      best = current;
      best_value = current_value;
      since = 0;
    }
    auto random_non_edge = [&](const Hypergraph& g) -> std::optional<std::vector<Vertex>> {
      auto deg = g.degrees();
      std::int64_t total = 0;
      for (auto d : deg) total += d + 1;
      for (int attempt = 0; attempt < 64; ++attempt) {
        // first vertex biased towards high degree
        auto pick = static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(total)));
        Vertex u = 0;
        while (pick >= deg[u] + 1) pick -= deg[u++] + 1;
        std::vector<Vertex> e{u};
        while (static_cast<int>(e.size()) < r) {
          auto v = static_cast<Vertex>(uniform_below(rng, n));
          if (std::find(e.begin(), e.end(), v) == e.end()) e.push_back(v);
        }
        std::sort(e.begin(), e.end());
        if (!g.has_edge(e)) return e;
      }
      return std::nullopt;
    };
    for (std::uint64_t move = 0; move < share && n >= r; ++move) {
      ++since;
      auto e = random_non_edge(current);
      if (!e) continue;
      Hypergraph candidate;
      if (uniform_below(rng, 2) == 0 || current.empty()) {
        if (!keeps_free(current, *e, spec)) continue;
        candidate = current.with_edge(*e);
      } else {
        auto base = current.without_edge(uniform_below(rng, current.size()));
        if (!keeps_free(base, *e, spec)) continue;
        candidate = base.with_edge(*e);
      }
      auto v = p_norm(candidate, p);
      if (compare(v, current_value) < 0) continue;  // plateau moves are allowed
      current = std::move(candidate);
      current_value = v;
      if (better(current_value, current, best_value, best)) {
        if (compare(current_value, best_value) > 0) since = 0;
        best = current;
        best_value = current_value;
      }
    }
  }

  Certificate cert;
  cert.host = best;
  cert.value = best_value;
  cert.method = "heuristic";
  cert.p = p;
  cert.forbidden = spec.name;
  cert.seed = options.seed;
  cert.nodes = options.budget;
  cert.stagnation = since;
  verify_certificate(cert, spec);
  return cert;
}

}  // namespace xturan
