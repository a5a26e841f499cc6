#include "xturan/constructions.hpp"

#include <algorithm>
#include <array>
#include <type_traits>
#include <cmath>
#include <functional>
#include <numeric>

#include "xturan/matcher.hpp"
#include "xturan/random.hpp"

namespace xturan {

NormValue predicted_pnorm(const std::vector<DegreeClass>& classes, double p) {
  std::vector<std::int64_t> degrees;
  for (const auto& c : classes)
    for (std::int64_t i = 0; i < c.count; ++i) degrees.push_back(c.degree);
  return norm_of_degrees(degrees, p);
}

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

Hypergraph star_like(int n, int t, int r) {
  require(r >= 2, "r must be at least 2");
  require(t >= 1 && t < n, "star_like needs 1 <= t < n");
  require(r <= n - t + 1, "star_like needs r <= n - t + 1");
  std::vector<std::vector<Vertex>> edges;
  std::vector<Vertex> rest(r - 1);
  std::function<void(Vertex, int)> rec = [&](Vertex centre, int i) {
    if (i == r - 1) {
      std::vector<Vertex> e{centre};
      e.insert(e.end(), rest.begin(), rest.end());
      edges.push_back(std::move(e));
      return;
    }
    Vertex from = i == 0 ? t : rest[i - 1] + 1;
    for (Vertex v = from; v < n; ++v) {
      rest[i] = v;
      rec(centre, i + 1);
    }
  };
  for (Vertex centre = 0; centre < t; ++centre) rec(centre, 0);
  return Hypergraph(r, n, edges);
}

Hypergraph polarity_graph(int q) {
  if (!is_prime(q)) fail(ErrorKind::Unsupported, "polarity graphs need a prime q");
  // projective points: first nonzero coordinate equal to 1
  std::vector<std::array<int, 3>> points;
  for (int b = 0; b < q; ++b)
    for (int c = 0; c < q; ++c) points.push_back({1, b, c});
  for (int c = 0; c < q; ++c) points.push_back({0, 1, c});
  points.push_back({0, 0, 1});
  const int n = static_cast<int>(points.size());
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const auto& x = points[i];
      const auto& y = points[j];
      if ((x[0] * y[0] + x[1] * y[1] + x[2] * y[2]) % q == 0) edges.emplace_back(i, j);
    }
  return Hypergraph::graph(n, edges);
}

double deletion_exponent(const Hypergraph& f) {
  const double v = f.order();
  const double e = static_cast<double>(f.size());
  require(e >= 2, "the deletion exponent needs a pattern with at least 2 edges");
  return (v - f.uniformity()) / (e - 1);
}

Hypergraph random_deletion(int n, const PatternSpec& spec, double c, double theta,
                           std::uint64_t seed, std::size_t* deleted) {
  require(n >= 1, "n must be positive");
  require(c > 0, "c must be positive");
  const int r = spec.uniformity();
  const double prob = std::min(1.0, c * std::pow(static_cast<double>(n), -theta));
  Rng rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::vector<Vertex>> edges;
  std::vector<Vertex> e(r);
  std::function<void(int, Vertex)> rec = [&](int i, Vertex from) {
    if (i == r) {
      if (unit(rng) < prob) edges.push_back(e);
      return;
    }
    for (Vertex v = from; v < n; ++v) {
      e[i] = v;
      rec(i + 1, v + 1);
    }
  };
  rec(0, 0);
  Hypergraph g(r, n, edges);
  std::size_t removed = 0;
  while (true) {
    Matcher matcher(g);
    std::optional<std::vector<Vertex>> copy;
    int member = 0;
    for (std::size_t i = 0; i < spec.members.size() && !copy; ++i) {
      copy = matcher.find(spec.members[i]);
      member = static_cast<int>(i);
    }
    if (!copy) break;
    // delete the image of the pattern's first edge
    auto pe = spec.members[member].edge(0);
    std::vector<Vertex> img;
    for (Vertex x : pe) img.push_back((*copy)[x]);
    std::sort(img.begin(), img.end());
    const auto& flat = g.flat();
    std::size_t idx = 0;
    for (; idx < g.size(); ++idx)
      if (std::equal(img.begin(), img.end(), flat.begin() + idx * r)) break;
    g = g.without_edge(idx);
    ++removed;
  }
  if (deleted) *deleted = removed;
  return g;
}

ConstructionReport construct(const std::string& kind, const ConstructionParams& p) {
  ConstructionReport out;
  out.kind = kind;
  auto param = [&](const std::string& k, auto v) {
    if constexpr (std::is_same_v<decltype(v), std::string>)
      out.params.emplace_back(k, v);
    else
      out.params.emplace_back(k, std::to_string(v));
  };
  std::optional<PatternSpec> natural;
  if (kind == "star_like") {
    param("n", p.n), param("t", p.t), param("r", p.r);
    out.graph = star_like(p.n, p.t, p.r);
    std::int64_t centre = static_cast<std::int64_t>(binomial(p.n - p.t, p.r - 1));
    std::int64_t leaf = p.t * static_cast<std::int64_t>(binomial(p.n - p.t - 1, p.r - 2));
    out.predicted_classes = {{centre, p.t}, {leaf, p.n - p.t}};
  } else if (kind == "complete_r_partite") {
    std::string sizes;
    for (int s : p.sizes) sizes += (sizes.empty() ? "" : ",") + std::to_string(s);
    param("sizes", sizes);
    out.graph = complete_partite(p.sizes);
    std::vector<DegreeClass> classes;
    for (std::size_t i = 0; i < p.sizes.size(); ++i) {
      std::int64_t d = 1;
      for (std::size_t j = 0; j < p.sizes.size(); ++j)
        if (j != i) d *= p.sizes[j];
      classes.push_back({d, p.sizes[i]});
    }
    out.predicted_classes = classes;
  } else if (kind == "cycle") {
    param("n", p.n);
    out.graph = cycle_graph(p.n);
    out.predicted_classes = {{2, p.n}};
  } else if (kind == "path") {
    param("n", p.n);
    out.graph = path_graph(p.n);
    if (p.n == 1)
      out.predicted_classes = {{0, 1}};
    else
      out.predicted_classes = {{1, 2}, {2, p.n - 2}};
  } else if (kind == "polarity") {
    param("q", p.q);
    out.graph = polarity_graph(p.q);
    out.predicted_classes = {{p.q, p.q + 1}, {p.q + 1, static_cast<std::int64_t>(p.q) * p.q}};
    natural = resolve_pattern("C4");
  } else if (kind == "random_deletion") {
    require(!p.pattern.empty(), "random_deletion needs a target pattern");
    auto spec = resolve_pattern(p.pattern);
    out.theta = p.theta ? *p.theta : deletion_exponent(spec.pattern());
    param("n", p.n), param("pattern", p.pattern), param("c", p.c), param("theta", out.theta),
        param("seed", p.seed);
    out.graph = random_deletion(p.n, spec, p.c, out.theta, p.seed, &out.deleted);
    natural = spec;
  } else {
    fail(ErrorKind::InvalidParameter, "unknown construction kind '" + kind + "'");
  }
  if (p.check && natural) {
    out.checked = is_free(out.graph, *natural);
    out.checked_against = natural->name;
  }
  return out;
}

double fact11_lower_bound(int n, int r, double p, int tau_ind, double ex_n) {
  require(p >= 1.0, "p must be at least 1");
  require(n >= 1 && r >= 2, "need n >= 1 and r >= 2");
  require(ex_n >= 0, "ex(n,F) must be nonnegative");
  require(tau_ind >= 1, "tau_ind must be at least 1");
  const double convexity = n * std::pow(r * ex_n / n, p);
  double star = 0.0;
  if (tau_ind > 1 && n - tau_ind + 1 >= r - 1)
    star = (tau_ind - 1) * std::pow(static_cast<double>(binomial(n - tau_ind + 1, r - 1)), p);
  return std::max(convexity, star);
}

}  // namespace xturan
