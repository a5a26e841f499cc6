#include "xturan/patterns.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <functional>
#include <numeric>

#include "xturan/io.hpp"
#include "xturan/matcher.hpp"
#include "xturan/norms.hpp"

namespace xturan {

void validate(const PatternSpec& spec) {
  require(!spec.members.empty(), "pattern family is empty");
  const int r = spec.members.front().uniformity();
  for (const auto& f : spec.members)
    require(f.uniformity() == r, "family members have different uniformities");
  if (spec.sides.empty()) return;
  require(spec.sides.size() == spec.members.size(), "one side vector per member is required");
  for (std::size_t i = 0; i < spec.members.size(); ++i) {
    const auto& f = spec.members[i];
    const auto& side = spec.sides[i];
    require(f.uniformity() == 2, "ordered patterns must be 2-graphs");
    require(static_cast<int>(side.size()) == f.order(), "side vector does not cover the pattern");
    for (int s : side) require(s == 0 || s == 1, "sides must be 0 or 1");
    for (std::size_t e = 0; e < f.size(); ++e) {
      auto edge = f.edge(e);
      require(side[edge[0]] != side[edge[1]], "an edge of the ordered pattern does not cross");
    }
  }
}

PatternSpec single_pattern(std::string name, Hypergraph f, std::vector<int> sides) {
  PatternSpec spec;
  spec.name = std::move(name);
  spec.members.push_back(std::move(f));
  if (!sides.empty()) spec.sides.push_back(std::move(sides));
  validate(spec);
  return spec;
}

FreenessWitness is_free(const Hypergraph& host, const PatternSpec& spec) {
  validate(spec);
  require(spec.uniformity() == host.uniformity(), "pattern and host uniformity differ");
  Matcher matcher(host);
  for (std::size_t i = 0; i < spec.members.size(); ++i) {
    if (auto m = matcher.find(spec.members[i])) return {false, std::move(m), static_cast<int>(i)};
  }
  return {};
}

FreenessWitness is_free(const BipartiteGraph& host, const PatternSpec& spec) {
  validate(spec);
  require(spec.uniformity() == 2, "pattern and host uniformity differ");
  auto g = host.to_graph();
  if (!spec.ordered()) return is_free(g, spec);
  std::vector<int> host_side(g.order(), 1);
  std::fill(host_side.begin(), host_side.begin() + host.left_size(), 0);
  Matcher matcher(g, host_side);
  for (std::size_t i = 0; i < spec.members.size(); ++i) {
    if (auto m = matcher.find(spec.members[i], spec.sides[i]))
      return {false, std::move(m), static_cast<int>(i)};
  }
  return {};
}

namespace {

// Lexicographic k-subsets of {0..n-1}; stops when `visit` returns true.
bool for_each_subset(int n, int k, const std::function<bool(const std::vector<Vertex>&)>& visit) {
  std::vector<Vertex> s(k);
  std::iota(s.begin(), s.end(), 0);
  if (k > n) return false;
  while (true) {
    if (visit(s)) return true;
    int i = k - 1;
    while (i >= 0 && s[i] == n - k + i) --i;
    if (i < 0) return false;
    ++s[i];
    for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

bool meets_every_edge_once(const Hypergraph& f, const std::vector<char>& in_s) {
  for (std::size_t e = 0; e < f.size(); ++e) {
    int hits = 0;
    for (Vertex v : f.edge(e)) hits += in_s[v];
    if (hits != 1) return false;
  }
  return true;
}

// Colours V \ S with parts 1..r-1 so that each edge's remaining r-1 vertices
// get distinct parts. Returns the assignment or empty.
std::vector<int> rainbow_colouring(const Hypergraph& f, const std::vector<char>& in_s) {
  const int n = f.order();
  const int r = f.uniformity();
  std::vector<int> part(n, -1);
  for (Vertex v = 0; v < n; ++v)
    if (in_s[v]) part[v] = 0;
  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t e = 0; e < f.size(); ++e)
    for (Vertex v : f.edge(e)) incident[v].push_back(e);
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < n; ++v)
    if (!in_s[v]) rest.push_back(v);
  std::function<bool(std::size_t)> rec = [&](std::size_t i) {
    if (i == rest.size()) return true;
    Vertex v = rest[i];
    for (int c = 1; c < r; ++c) {
      bool ok = true;
      for (std::size_t e : incident[v]) {
        for (Vertex w : f.edge(e))
          if (w != v && part[w] == c) ok = false;
        if (!ok) break;
      }
      if (!ok) continue;
      part[v] = c;
      if (rec(i + 1)) return true;
      part[v] = -1;
    }
    return false;
  };
  if (!rec(0)) return {};
  return part;
}

}  // namespace

TauValues tau_values(const Hypergraph& f) {
  TauValues out;
  const int n = f.order();
  std::vector<char> in_s(n);
  for (int k = 0; k <= n && !out.tau_part; ++k) {
    for_each_subset(n, k, [&](const std::vector<Vertex>& s) {
      std::fill(in_s.begin(), in_s.end(), 0);
      for (Vertex v : s) in_s[v] = 1;
      if (!meets_every_edge_once(f, in_s)) return false;
      if (!out.tau_ind) {
        out.tau_ind = k;
        out.ind_witness = s;
      }
      auto part = rainbow_colouring(f, in_s);
      if (part.empty()) return false;
      out.tau_part = k;
      out.part_witness = std::move(part);
      return true;
    });
  }
  return out;
}

FamilyTau family_tau(const PatternSpec& spec) {
  validate(spec);
  FamilyTau out;
  bool any = false;
  for (std::size_t i = 0; i < spec.members.size(); ++i) {
    auto tau = (spec.members.size() == 1 && spec.tau_cache) ? *spec.tau_cache
                                                            : tau_values(spec.members[i]);
    if (!tau.tau_part) {
      out.warnings.push_back("member " + std::to_string(i) + " is not r-partite; skipped");
      continue;
    }
    if (!any || *tau.tau_part < out.tau_part) out.tau_part = *tau.tau_part;
    if (!any || *tau.tau_ind < out.tau_ind) out.tau_ind = *tau.tau_ind;
    any = true;
  }
  if (!any) fail(ErrorKind::NotDegenerate, "no member of the family is r-partite");
  return out;
}

Int128 binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  k = std::min(k, n - k);
  Int128 out = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    if (out > (Int128(1) << 100) / (n - k + i)) fail(ErrorKind::Overflow, "binomial overflow");
    out = out * (n - k + i) / i;
  }
  return out;
}

Int128 book_count(const Hypergraph& g, int t, int r, int pages) {
  require(g.uniformity() == 2, "book counts need a 2-graph");
  require(t >= 0 && r > t, "book parameters must satisfy r > t >= 0");
  require(pages >= 1, "pages must be at least 1");
  Int128 total = 0;
  for (const auto& [s, d] : clique_extension_counts(g, t, r)) total += binomial(d, pages);
  return total;
}

bool is_s_bounded(const Hypergraph& f, const std::vector<int>& sides, int s) {
  auto deg = f.degrees();
  for (Vertex v = 0; v < f.order(); ++v)
    if (sides[v] == 1 && deg[v] > s) return false;
  return true;
}

Hypergraph cycle_graph(int k) {
  require(k >= 3, "cycles need at least 3 vertices");
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
  return Hypergraph::graph(k, e);
}

Hypergraph path_graph(int k) {
  require(k >= 1, "paths need at least 1 vertex");
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
  return Hypergraph::graph(k, e);
}

Hypergraph complete_graph(int k) {
  require(k >= 1, "complete graphs need at least 1 vertex");
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) e.emplace_back(a, b);
  return Hypergraph::graph(k, e);
}

Hypergraph complete_partite(const std::vector<int>& sizes) {
  const int r = static_cast<int>(sizes.size());
  require(r >= 2, "complete partite graphs need at least 2 parts");
  std::vector<int> start(r + 1, 0);
  for (int i = 0; i < r; ++i) {
    require(sizes[i] >= 1, "part sizes must be positive");
    start[i + 1] = start[i] + sizes[i];
  }
  std::vector<std::vector<Vertex>> edges;
  std::vector<Vertex> e(r);
  std::function<void(int)> rec = [&](int i) {
    if (i == r) {
      edges.push_back(e);
      return;
    }
    for (Vertex v = start[i]; v < start[i + 1]; ++v) {
      e[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return Hypergraph(r, start[r], edges);
}

namespace {

std::optional<int> parse_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

std::optional<std::vector<int>> parse_int_list(std::string_view s) {
  std::vector<int> out;
  while (true) {
    auto comma = s.find(',');
    auto v = parse_int(s.substr(0, comma));
    if (!v) return std::nullopt;
    out.push_back(*v);
    if (comma == std::string_view::npos) return out;
    s.remove_prefix(comma + 1);
  }
}

std::vector<int> parity_sides(int k) {
  std::vector<int> s(k);
  for (int i = 0; i < k; ++i) s[i] = i % 2;
  return s;
}

Hypergraph tau_gap_3graph() {
  // a, b, c = 0, 1, 2; a_i = 3..5; b_i = 6..8; c_i = 9..11
  std::vector<std::vector<Vertex>> edges;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      edges.push_back({0, 6 + i, 9 + j});
      edges.push_back({3 + i, 1, 9 + j});
      edges.push_back({3 + i, 6 + j, 2});
    }
  return Hypergraph(3, 12, edges);
}

}  // namespace

std::optional<PatternSpec> registry_pattern(const std::string& name) {
  std::string_view s = name;
  if (name == "tau-gap-3graph") return single_pattern(name, tau_gap_3graph());
  if (s.starts_with("C<=")) {
    auto len = parse_int(s.substr(3));
    if (!len) return std::nullopt;
    require(*len >= 4 && *len % 2 == 0, "C<=2l needs an even bound of at least 4");
    PatternSpec spec;
    spec.name = name;
    for (int k = 4; k <= *len; k += 2) {
      spec.members.push_back(cycle_graph(k));
      spec.sides.push_back(parity_sides(k));
    }
    validate(spec);
    return spec;
  }
  if (s.starts_with("K^")) {
    auto underscore = s.find('_');
    if (underscore == std::string_view::npos) return std::nullopt;
    auto r = parse_int(s.substr(2, underscore - 2));
    auto sizes = parse_int_list(s.substr(underscore + 1));
    if (!r || !sizes) return std::nullopt;
    require(static_cast<int>(sizes->size()) == *r, "K^r needs exactly r part sizes");
    auto f = complete_partite(*sizes);
    std::vector<int> sides;
    if (*r == 2) {
      sides.assign(f.order(), 1);
      std::fill(sides.begin(), sides.begin() + (*sizes)[0], 0);
    }
    return single_pattern(name, f, sides);
  }
  if (s.starts_with("C")) {
    auto k = parse_int(s.substr(1));
    if (!k) return std::nullopt;
    return single_pattern(name, cycle_graph(*k), *k % 2 == 0 ? parity_sides(*k) : std::vector<int>{});
  }
  if (s.starts_with("P")) {
    auto k = parse_int(s.substr(1));
    if (!k) return std::nullopt;
    require(*k >= 2, "P{k} needs at least 2 vertices");
    return single_pattern(name, path_graph(*k), parity_sides(*k));
  }
  if (s.starts_with("K")) {
    auto list = parse_int_list(s.substr(1));
    if (!list) return std::nullopt;
    if (list->size() == 1) {
      int k = list->front();
      require(k >= 2, "K{s} needs at least 2 vertices");
      return single_pattern(name, complete_graph(k), k == 2 ? std::vector<int>{0, 1} : std::vector<int>{});
    }
    require(list->size() == 2, "K{s},{t} takes two part sizes");
    auto f = complete_partite(*list);
    std::vector<int> sides(f.order(), 1);
    std::fill(sides.begin(), sides.begin() + (*list)[0], 0);
    return single_pattern(name, f, sides);
  }
  return std::nullopt;
}

PatternSpec resolve_pattern(const std::string& name_or_path) {
  if (auto spec = registry_pattern(name_or_path)) return *spec;
  if (!std::filesystem::exists(name_or_path))
    fail(ErrorKind::InvalidParameter, "unknown pattern '" + name_or_path + "'");
  auto any = io::read_file(name_or_path);
  if (auto* b = std::get_if<BipartiteGraph>(&any)) {
    std::vector<int> sides(b->left_size() + b->right_size(), 1);
    std::fill(sides.begin(), sides.begin() + b->left_size(), 0);
    return single_pattern(name_or_path, b->to_graph(), sides);
  }
  return single_pattern(name_or_path, std::get<Hypergraph>(any));
}

}  // namespace xturan
