// xturan: command-line front end.
//
// Exit codes: 0 ok, 1 usage, 2 validation, 3 budget exhausted / partial result.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "criteria.hpp"
#include "json.hpp"
#include "xturan/bounds.hpp"
#include "xturan/constructions.hpp"
#include "xturan/drc.hpp"
#include "xturan/io.hpp"
#include "xturan/norms.hpp"
#include "xturan/patterns.hpp"
#include "xturan/regularization.hpp"
#include "xturan/search.hpp"

using json = nlohmann::ordered_json;
using namespace xturan;

namespace {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Output {
  json body = json::object();
  std::optional<Table> table;
  int exit = 0;
};

// Settings shared by every command.
struct Common {
  std::string format = "json";
  std::string output;
  std::string config;
  std::uint64_t seed = 0;
};

json int128(Int128 v) {
  if (v >= INT64_MIN && v <= INT64_MAX) return static_cast<std::int64_t>(v);
  return xturan::to_string(v);
}

json norm_json(const NormValue& v) {
  if (v.integer) return int128(*v.integer);
  return v.value;
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

json graph_json(const Hypergraph& g) {
  json j;
  j["r"] = g.uniformity();
  j["n"] = g.order();
  j["m"] = g.size();
  if (g.uniformity() == 2) {
    j["graph6"] = io::to_graph6(g);
  } else {
    j["hypergraph"] = io::to_hypergraph_text(g);
  }
  return j;
}

json graph_json(const BipartiteGraph& g) {
  json j;
  j["left"] = g.left_size();
  j["right"] = g.right_size();
  j["n"] = g.left_size() + g.right_size();
  j["m"] = g.size();
  j["bipartite"] = io::to_bipartite_text(g);
  return j;
}

json certificate_json(const Certificate& c) {
  json j;
  j["value"] = norm_json(c.value);
  j["method"] = c.method;
  j["p"] = c.p;
  j["objective"] = to_string(c.objective);
  j["forbidden"] = c.forbidden;
  j["nodes"] = c.nodes;
  if (c.method == "heuristic") j["stagnation"] = c.stagnation;
  j["host"] = std::visit([](const auto& g) { return graph_json(g); }, c.host);
  return j;
}

Hypergraph read_hypergraph(const std::string& path) {
  auto g = io::read_file(path);
  if (auto* b = std::get_if<BipartiteGraph>(&g)) return b->to_graph();
  return std::get<Hypergraph>(g);
}

BipartiteGraph read_bipartite(const std::string& path) {
  auto g = io::read_file(path);
  if (auto* b = std::get_if<BipartiteGraph>(&g)) return *b;
  fail(ErrorKind::InvalidInput, path + " is not in the bipartite format (\"B m n e\" header)");
}

json vertices_json(const std::vector<Vertex>& v) { return json(v); }

// --- commands --------------------------------------------------------------

struct NormArgs {
  std::string input;
  double p = 1;
  std::string side = "both";
};

Output cmd_norm(const NormArgs& a) {
  Output out;
  auto g = io::read_file(a.input);
  NormValue v;
  if (auto* b = std::get_if<BipartiteGraph>(&g)) {
    Side side = a.side == "left" ? Side::Left : a.side == "right" ? Side::Right : Side::Both;
    v = p_norm(*b, a.p, side);
    out.body["side"] = a.side;
    out.body["n"] = b->left_size() + b->right_size();
    out.body["m"] = b->size();
  } else {
    const auto& h = std::get<Hypergraph>(g);
    v = p_norm(h, a.p);
    out.body["r"] = h.uniformity();
    out.body["n"] = h.order();
    out.body["m"] = h.size();
  }
  out.body["p"] = a.p;
  out.body["value"] = norm_json(v);
  out.body["exact"] = v.exact;
  return out;
}

struct TpArgs {
  std::string input;
  int t = 1;
  double p = 1;
  int r = 0;
};

Output cmd_tpnorm(const TpArgs& a) {
  Output out;
  auto g = read_hypergraph(a.input);
  out.body["t"] = a.t;
  out.body["p"] = a.p;
  if (a.r > 0) {
    out.body["r"] = a.r;
    out.body["kind"] = "(t,r,p)";
    out.body["value"] = norm_json(trp_norm(g, a.t, a.r, a.p));
  } else {
    out.body["kind"] = "(t,p)";
    out.body["value"] = norm_json(tp_norm(g, a.t, a.p));
  }
  return out;
}

struct WalkArgs {
  std::string input;
  int k = 1;
};

Output cmd_walks(const WalkArgs& a) {
  Output out;
  auto g = read_hypergraph(a.input);
  out.body["k"] = a.k;
  out.body["walks"] = walk_count(g, a.k);
  return out;
}

Output cmd_tau(const std::string& pattern) {
  Output out;
  auto spec = resolve_pattern(pattern);
  out.body["pattern"] = spec.name;
  if (spec.members.size() == 1) {
    auto t = tau_values(spec.pattern());
    out.body["tau_part"] = t.tau_part ? json(*t.tau_part) : json(nullptr);
    out.body["tau_ind"] = t.tau_ind ? json(*t.tau_ind) : json(nullptr);
    out.body["ind_witness"] = vertices_json(t.ind_witness);
    out.body["part_witness"] = t.part_witness;
  } else {
    auto t = family_tau(spec);
    out.body["tau_part"] = t.tau_part;
    out.body["tau_ind"] = t.tau_ind;
    out.body["warnings"] = t.warnings;
  }
  return out;
}

struct FreeArgs {
  std::string input;
  std::string pattern;
};

Output cmd_free(const FreeArgs& a) {
  Output out;
  auto spec = resolve_pattern(a.pattern);
  auto g = io::read_file(a.input);
  auto w = std::visit([&](const auto& h) { return is_free(h, spec); }, g);
  out.body["pattern"] = spec.name;
  out.body["free"] = w.free;
  if (w.embedding) {
    out.body["member"] = w.member;
    out.body["embedding"] = *w.embedding;
  }
  return out;
}

struct ConstructArgs {
  std::string kind;
  ConstructionParams params;
  std::string sizes;
  double theta = -1;
  std::vector<double> p;
  std::string save;
};

std::vector<int> int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      fail(ErrorKind::InvalidParameter, "bad integer list '" + text + "'");
    }
  }
  return out;
}

Output cmd_construct(ConstructArgs a) {
  Output out;
  if (!a.sizes.empty()) a.params.sizes = int_list(a.sizes);
  if (a.theta >= 0) a.params.theta = a.theta;
  auto report = construct(a.kind, a.params);
  out.body["kind"] = report.kind;
  json params = json::object();
  for (auto& [k, v] : report.params) params[k] = v;
  out.body["params"] = params;
  out.body["graph"] = graph_json(report.graph);
  if (report.checked) {
    out.body["checked_against"] = report.checked_against;
    out.body["free"] = report.checked->free;
  }
  if (report.kind == "random_deletion") {
    out.body["theta"] = report.theta;
    out.body["deleted"] = report.deleted;
  }
  json norms = json::array();
  for (double p : a.p) {
    json row;
    row["p"] = p;
    row["value"] = norm_json(p_norm(report.graph, p));
    if (report.predicted_classes) row["predicted"] = norm_json(predicted_pnorm(*report.predicted_classes, p));
    norms.push_back(row);
  }
  if (!a.p.empty()) out.body["norms"] = norms;
  if (!a.save.empty()) {
    io::write_text(a.save, report.graph.uniformity() == 2 ? io::to_graph6(report.graph) + "\n"
                                                           : io::to_hypergraph_text(report.graph));
    out.body["saved"] = a.save;
  }
  return out;
}

struct SearchArgs {
  int n = 0;
  int m = 0;
  std::string pattern;
  double p = 1;
  std::uint64_t budget = 0;
  std::string objective = "edges";
  std::string init;
  bool no_guard = false;
};

Output with_partial(const std::function<Certificate()>& run) {
  Output out;
  try {
    out.body["certificate"] = certificate_json(run());
    out.body["partial"] = false;
  } catch (const PartialResult& e) {
    out.body["certificate"] = certificate_json(e.best());
    out.body["partial"] = true;
    out.body["reason"] = e.what();
    out.exit = 3;
  }
  return out;
}

Output cmd_search_exact(const SearchArgs& a) {
  auto spec = resolve_pattern(a.pattern);
  SearchLimits limits;
  if (a.budget) limits.node_budget = a.budget;
  limits.enforce_size_guard = !a.no_guard;
  return with_partial([&] { return exact_max_pnorm(a.n, spec, a.p, limits); });
}

Output cmd_search_local(const SearchArgs& a, std::uint64_t seed) {
  auto spec = resolve_pattern(a.pattern);
  LocalSearchOptions options;
  if (a.budget) options.budget = a.budget;
  options.seed = seed;
  if (!a.init.empty()) {
    Certificate c;
    c.host = read_hypergraph(a.init).padded(a.n);
    options.init = c;
  }
  return with_partial([&] { return local_search_max_pnorm(a.n, spec, a.p, options); });
}

Objective parse_objective(const std::string& s) {
  if (s == "edges") return Objective::Edges;
  if (s == "left") return Objective::Left;
  if (s == "right") return Objective::Right;
  if (s == "both") return Objective::PNorm;
  fail(ErrorKind::InvalidParameter, "objective must be edges, left, right or both");
}

Output cmd_zarankiewicz(const SearchArgs& a) {
  auto spec = resolve_pattern(a.pattern);
  SearchLimits limits;
  if (a.budget) limits.node_budget = a.budget;
  limits.enforce_size_guard = !a.no_guard;
  return with_partial([&] { return exact_zarankiewicz(a.m, a.n, spec, a.p, parse_objective(a.objective), limits); });
}

struct RegArgs {
  std::string input;
  int r = 0;
  double alpha = 0.5;
  double beta = 0.5;
  double p = 1;
  double eps = 0.5;
  double k = 0;
  int trials = 16;
  int max_steps = 64;
  int n1 = 8;
  double c = 0;
};

json constants_json(const RegularizationConstants& c) {
  json j;
  j["r"] = c.r;
  j["alpha"] = c.alpha;
  j["p"] = c.p;
  j["eps"] = c.eps;
  j["delta"] = c.delta;
  j["eps1"] = c.eps1;
  j["log2_K"] = c.log2_k;
  j["K"] = c.k;
  j["K_overridden"] = c.overridden;
  j["certified"] = c.certified();
  j["eps1_residual"] = c.eps1_residual;
  return j;
}

json trace_json(const RegularizationTrace& t) {
  json j;
  j["constants"] = constants_json(t.constants);
  j["C"] = t.c;
  j["precondition_warning"] = t.precondition_warning;
  json steps = json::array();
  for (auto& s : t.steps) {
    json row;
    row["i"] = s.i;
    row["vertices"] = s.vertices;
    row["norm"] = s.norm;
    row["phi"] = s.phi;
    row["heavy"] = s.heavy;
    row["heavy_mass"] = s.heavy_mass;
    row["taken"] = s.taken;
    if (s.taken || s.attempts) {
      row["attempts"] = s.attempts;
      row["next_vertices"] = s.next_vertices;
      row["next_phi"] = s.next_phi;
      row["growth_ok"] = s.growth_ok;
      row["sandwich_ok"] = s.sandwich_ok;
      row["expectation"] = s.expectation;
    }
    steps.push_back(row);
  }
  j["steps"] = steps;
  j["k"] = t.k;
  j["stop_reason"] = t.stop_reason;
  j["gk_order"] = t.gk_vertices.size();
  j["h_vertices"] = t.h_vertices;
  j["gk_norm"] = t.gk_norm;
  j["h_norm"] = t.h_norm;
  j["h_max_degree"] = t.h_max_degree;
  j["delta_ok"] = t.delta_ok;
  j["norm_ok"] = t.norm_ok;
  j["steps_ok"] = t.steps_ok;
  j["informational"] = {{"conclusion_i", t.conclusion_i},
                        {"conclusion_ii", t.conclusion_ii},
                        {"conclusion_iv", t.conclusion_iv}};
  return j;
}

Output cmd_regularize(const RegArgs& a, std::uint64_t seed) {
  Output out;
  auto g = read_hypergraph(a.input);
  const int r = a.r ? a.r : g.uniformity();
  auto constants = derive_constants(r, a.alpha, a.p, a.eps, a.k);
  RegularizationOptions options;
  options.trials = a.trials;
  options.seed = seed;
  options.max_steps = a.max_steps;
  options.n1 = a.n1;
  options.c = a.c;
  try {
    out.body["trace"] = trace_json(regularize(g, constants, options));
    out.body["completed"] = true;
  } catch (const RegularizationFailure& e) {
    out.body["trace"] = trace_json(e.trace());
    out.body["completed"] = false;
    out.body["error"] = to_string(e.kind());
    out.body["reason"] = e.what();
    out.exit = 3;
  }
  return out;
}

Output cmd_bipartite_regularize(const RegArgs& a, std::uint64_t seed) {
  Output out;
  auto g = read_bipartite(a.input);
  auto t = bipartite_regularize(g, a.p, a.alpha, a.beta, a.eps, seed, a.trials);
  out.body["p"] = t.p;
  out.body["alpha"] = t.alpha;
  out.body["beta"] = t.beta;
  out.body["delta"] = t.delta;
  out.body["eps"] = t.eps;
  json steps = json::array();
  for (auto& s : t.steps)
    steps.push_back({{"i", s.i},
                     {"left", s.left},
                     {"right", s.right},
                     {"norm_left", s.norm_left},
                     {"phi", s.phi},
                     {"heavy", s.heavy},
                     {"heavy_mass", s.heavy_mass},
                     {"taken", s.taken},
                     {"attempts", s.attempts},
                     {"next_phi", s.next_phi},
                     {"growth_ok", s.growth_ok},
                     {"halving_ok", s.halving_ok}});
  out.body["steps"] = steps;
  out.body["k"] = t.k;
  out.body["k_star"] = t.k_star;
  out.body["stop_reason"] = t.stop_reason;
  out.body["growth_failed"] = t.growth_failed;
  out.body["steps_ok"] = t.steps_ok;
  return out;
}

struct DyadicArgs {
  std::string input;
  std::string degrees;
  double n_product = 0;
  double p = 1;
};

json dyadic_json(const DyadicResult& d) {
  return {{"U", d.u},         {"t", d.t},         {"class", d.chosen_class}, {"class_sums", d.class_sums},
          {"edges", d.edges}, {"guarantee", d.guarantee}, {"holds", d.holds}};
}

Output cmd_dyadic(const DyadicArgs& a) {
  Output out;
  DyadicResult d;
  if (!a.degrees.empty()) {
    std::vector<std::int64_t> deg;
    for (int x : int_list(a.degrees)) deg.push_back(x);
    require(a.n_product > 0, "--N is required with --degrees");
    d = dyadic_select(deg, a.n_product, a.p);
  } else {
    require(!a.input.empty(), "give --input or --degrees");
    d = dyadic_select(read_bipartite(a.input), a.p);
  }
  out.body["p"] = a.p;
  out.body["result"] = dyadic_json(d);
  return out;
}

struct CriticalArgs {
  std::string input;
  std::string pattern;
  double alpha = 0.5;
  double cf = 0;
  int trials = 64;
};

Output cmd_critical(const CriticalArgs& a, std::uint64_t seed) {
  Output out;
  auto spec = resolve_pattern(a.pattern);
  auto g = read_hypergraph(a.input);
  const bool calibrated = a.cf <= 0;
  const double cf = calibrated ? calibrate_cf(spec, a.alpha) : a.cf;
  auto r = critical_pipeline(g, spec, a.alpha, cf, a.trials, seed);
  out.body["pattern"] = spec.name;
  out.body["p_star"] = r.p_star;
  out.body["C_F"] = r.c_f;
  out.body["C_F_calibrated"] = calibrated;
  out.body["part"] = r.part;
  out.body["part_of"] = r.part_of;
  out.body["part_sum"] = r.part_sum;
  out.body["h_norm"] = r.h_norm;
  out.body["g_norm"] = r.g_norm;
  out.body["pigeonhole_ok"] = r.pigeonhole_ok;
  out.body["partition_ok"] = r.partition_ok;
  out.body["dyadic"] = dyadic_json(r.dyadic);
  out.body["semibip_bound"] = r.semibip_bound;
  out.body["semibip_ok"] = r.semibip_ok;
  out.body["implied_bound"] = r.implied_bound;
  out.body["bound_ok"] = r.bound_ok;
  out.body["log_form"] = r.log_form;
  return out;
}

struct DrcArgs {
  std::string input;
  std::string pattern;
  int trials = 10;
};

Output cmd_drc(const DrcArgs& a, std::uint64_t seed) {
  Output out;
  auto r = drc_embed(read_bipartite(a.input), resolve_pattern(a.pattern), a.trials, seed);
  out.body["s"] = r.s;
  out.body["t"] = r.t;
  out.body["C"] = r.c;
  out.body["richer_side"] = r.richer_side;
  out.body["richer_sum"] = r.richer_sum;
  out.body["norm_s"] = r.norm_s;
  out.body["precondition_ok"] = r.precondition_ok;
  out.body["expected_X"] = r.expected_x;
  out.body["expected_Y_bound"] = r.expected_y_bound;
  out.body["anchors"] = r.anchors;
  out.body["X"] = r.x.size();
  out.body["X_pruned"] = r.x_pruned.size();
  out.body["bad_sets"] = r.bad_sets;
  out.body["pruned_ok"] = r.pruned_ok;
  out.body["found"] = r.embedding.has_value();
  out.body["embedding"] = r.embedding ? json(*r.embedding) : json(nullptr);
  out.body["trials_used"] = r.trials_used;
  return out;
}

struct BoundArgs {
  std::string kind;
  std::vector<std::string> sets;
  bool list = false;
};

Output cmd_bound(const BoundArgs& a) {
  Output out;
  if (a.list || a.kind.empty()) {
    out.body["kinds"] = bound_kinds();
    return out;
  }
  BoundParams params;
  for (auto& s : a.sets) {
    auto eq = s.find('=');
    require(eq != std::string::npos, "--set expects key=value, got '" + s + "'");
    try {
      params[s.substr(0, eq)] = std::stod(s.substr(eq + 1));
    } catch (const std::exception&) {
      fail(ErrorKind::InvalidParameter, "bad value in '" + s + "'");
    }
  }
  out.body["kind"] = a.kind;
  json pj = json::object();
  for (auto& [k, v] : params) pj[k] = v;
  out.body["params"] = pj;
  out.body["value"] = evaluate_bound(a.kind, params);
  return out;
}

Output cmd_phase(const std::string& name, const std::string& grid) {
  Output out;
  auto prof = profile(name);
  auto rows = phase_diagram(prof, parse_grid(grid));
  out.body["profile"] = prof.name;
  out.body["p_star"] = threshold(prof.r, prof.alpha);
  Table t{{"p", "regime", "exponent", "log_flag", "constant"}, {}};
  json arr = json::array();
  for (auto& r : rows) {
    std::string constant = r.constant ? num(*r.constant) : "";
    if (r.constant_hi) constant += ".." + num(*r.constant_hi);
    t.rows.push_back({num(r.p), to_string(r.regime), num(r.exponent), r.log_flag ? "1" : "0", constant});
    json row{{"p", r.p}, {"regime", to_string(r.regime)}, {"exponent", r.exponent}, {"log_flag", r.log_flag}};
    row["constant"] = r.constant ? json(*r.constant) : json(nullptr);
    if (r.constant_hi) row["constant_hi"] = *r.constant_hi;
    row["form"] = r.form;
    arr.push_back(row);
  }
  out.body["rows"] = arr;
  out.table = t;
  return out;
}

struct SlopeArgs {
  std::string input;
  std::string series;
};

Output cmd_slope_fit(const SlopeArgs& a) {
  Output out;
  std::vector<std::pair<double, double>> pts;
  auto add_line = [&](const std::string& line) {
    std::string s = line;
    std::replace(s.begin(), s.end(), ',', ' ');
    std::replace(s.begin(), s.end(), ':', ' ');
    std::istringstream in(s);
    double n, v;
    if (in >> n >> v) pts.emplace_back(n, v);
  };
  if (!a.input.empty()) {
    std::istringstream in(io::read_text(a.input));
    std::string line;
    while (std::getline(in, line))
      if (!line.empty() && line[0] != '#' && std::isdigit(static_cast<unsigned char>(line[0]))) add_line(line);
  } else {
    std::istringstream in(a.series);
    std::string item;
    while (std::getline(in, item, ';')) add_line(item);
  }
  out.body["points"] = pts.size();
  out.body["slope"] = slope_fit(pts);
  return out;
}

Output cmd_selftest(const std::vector<int>& ids) {
  Output out;
  std::ostringstream log;
  auto outcomes = acceptance::run_suite(log, ids);
  json arr = json::array();
  Table t{{"id", "result", "seconds", "name", "detail"}, {}};
  int failed = 0;
  for (auto& o : outcomes) {
    failed += !o.pass;
    arr.push_back({{"id", o.id}, {"pass", o.pass}, {"name", o.name}, {"detail", o.detail}});
    t.rows.push_back({std::to_string(o.id), o.pass ? "PASS" : "FAIL", num(o.seconds), o.name, o.detail});
  }
  out.body["criteria"] = arr;
  out.body["passed"] = static_cast<int>(outcomes.size()) - failed;
  out.body["failed"] = failed;
  out.table = t;
  out.exit = failed ? 2 : 0;
  return out;
}

// --- rendering -----------------------------------------------------------

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) return num(v.get<double>());
  return v.dump();
}

// Nested objects become dotted keys; arrays of scalars stay compact JSON.
void flatten(const json& v, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  const bool scalars = v.is_array() && std::none_of(v.begin(), v.end(), [](const json& x) { return x.is_structured(); });
  if (v.is_object() || (v.is_array() && !scalars)) {
    std::size_t i = 0;
    for (auto& [k, x] : v.items()) {
      flatten(x, prefix.empty() ? k : prefix + "." + (v.is_array() ? std::to_string(i) : k), out);
      ++i;
    }
    return;
  }
  out.emplace_back(prefix, scalar_text(v));
}

std::string render(const json& doc, const std::optional<Table>& table, const std::string& format) {
  std::ostringstream out;
  if (format == "json") {
    out << doc.dump(2) << "\n";
  } else if (format == "csv") {
    if (table) {
      for (std::size_t i = 0; i < table->header.size(); ++i) out << (i ? "," : "") << csv_field(table->header[i]);
      out << "\n";
      for (auto& row : table->rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
        out << "\n";
      }
    } else {
      std::vector<std::pair<std::string, std::string>> flat;
      flatten(doc, "", flat);
      out << "key,value\n";
      for (auto& [k, v] : flat) out << csv_field(k) << "," << csv_field(v) << "\n";
    }
  } else {
    std::vector<std::pair<std::string, std::string>> flat;
    json head = doc;
    if (table)
      for (auto& [k, v] : doc.items())
        if (v.is_array()) head.erase(k);
    flatten(head, "", flat);
    for (auto& [k, v] : flat) out << k << ": " << v << "\n";
    if (table) {
      for (auto& row : table->rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "  " : "") << table->header[i] << "=" << row[i];
        out << "\n";
      }
    }
  }
  return out.str();
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BudgetExceeded:
    case ErrorKind::ResampleExhausted:
    case ErrorKind::StepBudget:
      return 3;
    default:
      return 2;
  }
}

// key = value lines; '#' starts a comment.
std::map<std::string, std::string> read_config(const std::string& path) {
  std::map<std::string, std::string> out;
  std::istringstream in(io::read_text(path));
  std::string line;
  auto trim = [](std::string s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) fail(ErrorKind::InvalidInput, "config line without '=': " + line);
    out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* threads = std::getenv("XTURAN_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(threads, &end, 10);
    if (*threads == '\0' || *end != '\0' || v < 1) {
      std::cerr << "XTURAN_THREADS must be a positive integer\n";
      return 1;
    }
  }

  CLI::App app{"p-norm Turan numbers: search, constructions, regularization and bounds"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--output,-o", common.output, "Write the result to a file instead of stdout");
  app.add_option("--config", common.config, "key = value file with default option values");
  app.add_option("--seed", common.seed, "Random seed (recorded in every output)");

  std::function<Output()> action;

  NormArgs norm;
  auto* s_norm = app.add_subcommand("norm", "Sum of d(v)^p");
  s_norm->add_option("--input,-i", norm.input)->required();
  s_norm->add_option("--p", norm.p)->required();
  s_norm->add_option("--side", norm.side)->check(CLI::IsMember({"left", "right", "both"}));
  s_norm->callback([&] { action = [&] { return cmd_norm(norm); }; });

  TpArgs tp;
  auto* s_tp = app.add_subcommand("tpnorm", "(t,p)-norm, or (t,r,p)-norm with --r");
  s_tp->add_option("--input,-i", tp.input)->required();
  s_tp->add_option("--t", tp.t)->required();
  s_tp->add_option("--p", tp.p)->required();
  s_tp->add_option("--r", tp.r, "Clique size for the (t,r,p)-norm of a graph");
  s_tp->callback([&] { action = [&] { return cmd_tpnorm(tp); }; });

  WalkArgs walk;
  auto* s_walk = app.add_subcommand("walks", "Number of walks with k edges");
  s_walk->add_option("--input,-i", walk.input)->required();
  s_walk->add_option("--k", walk.k)->required();
  s_walk->callback([&] { action = [&] { return cmd_walks(walk); }; });

  std::string tau_pattern;
  auto* s_tau = app.add_subcommand("tau", "Partition and independent covering numbers");
  s_tau->add_option("--pattern", tau_pattern)->required();
  s_tau->callback([&] { action = [&] { return cmd_tau(tau_pattern); }; });

  FreeArgs fr;
  auto* s_free = app.add_subcommand("free", "Check a host for a forbidden pattern");
  s_free->add_option("--input,-i", fr.input)->required();
  s_free->add_option("--pattern", fr.pattern)->required();
  s_free->callback([&] { action = [&] { return cmd_free(fr); }; });

  ConstructArgs con;
  auto* s_con = app.add_subcommand("construct", "Build a named construction");
  s_con->add_option("--kind", con.kind)
      ->required()
      ->check(CLI::IsMember({"star_like", "complete_r_partite", "cycle", "path", "polarity", "random_deletion"}));
  s_con->add_option("--n", con.params.n);
  s_con->add_option("--t", con.params.t);
  s_con->add_option("--r", con.params.r);
  s_con->add_option("--q", con.params.q);
  s_con->add_option("--sizes", con.sizes, "Comma separated part sizes");
  s_con->add_option("--pattern", con.params.pattern);
  s_con->add_option("--c", con.params.c);
  s_con->add_option("--theta", con.theta);
  s_con->add_option("--p", con.p, "Report p-norms (repeatable)");
  s_con->add_option("--save", con.save, "Write the graph (graph6 or hypergraph text)");
  s_con->add_flag("!--no-check", con.params.check, "Skip the freeness check");
  s_con->callback([&] {
    con.params.seed = common.seed;
    action = [&] { return cmd_construct(con); };
  });

  SearchArgs ex;
  auto* s_ex = app.add_subcommand("search-exact", "Exact maximum p-norm of F-free graphs");
  s_ex->add_option("--n", ex.n)->required();
  s_ex->add_option("--pattern", ex.pattern)->required();
  s_ex->add_option("--p", ex.p)->required();
  s_ex->add_option("--budget", ex.budget, "Node budget");
  s_ex->add_flag("--no-size-guard", ex.no_guard);
  s_ex->callback([&] { action = [&] { return cmd_search_exact(ex); }; });

  SearchArgs loc;
  auto* s_loc = app.add_subcommand("search-local", "Heuristic maximum p-norm of F-free graphs");
  s_loc->add_option("--n", loc.n)->required();
  s_loc->add_option("--pattern", loc.pattern)->required();
  s_loc->add_option("--p", loc.p)->required();
  s_loc->add_option("--budget", loc.budget, "Attempted moves");
  s_loc->add_option("--init", loc.init, "Start from this graph");
  s_loc->callback([&] { action = [&] { return cmd_search_local(loc, common.seed); }; });

  SearchArgs zar;
  auto* s_zar = app.add_subcommand("zarankiewicz", "Exact Zarankiewicz-type maxima");
  s_zar->add_option("--m", zar.m)->required();
  s_zar->add_option("--n", zar.n)->required();
  s_zar->add_option("--pattern", zar.pattern)->required();
  s_zar->add_option("--p", zar.p);
  s_zar->add_option("--objective", zar.objective)->check(CLI::IsMember({"edges", "left", "right", "both"}));
  s_zar->add_option("--budget", zar.budget);
  s_zar->add_flag("--no-size-guard", zar.no_guard);
  s_zar->callback([&] { action = [&] { return cmd_zarankiewicz(zar); }; });

  RegArgs reg;
  auto* s_reg = app.add_subcommand("regularize", "p-norm regularization with per-step checks");
  s_reg->add_option("--input,-i", reg.input)->required();
  s_reg->add_option("--r", reg.r);
  s_reg->add_option("--alpha", reg.alpha);
  s_reg->add_option("--p", reg.p)->required();
  s_reg->add_option("--eps", reg.eps);
  s_reg->add_option("--K", reg.k, "Override the derived K (result not certified)");
  s_reg->add_option("--trials", reg.trials);
  s_reg->add_option("--max-steps", reg.max_steps);
  s_reg->add_option("--n1", reg.n1);
  s_reg->add_option("--C", reg.c);
  s_reg->callback([&] { action = [&] { return cmd_regularize(reg, common.seed); }; });

  RegArgs breg;
  breg.eps = 0.0;
  auto* s_breg = app.add_subcommand("bipartite-regularize", "Halving regularization for bipartite hosts");
  s_breg->add_option("--input,-i", breg.input)->required();
  s_breg->add_option("--p", breg.p)->required();
  s_breg->add_option("--alpha", breg.alpha);
  s_breg->add_option("--beta", breg.beta);
  s_breg->add_option("--eps", breg.eps, "Default delta/2");
  s_breg->add_option("--trials", breg.trials);
  s_breg->callback([&] { action = [&] { return cmd_bipartite_regularize(breg, common.seed); }; });

  DyadicArgs dy;
  auto* s_dy = app.add_subcommand("dyadic", "Dyadic degree-class selection");
  s_dy->add_option("--input,-i", dy.input);
  s_dy->add_option("--degrees", dy.degrees, "Comma separated degrees");
  s_dy->add_option("--N", dy.n_product, "Size of the other side (with --degrees)");
  s_dy->add_option("--p", dy.p)->required();
  s_dy->callback([&] { action = [&] { return cmd_dyadic(dy); }; });

  CriticalArgs crit;
  auto* s_crit = app.add_subcommand("critical-check", "Critical-exponent argument as a checker");
  s_crit->add_option("--input,-i", crit.input)->required();
  s_crit->add_option("--pattern", crit.pattern)->required();
  s_crit->add_option("--alpha", crit.alpha);
  s_crit->add_option("--cf", crit.cf, "C_F (default: calibrated from exact Zarankiewicz values)");
  s_crit->add_option("--trials", crit.trials);
  s_crit->callback([&] { action = [&] { return cmd_critical(crit, common.seed); }; });

  DrcArgs drc;
  auto* s_drc = app.add_subcommand("drc", "Dependent random choice embedding");
  s_drc->add_option("--input,-i", drc.input)->required();
  s_drc->add_option("--pattern", drc.pattern)->required();
  s_drc->add_option("--trials", drc.trials);
  s_drc->callback([&] { action = [&] { return cmd_drc(drc, common.seed); }; });

  BoundArgs bnd;
  auto* s_bnd = app.add_subcommand("bound", "Evaluate a closed-form bound");
  s_bnd->add_option("--kind", bnd.kind);
  s_bnd->add_option("--set", bnd.sets, "key=value (repeatable)");
  s_bnd->add_flag("--list", bnd.list);
  s_bnd->callback([&] { action = [&] { return cmd_bound(bnd); }; });

  std::string phase_profile = "C4", phase_grid = "1:4:0.5";
  auto* s_phase = app.add_subcommand("phase", "Phase diagram of predicted exponents");
  s_phase->add_option("--profile", phase_profile)->check(CLI::IsMember({"C4", "C6", "K33"}));
  s_phase->add_option("--grid", phase_grid, "a:b:step");
  s_phase->callback([&] { action = [&] { return cmd_phase(phase_profile, phase_grid); }; });

  SlopeArgs sl;
  auto* s_sl = app.add_subcommand("slope-fit", "Least-squares log-log slope");
  s_sl->add_option("--input,-i", sl.input, "Lines 'n,value'");
  s_sl->add_option("--series", sl.series, "n:value;n:value;...");
  s_sl->callback([&] { action = [&] { return cmd_slope_fit(sl); }; });

  std::vector<int> criteria;
  auto* s_self = app.add_subcommand("selftest", "Run the acceptance suite");
  s_self->add_option("--criteria", criteria, "Criterion numbers (default all)")->delimiter(',');
  s_self->callback([&] { action = [&] { return cmd_selftest(criteria); }; });

  // Defaults from --config are appended as flags unless given explicitly.
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string config_path, command;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) config_path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) config_path = args[i].substr(9);
    if (command.empty())
      for (auto* sub : app.get_subcommands({}))
        if (sub->get_name() == args[i]) command = args[i];
  }
  if (!config_path.empty()) {
    try {
      CLI::App* sub = command.empty() ? nullptr : app.get_subcommand(command);
      for (auto& [key, value] : read_config(config_path)) {
        const std::string flag = "--" + key;
        bool given = std::any_of(args.begin(), args.end(),
                                 [&](const std::string& a) { return a == flag || a.rfind(flag + "=", 0) == 0; });
        if (given) continue;
        const CLI::Option* opt = sub ? sub->get_option_no_throw(flag) : nullptr;
        if (!opt) opt = app.get_option_no_throw(flag);
        if (!opt) continue;
        args.push_back(flag);
        args.push_back(value);
      }
    } catch (const Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    } catch (const CLI::Error&) {
      // unknown command; reported by the parser below
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  Output out;
  try {
    out = action();
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code(e.kind());
  }

  json doc;
  doc["schema"] = 1;
  doc["command"] = app.get_subcommands().front()->get_name();
  doc["seed"] = common.seed;
  for (auto& [k, v] : out.body.items()) doc[k] = v;
  const std::string text = render(doc, out.table, common.format);
  if (common.output.empty()) {
    std::cout << text;
  } else {
    try {
      io::write_text(common.output, text);
    } catch (const Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
  }
  return out.exit;
}
