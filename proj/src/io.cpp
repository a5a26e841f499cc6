#include "xturan/io.hpp"

#include <fstream>
#include <sstream>

namespace xturan::io {

namespace {

std::vector<std::string> content_lines(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(first, last - first + 1));
  }
  return out;
}

std::vector<long long> integers(const std::string& line) {
  std::istringstream in(line);
  std::vector<long long> out;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(token, &used);
    } catch (const std::exception&) {
      fail(ErrorKind::InvalidInput, "expected an integer, got '" + token + "'");
    }
    if (used != token.size()) fail(ErrorKind::InvalidInput, "expected an integer, got '" + token + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

std::string to_graph6(const Hypergraph& g) {
  require(g.uniformity() == 2, "graph6 encodes 2-graphs only");
  const long long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  const std::size_t bits = static_cast<std::size_t>(n * (n - 1) / 2);
  std::vector<char> x(bits, 0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    auto e = g.edge(i);
    std::size_t a = e[0], b = e[1];  // a < b
    x[b * (b - 1) / 2 + a] = 1;
  }
  for (std::size_t pos = 0; pos < bits; pos += 6) {
    int group = 0;
    for (std::size_t k = 0; k < 6; ++k) {
      group <<= 1;
      if (pos + k < bits && x[pos + k]) group |= 1;
    }
    out.push_back(static_cast<char>(63 + group));
  }
  return out;
}

Hypergraph from_graph6(std::string_view line) {
  if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  auto byte = [&](std::size_t i) {
    if (i >= line.size()) fail(ErrorKind::InvalidInput, "truncated graph6 string");
    int v = static_cast<unsigned char>(line[i]) - 63;
    if (v < 0 || v > 63) fail(ErrorKind::InvalidInput, "invalid graph6 character");
    return v;
  };
  if (line.empty()) fail(ErrorKind::InvalidInput, "empty graph6 string");
  long long n = 0;
  std::size_t pos = 0;
  if (static_cast<unsigned char>(line[0]) != 126) {
    n = byte(0);
    pos = 1;
  } else if (line.size() > 1 && static_cast<unsigned char>(line[1]) != 126) {
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | byte(i);
    pos = 4;
  } else {
    for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | byte(i);
    pos = 8;
  }
  const std::size_t bits = static_cast<std::size_t>(n * (n - 1) / 2);
  const std::size_t groups = (bits + 5) / 6;
  if (line.size() != pos + groups) fail(ErrorKind::InvalidInput, "graph6 length does not match order");
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::size_t k = 0;
  for (Vertex b = 1; b < n; ++b) {
    for (Vertex a = 0; a < b; ++a, ++k) {
      int group = byte(pos + k / 6);
      if ((group >> (5 - k % 6)) & 1) edges.emplace_back(a, b);
    }
  }
  return Hypergraph::graph(static_cast<int>(n), edges);
}

std::vector<Hypergraph> read_graph6_lines(std::string_view text) {
  std::vector<Hypergraph> out;
  for (const auto& line : content_lines(text)) out.push_back(from_graph6(line));
  return out;
}

std::string to_hypergraph_text(const Hypergraph& h) {
  std::ostringstream out;
  out << h.uniformity() << ' ' << h.order() << ' ' << h.size() << '\n';
  for (std::size_t i = 0; i < h.size(); ++i) {
    auto e = h.edge(i);
    for (std::size_t k = 0; k < e.size(); ++k) out << (k ? " " : "") << e[k];
    out << '\n';
  }
  return out.str();
}

Hypergraph parse_hypergraph_text(std::string_view text) {
  auto lines = content_lines(text);
  if (lines.empty()) fail(ErrorKind::InvalidInput, "missing hypergraph header");
  auto header = integers(lines[0]);
  if (header.size() != 3) fail(ErrorKind::InvalidInput, "hypergraph header must be 'r n m'");
  const long long r = header[0], n = header[1], m = header[2];
  if (r < 1 || n < 0 || m < 0) fail(ErrorKind::InvalidInput, "invalid hypergraph header");
  if (static_cast<long long>(lines.size()) - 1 != m)
    fail(ErrorKind::InvalidInput, "edge count does not match header");
  std::vector<std::vector<Vertex>> edges;
  edges.reserve(m);
  for (long long i = 1; i <= m; ++i) {
    auto values = integers(lines[i]);
    if (static_cast<long long>(values.size()) != r)
      fail(ErrorKind::InvalidInput, "edge line has the wrong number of vertices");
    edges.emplace_back(values.begin(), values.end());
  }
  return Hypergraph(static_cast<int>(r), static_cast<int>(n), edges);
}

std::string to_bipartite_text(const BipartiteGraph& g) {
  std::ostringstream out;
  out << "B " << g.left_size() << ' ' << g.right_size() << ' ' << g.size() << '\n';
  for (auto [a, b] : g.edges()) out << a << ' ' << b << '\n';
  return out.str();
}

BipartiteGraph parse_bipartite_text(std::string_view text) {
  auto lines = content_lines(text);
  if (lines.empty() || !lines[0].starts_with("B"))
    fail(ErrorKind::InvalidInput, "missing bipartite header 'B m n e'");
  auto header = integers(lines[0].substr(1));
  if (header.size() != 3) fail(ErrorKind::InvalidInput, "bipartite header must be 'B m n e'");
  const long long m = header[0], n = header[1], e = header[2];
  if (m < 0 || n < 0 || e < 0) fail(ErrorKind::InvalidInput, "invalid bipartite header");
  if (static_cast<long long>(lines.size()) - 1 != e)
    fail(ErrorKind::InvalidInput, "edge count does not match header");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (long long i = 1; i <= e; ++i) {
    auto values = integers(lines[i]);
    if (values.size() != 2) fail(ErrorKind::InvalidInput, "bipartite edge line must be 'i j'");
    edges.emplace_back(static_cast<Vertex>(values[0]), static_cast<Vertex>(values[1]));
  }
  return BipartiteGraph(static_cast<int>(m), static_cast<int>(n), std::move(edges));
}

AnyGraph parse_any(std::string_view text) {
  auto lines = content_lines(text);
  if (lines.empty()) fail(ErrorKind::InvalidInput, "empty graph file");
  if (lines[0].starts_with("B ") || lines[0] == "B") return parse_bipartite_text(text);
  bool numeric = lines[0].find_first_not_of("0123456789 \t-") == std::string::npos;
  if (numeric) {
    std::istringstream in(lines[0]);
    int count = 0;
    std::string tok;
    while (in >> tok) ++count;
    if (count == 3) return parse_hypergraph_text(text);
  }
  if (lines.size() != 1) fail(ErrorKind::InvalidInput, "expected a single graph6 line");
  return from_graph6(lines[0]);
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::InvalidInput, "cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

AnyGraph read_file(const std::string& path) { return parse_any(read_text(path)); }

void write_text(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::InvalidInput, "cannot write " + path);
  out << text;
}

}  // namespace xturan::io
