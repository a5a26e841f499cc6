#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "xturan/constructions.hpp"
#include "xturan/io.hpp"
#include "xturan/patterns.hpp"

using namespace xturan;

TEST_SUITE("test_io") {
  TEST_CASE("graph6 round trip") {
    for (int q : {2, 3, 5, 7}) {
      auto g = polarity_graph(q);
      CHECK(io::from_graph6(io::to_graph6(g)) == g);
    }
    CHECK(io::to_graph6(complete_graph(3)) == "Bw");
    CHECK(io::from_graph6(">>graph6<<Bw") == complete_graph(3));
    auto big = star_like(70, 1, 2);
    CHECK(io::from_graph6(io::to_graph6(big)) == big);
    CHECK_THROWS_AS(io::from_graph6("B"), Error);
  }

  TEST_CASE("hypergraph and bipartite text round trip") {
    auto h = star_like(6, 2, 3);
    CHECK(io::parse_hypergraph_text(io::to_hypergraph_text(h)) == h);
    auto b = BipartiteGraph::complete(2, 3);
    CHECK(io::parse_bipartite_text(io::to_bipartite_text(b)) == b);
    CHECK(std::holds_alternative<BipartiteGraph>(io::parse_any(io::to_bipartite_text(b))));
    CHECK(std::holds_alternative<Hypergraph>(io::parse_any(io::to_hypergraph_text(h))));
    CHECK(std::holds_alternative<Hypergraph>(io::parse_any("Bw\n")));
    CHECK_THROWS_AS(io::parse_hypergraph_text("3 4 2\n0 1 2\n"), Error);
  }

  TEST_CASE("pattern files") {
    const std::string path = "xturan_test_pattern.txt";
    io::write_text(path, io::to_bipartite_text(BipartiteGraph::complete(2, 2)));
    auto spec = resolve_pattern(path);
    CHECK(spec.ordered());
    CHECK(spec.pattern().size() == 4);
    std::remove(path.c_str());
    CHECK_THROWS_AS(io::read_file("does/not/exist"), Error);
  }
}
