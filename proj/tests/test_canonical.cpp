#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "xturan/canonical.hpp"
#include "xturan/constructions.hpp"
#include "xturan/patterns.hpp"
#include "xturan/random.hpp"
#include "xturan/search.hpp"

using namespace xturan;

TEST_SUITE("test_canonical") {
  TEST_CASE("canonical form is invariant under relabelling") {
    Rng rng(5);
    for (const auto& g : {polarity_graph(3), cycle_graph(7), star_like(6, 2, 3)}) {
      auto base = canonical_form(g).graph;
      for (int i = 0; i < 10; ++i) {
        std::vector<Vertex> perm(g.order());
        std::iota(perm.begin(), perm.end(), 0);
        shuffle(rng, perm);
        CHECK(canonical_form(g.relabel(perm)).graph == base);
      }
    }
  }

  TEST_CASE("isomorphism") {
    CHECK(isomorphic(cycle_graph(4), BipartiteGraph::complete(2, 2).to_graph()));
    CHECK_FALSE(isomorphic(cycle_graph(6), path_graph(6)));
    CHECK_FALSE(isomorphic(cycle_graph(4), cycle_graph(5)));
  }

  TEST_CASE("graph counts up to isomorphism") {
    // 1, 2, 4, 11, 34 graphs on 1..5 vertices.
    const std::size_t want[] = {1, 2, 4, 11, 34};
    for (int n = 1; n <= 5; ++n) CHECK(all_graphs(n).size() == want[n - 1]);
  }

  TEST_CASE("colours are preserved") {
    auto g = path_graph(3);
    auto cf = canonical_form(g, {1, 0, 0});
    CHECK(cf.labeling[0] == 2);
  }
}
