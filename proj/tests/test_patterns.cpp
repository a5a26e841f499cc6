#include "doctest.h"
#include "xturan/constructions.hpp"
#include "xturan/matcher.hpp"
#include "xturan/patterns.hpp"

using namespace xturan;

TEST_SUITE("test_patterns") {
  TEST_CASE("freeness") {
    auto c4 = resolve_pattern("C4");
    CHECK(is_free(cycle_graph(5), c4).free);
    auto k22 = BipartiteGraph::complete(2, 2).to_graph();
    auto w = is_free(k22, c4);
    REQUIRE_FALSE(w.free);
    REQUIRE(w.embedding.has_value());
    CHECK(is_valid_embedding(k22, c4.pattern(), *w.embedding));
    CHECK(is_free(polarity_graph(2), c4).free);
    CHECK(is_free(polarity_graph(5), c4).free);
    CHECK_FALSE(is_free(complete_graph(4), resolve_pattern("K3")).free);
    Hypergraph h3(3, 4, {{0, 1, 2}});
    CHECK_THROWS_AS(is_free(h3, c4), Error);
  }

  TEST_CASE("ordered containment respects sides") {
    // K_{1,2} with the centre on the left only embeds with the centre left.
    auto star = single_pattern("star", Hypergraph::graph(3, {{0, 1}, {0, 2}}), {0, 1, 1});
    BipartiteGraph left_centre(1, 2, {{0, 0}, {0, 1}});
    BipartiteGraph right_centre(2, 1, {{0, 0}, {1, 0}});
    CHECK_FALSE(is_free(left_centre, star).free);
    CHECK(is_free(right_centre, star).free);
    CHECK_FALSE(is_free(right_centre.to_graph(), star).free);
  }

  TEST_CASE("tau values") {
    auto c4 = tau_values(cycle_graph(4));
    CHECK(c4.tau_part == 2);
    CHECK(c4.tau_ind == 2);
    auto k2 = tau_values(complete_graph(2));
    CHECK(k2.tau_part == 1);
    CHECK(k2.tau_ind == 1);
    auto k3 = tau_values(complete_graph(3));
    CHECK_FALSE(k3.tau_part.has_value());
    auto gap = tau_values(resolve_pattern("tau-gap-3graph").pattern());
    CHECK(gap.tau_part == 4);
    CHECK(gap.tau_ind == 3);
    CHECK(gap.ind_witness.size() == 3);
  }

  TEST_CASE("family tau") {
    auto fam = family_tau(resolve_pattern("C<=6"));
    CHECK(fam.tau_part == 2);
    CHECK(fam.tau_ind == 2);
    PatternSpec mixed{"mixed", {complete_graph(3), cycle_graph(4)}, {}, {}};
    auto m = family_tau(mixed);
    CHECK(m.tau_ind == 2);
    CHECK(m.warnings.size() == 1);
    PatternSpec odd{"odd", {complete_graph(3)}, {}, {}};
    CHECK_THROWS_AS(family_tau(odd), Error);
  }

  TEST_CASE("book counts") {
    CHECK(book_count(star_like(5, 1, 2), 1, 2, 4) == 1);
    CHECK(book_count(complete_graph(4), 2, 3, 2) == 6);
    CHECK(book_count(complete_graph(5), 1, 3, 3) == 100);
    CHECK_THROWS_AS(book_count(complete_graph(4), 3, 2, 2), Error);
  }

  TEST_CASE("binomials and s-boundedness") {
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(3, 5) == 0);
    auto k33 = resolve_pattern("K3,3");
    CHECK(is_s_bounded(k33.pattern(), k33.sides.front(), 3));
    CHECK_FALSE(is_s_bounded(k33.pattern(), k33.sides.front(), 2));
  }

  TEST_CASE("registry") {
    CHECK(resolve_pattern("K2,3").pattern().size() == 6);
    CHECK(resolve_pattern("P4").pattern().size() == 3);
    CHECK(resolve_pattern("K^3_1,1,2").pattern().size() == 2);
    CHECK(resolve_pattern("C6").pattern().order() == 6);
    CHECK(resolve_pattern("C<=8").members.size() == 3);
    CHECK_THROWS_AS(resolve_pattern("no-such-pattern"), Error);
  }
}
