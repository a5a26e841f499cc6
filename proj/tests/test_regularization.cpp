#include <cmath>

#include "doctest.h"
#include "xturan/constructions.hpp"
#include "xturan/patterns.hpp"
#include "xturan/random.hpp"
#include "xturan/regularization.hpp"

using namespace xturan;

TEST_SUITE("test_regularization") {
  TEST_CASE("constants") {
    auto c = derive_constants(2, 0.5, 1, 0.5);
    CHECK(c.eps1 == doctest::Approx(0.25));
    CHECK(c.certified());
    CHECK(std::pow(c.k, c.delta) >= std::pow(2.0, 1 + c.p));
    auto c15 = derive_constants(2, 0.5, 1.5, 0.5);
    CHECK(std::abs(1 - c15.eps1 - std::pow(c15.eps1, 2.0 / 3) - std::pow(0.5, 2.0 / 3)) <= 1e-12);
    CHECK(c15.certified());
    CHECK_THROWS_AS(derive_constants(2, 0.5, 2.0, 0.5), Error);
    CHECK_THROWS_AS(derive_constants(2, 0.5, 0.9, 0.5), Error);
    auto forced = derive_constants(2, 0.5, 1.25, 0.5, 4);
    CHECK(forced.overridden);
    CHECK(forced.k == 4);
    CHECK_FALSE(forced.certified());
  }

  TEST_CASE("heavy vertices") {
    CHECK(heavy_vertices(cycle_graph(8), 2, 2).empty());
    CHECK(heavy_vertices(star_like(100, 1, 2), 2, 4) == std::vector<Vertex>{0});
    CHECK(heavy_vertices(Hypergraph(2, 5), 2, 4).empty());
  }

  TEST_CASE("regular graphs stop immediately") {
    auto c = derive_constants(2, 0.5, 1.25, 0.5);
    auto tr = regularize(cycle_graph(12), c);
    CHECK(tr.k == 0);
    CHECK(tr.steps.size() == 1);
    CHECK(tr.h == cycle_graph(12));
    CHECK(tr.delta_ok);
    CHECK(tr.norm_ok);
  }

  TEST_CASE("polarity graph trace") {
    auto c = derive_constants(2, 0.5, 1.25, 0.5);
    RegularizationOptions opt;
    opt.seed = 3;
    auto tr = regularize(polarity_graph(11), c, opt);
    CHECK(tr.k <= 1);
    CHECK(tr.steps_ok);
    CHECK(tr.delta_ok);
    CHECK(tr.norm_ok);
  }

  TEST_CASE("precondition warning") {
    auto c = derive_constants(2, 0.5, 1.25, 0.5);
    RegularizationOptions opt;
    opt.c = 1e6;
    auto tr = regularize(cycle_graph(10), c, opt);
    CHECK(tr.precondition_warning);
    CHECK(tr.k == 0);
  }

  TEST_CASE("forced K takes steps on a hub graph") {
    // 4 hubs joined to everything plus a perfect matching.
    std::vector<std::pair<Vertex, Vertex>> e;
    const int n = 200;
    for (int h = 0; h < 4; ++h)
      for (int v = 4; v < n; ++v) e.emplace_back(h, v);
    for (int v = 4; v + 1 < n; v += 2) e.emplace_back(v, v + 1);
    auto g = Hypergraph::graph(n, e);
    auto c = derive_constants(2, 0.5, 1.25, 0.5, 4);
    RegularizationOptions opt;
    opt.trials = 64;
    try {
      auto tr = regularize(g, c, opt);
      for (const auto& s : tr.steps)
        if (s.taken) CHECK(s.sandwich_ok);
      CHECK(tr.k == static_cast<int>(tr.steps.size()) - 1);
    } catch (const RegularizationFailure& f) {
      CHECK(f.trace().stop_reason == "resample-exhausted");
    }
  }

  TEST_CASE("dyadic selection") {
    std::vector<std::int64_t> d = {1, 2, 2, 4};
    auto r = dyadic_select(d, 4, 2);
    CHECK(r.t == 2);
    REQUIRE(r.class_sums.size() >= 3);
    CHECK(r.class_sums[0] == 1);
    CHECK(r.class_sums[1] == 8);
    CHECK(r.class_sums[2] == 16);
    CHECK(r.u == std::vector<Vertex>{3});
    CHECK(r.guarantee == doctest::Approx(0.5 * std::sqrt(12.5)));
    CHECK(r.holds);
    std::vector<std::int64_t> ones = {1, 1, 1, 1};
    auto o = dyadic_select(ones, 2, 1);
    CHECK(o.t == 1);
    CHECK(o.u.size() == 4);
    CHECK(o.guarantee == doctest::Approx(2));
    std::vector<std::int64_t> zeros = {0, 0};
    CHECK_THROWS_AS(dyadic_select(zeros, 4, 2), Error);
  }

  TEST_CASE("critical pipeline") {
    auto c4 = resolve_pattern("C4");
    double cf = calibrate_cf(c4, 0.5);
    CHECK(cf > 1);
    auto star = critical_pipeline(star_like(30, 1, 2), c4, 0.5, cf);
    CHECK(std::isfinite(star.implied_bound));
    CHECK(star.bound_ok);
    auto er = critical_pipeline(polarity_graph(7), c4, 0.5, cf);
    CHECK(er.semibip_ok);
    CHECK(er.pigeonhole_ok);
    CHECK_THROWS_AS(critical_pipeline(complete_graph(5), c4, 0.5, cf), Error);
  }

  TEST_CASE("bipartite regularization") {
    auto biregular = BipartiteGraph::complete(6, 6);
    auto t = bipartite_regularize(biregular, 1.5, 0.75, 0.75);
    CHECK(t.k == 0);
    CHECK(t.k_star >= 1);

    std::vector<std::pair<Vertex, Vertex>> e;
    Rng rng(9);
    for (int i = 0; i < 100; ++i)
      for (int j = 0; j < 100; ++j)
        if (uniform_below(rng, 10) < 3) e.emplace_back(i, j);
    auto tr = bipartite_regularize(BipartiteGraph(100, 100, e), 1.2, 0.6, 0.6);
    CHECK(tr.eps == doctest::Approx(tr.delta / 2));
    for (const auto& s : tr.steps)
      if (s.taken) {
        CHECK(s.halving_ok);
        CHECK(s.growth_ok);
      }
    CHECK_THROWS_AS(bipartite_regularize(biregular, 1.1, 0.5, 0.5), Error);
  }
}
