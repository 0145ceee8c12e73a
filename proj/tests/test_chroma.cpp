#include <random>

#include "critcol/chroma.hpp"
#include "critcol/cograph.hpp"
#include "critcol/enumerate.hpp"
#include "critcol/error.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace critcol;

TEST_CASE("clique and independence numbers") {
  CHECK(clique_number(oracle::cycle(5)) == 2);
  CHECK(independence_number(oracle::cycle(5)) == 2);
  CHECK(clique_number(oracle::complete(5)) == 5);
  CHECK(independence_number(oracle::complete(5)) == 1);
  CHECK(clique_number(oracle::petersen()) == 2);
  CHECK(independence_number(oracle::petersen()) == 4);
  CHECK(clique_number(Graph(0)) == 0);
  CHECK(is_clique(oracle::petersen(), maximum_clique(oracle::petersen())));
}

TEST_CASE("k-colourability examples") {
  CHECK_FALSE(is_k_colorable(oracle::cycle(5), 2));
  auto c = is_k_colorable(oracle::cycle(5), 3);
  REQUIRE(c);
  CHECK(is_proper_coloring(oracle::cycle(5), *c));
  CHECK(c->palette_size <= 3);
  CHECK_FALSE(is_k_colorable(oracle::complete(4), 3));
  CHECK(is_k_colorable(Graph(0), 0));
  CHECK_FALSE(is_k_colorable(Graph(1), 0));
  CHECK(is_k_colorable(oracle::cycle(5), 3) == is_k_colorable(oracle::cycle(5), 3));
}

TEST_CASE("chromatic number examples") {
  CHECK(chromatic_number(Graph(0)).chi == 0);
  CHECK(chromatic_number(oracle::cycle(5)).chi == 3);
  CHECK(chromatic_number(oracle::petersen()).chi == 3);
  CHECK(chromatic_number(oracle::complete(6)).chi == 6);
  const auto r = chromatic_number(oracle::petersen());
  CHECK(is_proper_coloring(oracle::petersen(), r.coloring));
  CHECK(r.coloring.palette_size == 3);
  CHECK(r.coloring.used_colours() == 3);
}

TEST_CASE("node budget") {
  // Mycielski graph of C5: triangle-free with chi = 4, so the search has to
  // refute 3-colourability
  Graph grotzsch = oracle::cycle(5);
  for (Vertex v = 0; v < 5; ++v) {
    VertexSet shadow(grotzsch.order());
    grotzsch.neighbors(v).for_each([&](Vertex u) { if (u < 5) shadow.insert(u); });
    grotzsch = grotzsch.with_new_vertex(shadow);
  }
  VertexSet shadows(10, {5, 6, 7, 8, 9});
  grotzsch = grotzsch.with_new_vertex(shadows);
  CHECK(clique_number(grotzsch) == 2);
  SearchBudget tiny{10};
  CHECK_THROWS_AS(chromatic_number(grotzsch, tiny), BudgetError);
  CHECK(chromatic_number(grotzsch, SearchBudget{1'000'000}).chi == 4);
  CHECK(oracle::naive_chi(grotzsch) == 4);
}

TEST_CASE("colouring helpers") {
  Coloring c{5, {5, 2, 5}};
  Coloring k = compact(c);
  CHECK(k.palette_size == 2);
  CHECK(k.colour == std::vector<Colour>{2, 1, 2});
  CHECK(c.to_string() == "5 2 5");
  Graph p3(3, {{0, 1}, {1, 2}});
  CHECK(is_proper_coloring(p3, c));
  CHECK_FALSE(is_proper_coloring(p3, Coloring{2, {1, 1, 2}}));
  CHECK_FALSE(is_proper_coloring(p3, Coloring{1, {1, 2, 1}}));
  CHECK_FALSE(is_proper_coloring(p3, Coloring{2, {1, 2}}));
  CHECK(is_proper_coloring(p3, greedy_coloring(p3)));
}

TEST_CASE("chromatic number agrees with naive colourer up to 6 vertices") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      const auto r = chromatic_number(g);
      CHECK(r.chi == oracle::naive_chi(g));
      CHECK(is_proper_coloring(g, r.coloring));
      CHECK(r.coloring.used_colours() == r.chi);
      CHECK(clique_number(g) == oracle::naive_clique_number(g));
      CHECK(clique_number(g) <= r.chi);
      CHECK(r.chi <= n);
    }
  }
}

TEST_CASE("random graphs: sandwich and witness") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = oracle::random_graph(11, 0.45, rng);
    const auto r = chromatic_number(g);
    CHECK(is_proper_coloring(g, r.coloring));
    CHECK(r.chi == oracle::naive_chi(g));
    CHECK(clique_number(g) == oracle::naive_clique_number(g));
    CHECK_FALSE(is_k_colorable(g, r.chi - 1));
  }
}
