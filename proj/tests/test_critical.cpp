#include <bit>
#include <random>
#include <sstream>

#include "critcol/critical.hpp"
#include "critcol/enumerate.hpp"
#include "critcol/error.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace critcol;

namespace {

Graph w5() { return join(oracle::cycle(5), Graph(1)); }

Graph k4_pendant() {
  Graph g = oracle::complete(4).with_new_vertex(VertexSet(4, {0}));
  return g;
}

CriticalDb k4_db() { return CriticalDb{4, {PatternSpec::path(4)}, {to_graph6(oracle::complete(4))}}; }

}  // namespace

TEST_CASE("criticality report examples") {
  for (Execution ex : {Execution::serial, Execution::parallel}) {
    auto r = criticality_report(oracle::complete(4), 4, ex);
    CHECK(r.verdict);
    CHECK(r.chi == 4);
    CHECK(r.per_vertex == std::vector<std::size_t>(4, 3));
    CHECK(criticality_report(oracle::cycle(5), 3, ex).verdict);
    auto p = criticality_report(k4_pendant(), 4, ex);
    CHECK_FALSE(p.verdict);
    CHECK(p.per_vertex[4] == 4);
  }
  CHECK(is_vertex_critical(oracle::cycle(5), 3));
  CHECK_FALSE(is_vertex_critical(oracle::cycle(5), 4));
  CHECK_FALSE(is_vertex_critical(k4_pendant(), 4));
  CHECK(is_vertex_critical(w5(), 4));
  CHECK_THROWS_AS(criticality_report(oracle::complete(2), 0), ArgumentError);
}

TEST_CASE("extract critical subgraph") {
  auto a = extract_critical_subgraph(disjoint_union(oracle::complete(4), Graph(1)), 4);
  CHECK(a.graph == oracle::complete(4));
  CHECK(a.kept == VertexSet(5, {0, 1, 2, 3}));
  auto b = extract_critical_subgraph(oracle::complete(5), 4);
  CHECK(b.graph == oracle::complete(4));
  CHECK(b.kept == VertexSet(5, {1, 2, 3, 4}));
  auto c = extract_critical_subgraph(w5(), 4);
  CHECK(c.graph == w5());
  CHECK_THROWS_AS(extract_critical_subgraph(oracle::cycle(5), 4), PreconditionError);

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = oracle::random_graph(9, 0.5, rng);
    const std::size_t chi = chromatic_number(g).chi;
    for (std::size_t k = 1; k <= chi; ++k) {
      auto h = extract_critical_subgraph(g, k);
      CHECK(criticality_report(h.graph, k).verdict);
      CHECK(induced_subgraph(g, h.kept) == h.graph);
    }
  }
}

TEST_CASE("comparable nonadjacent pairs") {
  Graph p3(3, {{0, 1}, {1, 2}});
  CHECK(find_comparable_nonadjacent(p3) == std::make_pair(Vertex{0}, Vertex{2}));
  CHECK_FALSE(find_comparable_nonadjacent(oracle::cycle(5)));
  CHECK_FALSE(find_comparable_nonadjacent(oracle::complete(4)));
  // leaf 3 of the paw has N = {0}, contained in N(1)
  CHECK(find_comparable_nonadjacent(Graph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}})) ==
        std::make_pair(Vertex{3}, Vertex{1}));
}

TEST_CASE("anticomplete obstruction search") {
  Graph p3(3, {{0, 1}, {1, 2}});
  auto v = find_lemma_xy_violation(p3, 1);
  REQUIRE(v);
  CHECK(v->x == VertexSet(3, {0}));
  CHECK(v->y == VertexSet(3, {2}));
  CHECK_FALSE(find_lemma_xy_violation(oracle::complete(4), 2));
  CHECK_FALSE(find_lemma_xy_violation(oracle::cycle(5), 2));
  CHECK_FALSE(find_lemma_xy_violation(w5(), 3));
  CHECK_THROWS_AS(find_lemma_xy_violation(p3, 0), ArgumentError);
}

TEST_CASE("sperner constant") {
  CHECK(sperner_constant(1, 1) == 1);
  CHECK(sperner_constant(2, 1) == 2);
  CHECK(sperner_constant(2, 2) == 6);
  CHECK(sperner_constant(5, 4) == 184756);
  CHECK(sperner_constant(66, 1) == 7219428434016265740ULL);
  CHECK_THROWS_AS(sperner_constant(68, 1), OverflowError);
  CHECK_THROWS_AS(sperner_constant(0, 3), ArgumentError);
}

TEST_CASE("mixed trace partition and antichains") {
  // s1 = 0, s2 = 1, a = 2 ~ s1, b = 3 ~ both, c = 4 ~ s1
  Graph g(5, {{2, 0}, {3, 0}, {3, 1}, {4, 0}});
  auto t = mixed_trace_partition(g, VertexSet(5, {0, 1}));
  CHECK(t.mixed == VertexSet(5, {2, 4}));
  REQUIRE(t.classes.size() == 1);
  CHECK(t.classes[0] == VertexSet(5, {2, 4}));
  CHECK(t.representatives == VertexSet(5, {2}));

  Graph two_p2(4, {{0, 1}, {2, 3}});
  auto u = mixed_trace_partition(two_p2, VertexSet(4, {0, 2}));
  CHECK(u.mixed == VertexSet(4, {1, 3}));
  CHECK(u.classes.size() == 2);
  CHECK(u.representatives == VertexSet(4, {1, 3}));
  CHECK(mixed_trace_partition(oracle::complete(3), VertexSet(3, {0})).mixed.empty());
  CHECK_THROWS_AS(mixed_trace_partition(two_p2, VertexSet(4, {0, 1})), ArgumentError);

  CHECK(antichain_check(two_p2, VertexSet(4, {0, 2}), VertexSet(4, {1, 3})));
  CHECK_FALSE(antichain_check(Graph(3, {{0, 1}, {1, 2}}), VertexSet(3, {0, 2}), VertexSet(3, {1})));
}

TEST_CASE("critical database io") {
  CriticalDb db{4, {PatternSpec::path(5), PatternSpec::plus_isolated(PatternSpec::path(4), 1)},
                {"C~", "ELrw"}};
  std::stringstream ss;
  write_critical_db(ss, db);
  CHECK(ss.str() == "#critdb k=4 family=P5,P4+P1\nC~\nELrw\n");
  CriticalDb back = read_critical_db(ss);
  CHECK(back.k == 4);
  CHECK(back.family == db.family);
  CHECK(back.members == db.members);

  std::stringstream empty_family("#critdb k=3 family=\n");
  CHECK(read_critical_db(empty_family).family.empty());

  std::stringstream bad("#critdb k=4 family=P5\nC~\nC\n");
  try {
    (void)read_critical_db(bad);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  std::stringstream no_header("C~\n");
  CHECK_THROWS_AS(read_critical_db(no_header), ParseError);
}

TEST_CASE("certification examples") {
  const CriticalDb db = k4_db();
  auto neg = certify_k_colorable(oracle::complete(5), 3, db);
  REQUIRE(std::holds_alternative<CriticalWitness>(neg));
  const auto& w = std::get<CriticalWitness>(neg);
  CHECK(is_induced_embedding(oracle::complete(5), oracle::complete(4), w.embedding));

  auto pos = certify_k_colorable(oracle::cycle(4), 3, db);
  REQUIRE(std::holds_alternative<Coloring>(pos));
  CHECK(std::get<Coloring>(pos).palette_size == 2);

  Graph paw(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
  auto p = certify_k_colorable(paw, 3, db);
  REQUIRE(std::holds_alternative<Coloring>(p));
  CHECK(std::get<Coloring>(p).palette_size == 3);
  CHECK(is_proper_coloring(paw, std::get<Coloring>(p)));

  CHECK_THROWS_AS(certify_k_colorable(oracle::cycle(5), 3, db), PreconditionError);
  CHECK_THROWS_AS(certify_k_colorable(oracle::complete(5), 4, db), ArgumentError);

  CriticalDb hollow{4, {PatternSpec::path(4)}, {}};
  try {
    (void)certify_k_colorable(oracle::complete(5), 3, hollow);
    CHECK(false);
  } catch (const IncompleteDatabaseError& e) {
    CHECK(e.missing_graph6() == "C~");
  }
}

TEST_CASE("verdict is invariant under relabeling") {
  std::mt19937_64 rng(31);
  for (const Graph& g : enumerate_graphs(6)) {
    if (rng() % 3 != 0) continue;
    const std::size_t chi = chromatic_number(g).chi;
    const bool verdict = criticality_report(g, chi).verdict;
    for (int i = 0; i < 5; ++i) {
      Graph h = relabel(g, oracle::random_permutation(6, rng));
      CHECK(canonical_form(h) == canonical_form(g));
      CHECK(criticality_report(h, chi).verdict == verdict);
      CHECK(is_vertex_critical(h, chi) == verdict);
    }
  }
}

TEST_CASE("certification agrees with exact colouring on cographs") {
  for (std::size_t k = 2; k <= 4; ++k) {
    const CriticalDb db{k + 1, {PatternSpec::path(4)}, {to_graph6(oracle::complete(k + 1))}};
    for (std::size_t n = 1; n <= 8; ++n) {
      for (const Graph& g : enumerate_graphs(n, db.family)) {
        const auto cert = certify_k_colorable(g, k, db);
        const bool colourable = is_k_colorable(g, k).has_value();
        CHECK(std::holds_alternative<Coloring>(cert) == colourable);
        if (const auto* w = std::get_if<CriticalWitness>(&cert)) {
          CHECK(is_induced_embedding(g, oracle::complete(k + 1), w->embedding));
        }
      }
    }
  }
}

TEST_CASE("critical graphs satisfy the obstruction properties") {
  for (std::size_t k = 2; k <= 5; ++k) {
    for (const auto& text : enumerate_critical(k, 8, {}).members) {
      const Graph g = parse_graph6(text);
      CHECK(min_degree(g) + 1 >= k);
      CHECK_FALSE(find_comparable_nonadjacent(g));
      const std::size_t n = g.order();
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        if (std::popcount(mask) < 2) continue;
        VertexSet s(n);
        for (Vertex v = 0; v < n; ++v) {
          if ((mask >> v) & 1U) s.insert(v);
        }
        if (!is_independent(g, s)) continue;
        const auto t = mixed_trace_partition(g, s);
        CHECK(antichain_check(g, s, t.representatives));
      }
    }
  }
}
