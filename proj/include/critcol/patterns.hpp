#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "critcol/graph.hpp"

namespace critcol {

/// Symbolic description of a forbidden induced subgraph.
///
/// Canonical labelings produced by realize():
///   Path(n)       0-1-...-(n-1)
///   Clique(n)     K_n on 0..n-1
///   Star(m)       centre 0, leaves 1..m
///   Cycle(n)      0-1-...-(n-1)-0, n >= 3
///   Broom(n,m)    path u_1..u_n = 0..n-1, leaves w_1..w_m = n..n+m-1 on u_n
///   BroomPlus(m)  u_1,u_2,u_3,x = 0,1,2,3 with u_1u_2, u_2u_3, u_2x, u_3x;
///                 leaves w_1..w_m = 4..3+m on u_3
///   Chair         0-1-2 with 1-3-4
///   Bull          triangle 0,1,2; pendants 3 on 0 and 4 on 1
///   Cricket       triangle 0,1,2; pendants 3, 4 on 0
///   TwoP2         0-1, 2-3
///   Gem           path 0-1-2-3, vertex 4 adjacent to all
///   Union(a,b)    disjoint_union(realize(a), realize(b))
///   PlusIsolated  realize(base) followed by `count` isolated vertices
struct PatternSpec {
  enum class Kind {
    path,
    clique,
    star,
    cycle,
    broom,
    broom_plus,
    chair,
    bull,
    cricket,
    two_p2,
    gem,
    union_of,
    plus_isolated,
  };

  Kind kind = Kind::path;
  std::size_t a = 0;  // n, m, or the isolated count for plus_isolated
  std::size_t b = 0;  // m for broom
  std::vector<PatternSpec> parts;

  static PatternSpec path(std::size_t n) { return {Kind::path, n, 0, {}}; }
  static PatternSpec clique(std::size_t n) { return {Kind::clique, n, 0, {}}; }
  static PatternSpec star(std::size_t m) { return {Kind::star, m, 0, {}}; }
  static PatternSpec cycle(std::size_t n) { return {Kind::cycle, n, 0, {}}; }
  static PatternSpec broom(std::size_t n, std::size_t m) { return {Kind::broom, n, m, {}}; }
  static PatternSpec broom_plus(std::size_t m) { return {Kind::broom_plus, m, 0, {}}; }
  static PatternSpec chair() { return {Kind::chair, 0, 0, {}}; }
  static PatternSpec bull() { return {Kind::bull, 0, 0, {}}; }
  static PatternSpec cricket() { return {Kind::cricket, 0, 0, {}}; }
  static PatternSpec two_p2() { return {Kind::two_p2, 0, 0, {}}; }
  static PatternSpec gem() { return {Kind::gem, 0, 0, {}}; }
  static PatternSpec union_of(PatternSpec x, PatternSpec y) {
    return {Kind::union_of, 0, 0, {std::move(x), std::move(y)}};
  }
  static PatternSpec plus_isolated(PatternSpec base, std::size_t count) {
    return {Kind::plus_isolated, count, 0, {std::move(base)}};
  }

  /// Text in the CLI grammar; parse_pattern(to_string()) realizes identically.
  std::string to_string() const;

  bool operator==(const PatternSpec&) const = default;
};

/// Parses the CLI grammar (case-insensitive):
///   spec  := term ('+' term)*
///   term  := [count] base
///   base  := P<n> | K<n> | C<n> | star(m) | broom(n,m) | broomplus(m)
///          | chair | bull | cricket | gem
/// `2P2` is TwoP2, `<l>P1` after the first term adds l isolated vertices, any
/// other term is a disjoint union.
PatternSpec parse_pattern(std::string_view text);
/// Comma-separated list, commas inside parentheses belong to the spec.
std::vector<PatternSpec> parse_pattern_list(std::string_view text);
std::string pattern_list_to_string(std::span<const PatternSpec> specs);

Graph realize(const PatternSpec& spec);

/// Injective map pattern vertex -> host vertex with adjacency preserved in
/// both directions.
using Embedding = std::vector<Vertex>;

/// Backtracking search for an induced copy of `pattern` in `host`. Pattern
/// vertices are placed highest degree first, then by most placed neighbours;
/// host candidates are tried in increasing index, so the first embedding found
/// is the least one in that order.
std::optional<Embedding> find_induced(const Graph& host, const Graph& pattern);

/// As find_induced, restricted to embeddings whose image contains `anchor`.
std::optional<Embedding> find_induced_through(const Graph& host, const Graph& pattern,
                                              Vertex anchor);

bool is_induced_embedding(const Graph& host, const Graph& pattern,
                          std::span<const Vertex> map);

struct Violation {
  std::size_t index = 0;  // position in the spec list
  PatternSpec spec;
  Embedding embedding;
};

/// First violated spec with its embedding, or nothing if `g` is free of all.
std::optional<Violation> find_violation(const Graph& g, std::span<const PatternSpec> specs);
bool is_free(const Graph& g, std::span<const PatternSpec> specs);

/// Realized forbidden family, reusable across many freeness queries.
class PatternSet {
 public:
  PatternSet() = default;
  explicit PatternSet(std::vector<PatternSpec> specs);

  std::span<const PatternSpec> specs() const { return specs_; }
  std::span<const Graph> graphs() const { return graphs_; }
  bool empty() const { return specs_.empty(); }

  std::optional<Violation> find_violation(const Graph& g) const;
  bool is_free(const Graph& g) const { return !find_violation(g); }
  /// Freeness of `g` given that g - anchor is already known to be free.
  bool is_free_through(const Graph& g, Vertex anchor) const;

 private:
  std::vector<PatternSpec> specs_;
  std::vector<Graph> graphs_;
};

}  // namespace critcol
