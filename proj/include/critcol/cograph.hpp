#pragma once

#include <optional>
#include <string>
#include <vector>

#include "critcol/chroma.hpp"
#include "critcol/error.hpp"
#include "critcol/graph.hpp"

namespace critcol {

/// Union/join decomposition of a P4-free graph. Union and Join alternate along
/// every root-to-leaf path and every internal node has at least two children,
/// ordered by least leaf.
class Cotree {
 public:
  enum class Kind { leaf, union_of, join };

  static Cotree leaf(Vertex v);
  static Cotree node(Kind kind, std::vector<Cotree> children);

  Kind kind() const noexcept { return kind_; }
  Vertex vertex() const noexcept { return vertex_; }
  const std::vector<Cotree>& children() const noexcept { return children_; }

  std::size_t leaf_count() const;
  Vertex min_leaf() const;
  /// Graph on leaf_count() vertices whose adjacency the tree describes.
  Graph realize() const;
  /// Shape invariants: alternation, arity >= 2, leaves biject with 0..n-1.
  bool is_well_formed() const;
  /// "U(0,J(1,2))"
  std::string to_string() const;

  bool operator==(const Cotree&) const = default;

 private:
  Kind kind_ = Kind::leaf;
  Vertex vertex_ = 0;
  std::vector<Cotree> children_;
};

/// Cotree of `g` if it is P4-free, by repeatedly removing one vertex of a twin
/// pair and re-inserting in reverse order.
std::optional<Cotree> recognize(const Graph& g);

/// Optimal colouring via the cotree: unions reuse colours, joins offset them.
/// Uses exactly the clique number of the realized graph.
Coloring cograph_color(const Cotree& t);

/// Anticomplete sets X, Y with common neighbourhood W = N(X) = N(Y) != {},
/// X and Y both complete to W.
struct AnticompletePair {
  VertexSet x;
  VertexSet y;
  VertexSet w;
};

class AnticompletePairError : public PreconditionError {
 public:
  enum class Reason { disconnected, has_induced_p4, no_induced_p3 };

  AnticompletePairError(Reason reason, const std::string& what)
      : PreconditionError(what), reason_(reason) {}
  Reason reason() const noexcept { return reason_; }

 private:
  Reason reason_;
};

/// Constructive form of the anticomplete-pair lemma for connected P4-free
/// graphs containing an induced P3. Twins are found by lexicographic pair
/// scan preferring false twins; true twins are peeled off and re-inserted
/// next to their partner. The result is re-verified before returning.
AnticompletePair find_anticomplete_pair(const Graph& g);

/// Checks every AnticompletePair invariant against `g`.
bool verify_anticomplete_pair(const Graph& g, const AnticompletePair& pair);

}  // namespace critcol
