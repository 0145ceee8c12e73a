#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "critcol/critical.hpp"
#include "critcol/graph.hpp"
#include "critcol/parallel.hpp"
#include "critcol/patterns.hpp"

namespace critcol {

inline constexpr std::size_t kCanonicalMaxOrder = 16;
inline constexpr std::size_t kEnumerateMaxOrder = 10;

/// graph6 of a canonical relabeling: equal text iff isomorphic graphs.
struct CanonicalForm {
  std::string text;
  auto operator<=>(const CanonicalForm&) const = default;
};

/// new_label[v] for the canonical relabeling. Equitable partition refinement
/// individualizes the first non-singleton cell; leaves are compared on the
/// graph6 bit string and the least one wins. Automorphisms found between equal
/// leaves prune sibling branches in the same orbit.
/// Throws BudgetError for order above kCanonicalMaxOrder.
std::vector<Vertex> canonical_labeling(const Graph& g);
CanonicalForm canonical_form(const Graph& g);
Graph canonical_graph(const Graph& g);

struct EnumerateOptions {
  std::vector<PatternSpec> filters;
  bool connected_only = false;
  /// Extra hereditary predicate; failing graphs are dropped and never extended.
  std::function<bool(const Graph&)> hereditary;
  Execution execution = Execution::parallel;
};

/// One canonically labeled representative per isomorphism class of n-vertex
/// graphs free of every filter (connected if asked), in canonical-text order.
/// Built by vertex augmentation of the (n-1)-vertex survivors.
/// Throws BudgetError for n above kEnumerateMaxOrder.
std::vector<Graph> enumerate_graphs(std::size_t n, const EnumerateOptions& options);
std::vector<Graph> enumerate_graphs(std::size_t n, const std::vector<PatternSpec>& filters = {},
                                    bool connected_only = false);

/// Calls `visit(order, graphs)` for every order 0..n_max with the survivors at
/// that order (not restricted to connected graphs).
void enumerate_levels(std::size_t n_max, const EnumerateOptions& options,
                      const std::function<void(std::size_t, const std::vector<Graph>&)>& visit);

/// All k-vertex-critical family-free graphs on at most n_max vertices, by
/// ascending order then canonical text. Generation is restricted to
/// k-colourable graphs (hereditary); candidates then pass connectivity,
/// minimum degree >= k-1 and the comparable-neighbourhood filter before the
/// exact criticality check.
CriticalDb enumerate_critical(std::size_t k, std::size_t n_max,
                              const std::vector<PatternSpec>& family,
                              Execution execution = Execution::parallel);

struct IngestError {
  std::size_t line = 0;
  std::string message;
};

struct IngestResult {
  std::vector<Graph> graphs;
  std::vector<IngestError> errors;
};

/// One graph6 per line; blank lines are skipped. Malformed lines are
/// collected, or rethrown with their line number when abort_on_error is set.
IngestResult ingest_graph6_stream(std::istream& in, bool abort_on_error = false);

}  // namespace critcol
