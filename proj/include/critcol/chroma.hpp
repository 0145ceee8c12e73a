#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "critcol/graph.hpp"

namespace critcol {

using Colour = std::uint32_t;

/// Total map vertex -> colour in 1..palette_size.
struct Coloring {
  std::size_t palette_size = 0;
  std::vector<Colour> colour;

  /// Number of distinct colours actually assigned.
  std::size_t used_colours() const;
  /// "1 2 1 3"
  std::string to_string() const;
  bool operator==(const Coloring&) const = default;
};

/// Proper, total, and every colour within 1..palette_size.
bool is_proper_coloring(const Graph& g, const Coloring& c);

/// Renumbers colours to 1..used in order of first use by colour value, so no
/// class is empty and palette_size == used_colours().
Coloring compact(Coloring c);

/// Node budget for the exact searches; exceeding it throws BudgetError.
struct SearchBudget {
  std::optional<std::uint64_t> max_nodes;
};

VertexSet maximum_clique(const Graph& g);
std::size_t clique_number(const Graph& g);
std::size_t independence_number(const Graph& g);

/// DSATUR greedy colouring; an upper bound on the chromatic number.
Coloring greedy_coloring(const Graph& g);

/// A proper colouring with at most k colours, or nothing. Branches on the
/// vertex with fewest feasible colours, then highest degree, then least index;
/// a vertex may open at most one new colour.
std::optional<Coloring> is_k_colorable(const Graph& g, std::size_t k,
                                       SearchBudget budget = {});

struct ChromaticResult {
  std::size_t chi = 0;
  Coloring coloring;
};

/// Searches k upward from the clique number to the greedy bound.
ChromaticResult chromatic_number(const Graph& g, SearchBudget budget = {});

}  // namespace critcol
