#pragma once

#include <cstdint>
#include <vector>

#include "critcol/chroma.hpp"
#include "critcol/graph.hpp"

namespace critcol {

/// Palette bound for (P4 + l P1, K_k)-free graphs:
///   l^(k-2) + 2 l^(k-3) + ... + (k-2) l + (k-1),  k >= 3, l >= 0 (0^0 = 1).
/// Throws ArgumentError for k < 3 and OverflowError past 64 bits.
std::uint64_t bound_f(std::size_t k, std::size_t l);

/// Colouring plus the top-level split it was built from: the independent set
/// S, the blocks S_i (neighbours of the i-th vertex of S that are not adjacent
/// to earlier ones) and the remainder G - N[S].
struct ConstructiveColoring {
  Coloring coloring;
  VertexSet s;
  std::vector<VertexSet> blocks;
  VertexSet remainder;
};

struct ConstructOptions {
  /// Skip the family check; the palette bound is then not guaranteed and a
  /// non-P4-free remainder raises PreconditionError.
  bool skip_precondition = false;
};

/// Greedy independent set: least-indexed vertex nonadjacent to all chosen,
/// stopping at `limit` members.
VertexSet greedy_independent_set(const Graph& g, std::size_t limit);

/// S_1..S_|S| in the order of S's members.
std::vector<VertexSet> neighbourhood_blocks(const Graph& g, const VertexSet& s);

/// Colours a (P4 + l P1, K3)-free graph with at most l + 2 colours.
ConstructiveColoring color_k3_free(const Graph& g, std::size_t l,
                                   ConstructOptions options = {});

/// Colours a (P4 + l P1, K_clique)-free graph with at most
/// bound_f(clique, l) colours, recursing on the blocks with clique - 1.
ConstructiveColoring color_kk_free(const Graph& g, std::size_t l, std::size_t clique,
                                   ConstructOptions options = {});

}  // namespace critcol
