#include "critcol/construct.hpp"

#include <limits>
#include <sstream>

#include "critcol/cograph.hpp"
#include "critcol/error.hpp"
#include "critcol/patterns.hpp"

namespace critcol {

std::uint64_t bound_f(std::size_t k, std::size_t l) {
  if (k < 3) throw ArgumentError("bound_f needs k >= 3");
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  unsigned __int128 total = 0;
  unsigned __int128 power = 1;  // l^(k-1-i), built from i = k-1 downwards
  for (std::size_t i = k - 1; i >= 1; --i) {
    total += static_cast<unsigned __int128>(i) * power;
    if (total > kMax) throw OverflowError("bound_f overflows 64 bits");
    if (i == 1) break;
    power *= l;
    if (power > kMax) throw OverflowError("bound_f overflows 64 bits");
  }
  return static_cast<std::uint64_t>(total);
}

VertexSet greedy_independent_set(const Graph& g, std::size_t limit) {
  VertexSet s(g.order());
  VertexSet blocked(g.order());
  for (Vertex v = 0; v < g.order() && s.size() < limit; ++v) {
    if (blocked.contains(v)) continue;
    s.insert(v);
    blocked |= g.neighbors(v);
  }
  return s;
}

std::vector<VertexSet> neighbourhood_blocks(const Graph& g, const VertexSet& s) {
  std::vector<VertexSet> blocks;
  VertexSet claimed = s;
  s.for_each([&](Vertex v) {
    VertexSet block = g.neighbors(v) - claimed;
    claimed |= block;
    blocks.push_back(std::move(block));
  });
  return blocks;
}

namespace {

void check_family(const Graph& g, std::size_t l, std::size_t clique) {
  const std::vector<PatternSpec> family{
      PatternSpec::plus_isolated(PatternSpec::path(4), l), PatternSpec::clique(clique)};
  if (auto v = find_violation(g, family)) {
    std::ostringstream what;
    what << "graph is not " << v->spec.to_string() << "-free (induced copy at";
    for (Vertex h : v->embedding) what << ' ' << h;
    what << ')';
    throw PreconditionError(what.str());
  }
}

Coloring color_p4_free(const Graph& g) {
  if (g.order() == 0) return Coloring{};
  auto tree = recognize(g);
  if (!tree) throw PreconditionError("remainder is not P4-free");
  return cograph_color(*tree);
}

/// The shared split: colour 1 on S, blocks coloured by `color_block` on
/// consecutive fresh colours, remainder coloured as a cograph reusing colour 1.
template <typename BlockColourer>
ConstructiveColoring split_and_color(const Graph& g, std::size_t l, BlockColourer color_block) {
  const std::size_t n = g.order();
  ConstructiveColoring out;
  out.coloring = Coloring{0, std::vector<Colour>(n, 0)};
  out.s = greedy_independent_set(g, l);
  out.blocks = neighbourhood_blocks(g, out.s);
  out.remainder = g.vertices() - closed_set_neighborhood(g, out.s);

  auto& colour = out.coloring.colour;
  out.s.for_each([&](Vertex v) { colour[v] = 1; });
  Colour next = 2;
  for (const auto& block : out.blocks) {
    if (block.empty()) continue;
    const auto members = block.to_vector();
    const Coloring local = color_block(induced_subgraph(g, block));
    for (std::size_t i = 0; i < members.size(); ++i) colour[members[i]] = next + local.colour[i] - 1;
    next += static_cast<Colour>(local.palette_size);
  }
  if (!out.remainder.empty()) {
    const auto members = out.remainder.to_vector();
    const Coloring local = color_p4_free(induced_subgraph(g, out.remainder));
    for (std::size_t i = 0; i < members.size(); ++i) {
      colour[members[i]] = local.colour[i] == 1 ? 1 : next + local.colour[i] - 2;
    }
  }
  out.coloring.palette_size = n == 0 ? 0 : 1;
  for (Colour c : colour) out.coloring.palette_size = std::max<std::size_t>(out.coloring.palette_size, c);
  out.coloring = compact(std::move(out.coloring));
  return out;
}

ConstructiveColoring cograph_only(const Graph& g) {
  ConstructiveColoring out;
  out.coloring = color_p4_free(g);
  out.s = VertexSet(g.order());
  out.remainder = g.vertices();
  return out;
}

}  // namespace

ConstructiveColoring color_k3_free(const Graph& g, std::size_t l, ConstructOptions options) {
  if (!options.skip_precondition) check_family(g, l, 3);
  if (l == 0) return cograph_only(g);
  return split_and_color(g, l, [](const Graph& block) {
    // a block is independent in a triangle-free graph
    if (block.edge_count() != 0) throw PreconditionError("graph contains a triangle");
    return Coloring{block.order() == 0 ? 0u : 1u, std::vector<Colour>(block.order(), 1)};
  });
}

ConstructiveColoring color_kk_free(const Graph& g, std::size_t l, std::size_t clique,
                                   ConstructOptions options) {
  if (clique < 3) throw ArgumentError("clique parameter must be at least 3");
  if (!options.skip_precondition) check_family(g, l, clique);
  if (clique == 3) return color_k3_free(g, l, {.skip_precondition = true});
  if (l == 0) return cograph_only(g);
  return split_and_color(g, l, [&](const Graph& block) {
    return color_kk_free(block, l, clique - 1, {.skip_precondition = true}).coloring;
  });
}

}  // namespace critcol
