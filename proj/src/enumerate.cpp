#include "critcol/enumerate.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <string>
#include <unordered_set>

#include "critcol/chroma.hpp"
#include "critcol/error.hpp"

namespace critcol {

namespace {

void check_budget(std::size_t n) {
  if (n > kEnumerateMaxOrder) {
    throw BudgetError("enumeration supports at most " + std::to_string(kEnumerateMaxOrder) +
                      " vertices, got " + std::to_string(n));
  }
}

// Canonical texts of every filter-free one-vertex extension of `parent`.
template <typename Sink>
void extend(const Graph& parent, const PatternSet& filters, Sink&& sink) {
  const std::size_t m = parent.order();
  const std::uint64_t subsets = std::uint64_t{1} << m;
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    VertexSet nbrs(m);
    for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1) {
      nbrs.insert(static_cast<Vertex>(std::countr_zero(bits)));
    }
    const Graph child = parent.with_new_vertex(nbrs);
    if (!filters.empty() && !filters.is_free_through(child, m)) continue;
    sink(canonical_form(child).text);
  }
}

// Reference expansion: one thread, ordered set.
std::vector<Graph> next_level_serial(const std::vector<Graph>& parents, const PatternSet& filters,
                                     const std::function<bool(const Graph&)>& hereditary) {
  std::set<std::string> seen;
  for (const Graph& p : parents) {
    extend(p, filters, [&](std::string text) { seen.insert(std::move(text)); });
  }
  std::vector<Graph> out;
  for (const auto& text : seen) {
    Graph g = parse_graph6(text);
    if (hereditary && !hereditary(g)) continue;
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<Graph> next_level_parallel(const std::vector<Graph>& parents,
                                       const PatternSet& filters,
                                       const std::function<bool(const Graph&)>& hereditary) {
  std::unordered_set<std::string> merged;
  const auto count = static_cast<std::ptrdiff_t>(parents.size());
#pragma omp parallel
  {
    std::unordered_set<std::string> local;
#pragma omp for schedule(dynamic, 4)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      extend(parents[static_cast<std::size_t>(i)], filters,
             [&](std::string text) { local.insert(std::move(text)); });
    }
#pragma omp critical(critcol_enumerate_merge)
    merged.merge(local);
  }
  std::vector<std::string> texts(merged.begin(), merged.end());
  std::sort(texts.begin(), texts.end());

  std::vector<Graph> graphs(texts.size());
  std::vector<char> keep(texts.size(), 1);
  const auto total = static_cast<std::ptrdiff_t>(texts.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < total; ++i) {
    const auto j = static_cast<std::size_t>(i);
    graphs[j] = parse_graph6(texts[j]);
    if (hereditary && !hereditary(graphs[j])) keep[j] = 0;
  }
  std::vector<Graph> out;
  out.reserve(graphs.size());
  for (std::size_t j = 0; j < graphs.size(); ++j) {
    if (keep[j]) out.push_back(std::move(graphs[j]));
  }
  return out;
}

}  // namespace

void enumerate_levels(std::size_t n_max, const EnumerateOptions& options,
                      const std::function<void(std::size_t, const std::vector<Graph>&)>& visit) {
  check_budget(n_max);
  const PatternSet filters(options.filters);
  std::vector<Graph> level{Graph(0)};
  visit(0, level);
  for (std::size_t m = 1; m <= n_max; ++m) {
    level = options.execution == Execution::parallel
                ? next_level_parallel(level, filters, options.hereditary)
                : next_level_serial(level, filters, options.hereditary);
    visit(m, level);
  }
}

std::vector<Graph> enumerate_graphs(std::size_t n, const EnumerateOptions& options) {
  std::vector<Graph> result;
  enumerate_levels(n, options, [&](std::size_t m, const std::vector<Graph>& graphs) {
    if (m == n) result = graphs;
  });
  if (options.connected_only) std::erase_if(result, [](const Graph& g) { return !is_connected(g); });
  return result;
}

std::vector<Graph> enumerate_graphs(std::size_t n, const std::vector<PatternSpec>& filters,
                                    bool connected_only) {
  EnumerateOptions options;
  options.filters = filters;
  options.connected_only = connected_only;
  return enumerate_graphs(n, options);
}

CriticalDb enumerate_critical(std::size_t k, std::size_t n_max,
                              const std::vector<PatternSpec>& family, Execution execution) {
  if (k < 1) throw ArgumentError("criticality needs k >= 1");
  check_budget(n_max);
  CriticalDb db{k, family, {}};
  EnumerateOptions options;
  options.filters = family;
  options.execution = execution;
  // Every k-critical graph is k-colourable, and so is each of its induced
  // subgraphs, so generation never needs to leave the k-colourable graphs.
  options.hereditary = [k](const Graph& g) { return is_k_colorable(g, k).has_value(); };

  enumerate_levels(n_max, options, [&](std::size_t m, const std::vector<Graph>& graphs) {
    if (m == 0) return;
    std::vector<char> hit(graphs.size(), 0);
    const auto total = static_cast<std::ptrdiff_t>(graphs.size());
    const bool parallel = execution == Execution::parallel;
    (void)parallel;
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
    for (std::ptrdiff_t i = 0; i < total; ++i) {
      const Graph& g = graphs[static_cast<std::size_t>(i)];
      if (!is_connected(g)) continue;
      if (min_degree(g) + 1 < k) continue;
      if (find_comparable_nonadjacent(g)) continue;
      if (!is_vertex_critical(g, k)) continue;
      hit[static_cast<std::size_t>(i)] = 1;
    }
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      if (hit[i]) db.members.push_back(to_graph6(graphs[i]));
    }
  });
  return db;
}

IngestResult ingest_graph6_stream(std::istream& in, bool abort_on_error) {
  IngestResult result;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      result.graphs.push_back(parse_graph6(line));
    } catch (const ParseError& e) {
      if (abort_on_error) throw ParseError(e.detail(), e.offset(), line_no);
      result.errors.push_back({line_no, e.what()});
    }
  }
  return result;
}

}  // namespace critcol
