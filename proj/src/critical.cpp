#include "critcol/critical.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace critcol {

// ---------------------------------------------------------------- criticality

CritReport criticality_report(const Graph& g, std::size_t k, Execution execution) {
  if (k < 1) throw ArgumentError("criticality needs k >= 1");
  CritReport report;
  report.k = k;
  report.chi = chromatic_number(g).chi;
  const std::size_t n = g.order();
  report.per_vertex.assign(n, 0);
  const bool parallel = execution == Execution::parallel;
  (void)parallel;
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::size_t v = 0; v < n; ++v) {
    report.per_vertex[v] = chromatic_number(delete_vertex(g, v)).chi;
  }
  report.verdict = report.chi == k &&
                   std::all_of(report.per_vertex.begin(), report.per_vertex.end(),
                               [&](std::size_t c) { return c == k - 1; });
  return report;
}

bool is_vertex_critical(const Graph& g, std::size_t k) {
  if (k < 1) throw ArgumentError("criticality needs k >= 1");
  if (g.order() == 0) return false;
  if (!is_k_colorable(g, k) || is_k_colorable(g, k - 1)) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!is_k_colorable(delete_vertex(g, v), k - 1)) return false;
  }
  return true;
}

CriticalSubgraph extract_critical_subgraph(const Graph& g, std::size_t k) {
  if (k < 1) throw ArgumentError("criticality needs k >= 1");
  if (is_k_colorable(g, k - 1)) {
    throw PreconditionError("chromatic number is below " + std::to_string(k));
  }
  VertexSet kept = g.vertices();
  // A vertex that is not deletable stays non-deletable after later deletions,
  // so one ascending pass finds every deletion.
  for (Vertex v = 0; v < g.order(); ++v) {
    VertexSet trial = kept;
    trial.erase(v);
    if (!is_k_colorable(induced_subgraph(g, trial), k - 1)) kept = std::move(trial);
  }
  return {kept, induced_subgraph(g, kept)};
}

// ------------------------------------------------------------ obstructions

std::optional<std::pair<Vertex, Vertex>> find_comparable_nonadjacent(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<VertexSet> nbhd;
  nbhd.reserve(n);
  for (Vertex v = 0; v < n; ++v) nbhd.push_back(g.neighbors(v));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u == v || g.adjacent(u, v)) continue;
      if (nbhd[u].is_subset_of(nbhd[v])) return std::make_pair(u, v);
    }
  }
  return std::nullopt;
}

namespace {

void subsets_up_to(std::size_t n, std::size_t cap, std::vector<Vertex>& current,
                   Vertex start, std::vector<std::vector<Vertex>>& out) {
  for (Vertex v = start; v < n; ++v) {
    current.push_back(v);
    out.push_back(current);
    if (current.size() < cap) subsets_up_to(n, cap, current, v + 1, out);
    current.pop_back();
  }
}

}  // namespace

std::optional<XYViolation> find_lemma_xy_violation(const Graph& g, std::size_t size_cap) {
  if (size_cap < 1) throw ArgumentError("size cap must be at least 1");
  const std::size_t n = g.order();
  std::vector<std::vector<Vertex>> subsets;
  std::vector<Vertex> scratch;
  subsets_up_to(n, size_cap, scratch, 0, subsets);
  std::sort(subsets.begin(), subsets.end());

  struct Candidate {
    VertexSet set;
    VertexSet neighbourhood;
    std::size_t chi;
    std::size_t size;
  };
  std::vector<Candidate> cands;
  cands.reserve(subsets.size());
  for (const auto& members : subsets) {
    VertexSet s(n);
    for (Vertex v : members) s.insert(v);
    auto nb = set_neighborhood(g, s);
    const std::size_t chi = chromatic_number(induced_subgraph(g, s)).chi;
    cands.push_back({std::move(s), std::move(nb), chi, members.size()});
  }

  for (std::size_t total = 2; total <= 2 * size_cap; ++total) {
    for (const auto& x : cands) {
      if (x.size >= total || total - x.size > size_cap) continue;
      for (const auto& y : cands) {
        if (x.size + y.size != total) continue;
        if (x.set.intersects(y.set) || x.neighbourhood.intersects(y.set)) continue;
        if (x.chi > y.chi) continue;
        if (!is_complete_between(g, y.set, x.neighbourhood)) continue;
        return XYViolation{x.set, y.set};
      }
    }
  }
  return std::nullopt;
}

std::uint64_t sperner_constant(std::size_t k, std::size_t l) {
  if (k < 1 || l < 1) throw ArgumentError("sperner constant needs k >= 1 and l >= 1");
  unsigned __int128 n = static_cast<unsigned __int128>(k) * l;
  if (n > 1'000'000) throw OverflowError("k*l too large for a 64-bit binomial");
  const auto top = static_cast<std::uint64_t>(n);
  const std::uint64_t r = top / 2;
  unsigned __int128 value = 1;
  for (std::uint64_t i = 0; i < r; ++i) {
    value = value * (top - i) / (i + 1);
    if (value > std::numeric_limits<std::uint64_t>::max()) {
      throw OverflowError("C(" + std::to_string(top) + "," + std::to_string(r) +
                          ") exceeds 64 bits");
    }
  }
  return static_cast<std::uint64_t>(value);
}

TracePartition mixed_trace_partition(const Graph& g, const VertexSet& s) {
  if (!is_independent(g, s)) throw ArgumentError("S must be an independent set");
  TracePartition out{mixed_vertices(g, s), {}, VertexSet(g.order())};
  std::vector<VertexSet> traces;
  out.mixed.for_each([&](Vertex v) {
    VertexSet trace = g.neighbors(v) & s;
    auto it = std::find(traces.begin(), traces.end(), trace);
    if (it == traces.end()) {
      traces.push_back(std::move(trace));
      out.classes.emplace_back(g.order());
      out.classes.back().insert(v);
      out.representatives.insert(v);
    } else {
      out.classes[static_cast<std::size_t>(it - traces.begin())].insert(v);
    }
  });
  return out;
}

bool antichain_check(const Graph& g, const VertexSet& s, const VertexSet& u) {
  const auto members = s.to_vector();
  std::vector<VertexSet> traces;
  for (Vertex v : members) traces.push_back(g.neighbors(v) & u);
  for (std::size_t i = 0; i < traces.size(); ++i) {
    for (std::size_t j = 0; j < traces.size(); ++j) {
      if (i != j && traces[i].is_subset_of(traces[j])) return false;
    }
  }
  return true;
}

// --------------------------------------------------------------- database

void write_critical_db(std::ostream& out, const CriticalDb& db) {
  out << "#critdb k=" << db.k << " family=" << pattern_list_to_string(db.family) << '\n';
  for (const auto& m : db.members) out << m << '\n';
}

CriticalDb read_critical_db(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw ParseError("empty critical database", 0, 1);
  if (!header.empty() && header.back() == '\r') header.pop_back();
  const std::string magic = "#critdb k=";
  if (!header.starts_with(magic)) throw ParseError("missing #critdb header", 0, 1);
  CriticalDb db;
  std::size_t pos = magic.size();
  std::size_t end = pos;
  while (end < header.size() && std::isdigit(static_cast<unsigned char>(header[end]))) ++end;
  if (end == pos) throw ParseError("expected k value", pos, 1);
  db.k = std::stoul(header.substr(pos, end - pos));
  const std::string fam = " family=";
  if (header.compare(end, fam.size(), fam) != 0) {
    throw ParseError("expected ' family='", end, 1);
  }
  try {
    db.family = parse_pattern_list(std::string_view(header).substr(end + fam.size()));
  } catch (const ParseError& e) {
    throw ParseError(e.detail(), end + fam.size() + e.offset(), 1);
  }

  std::string line;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      (void)parse_graph6(line);
    } catch (const ParseError& e) {
      throw ParseError("bad database member: " + e.detail(), e.offset(), line_no);
    }
    db.members.push_back(line);
  }
  return db;
}

CriticalDb load_critical_db(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open critical database '" + path + "'");
  return read_critical_db(in);
}

void save_critical_db(const std::string& path, const CriticalDb& db) {
  std::ofstream out(path);
  if (!out) throw ArgumentError("cannot write critical database '" + path + "'");
  write_critical_db(out, db);
}

// ------------------------------------------------------------ certification

Certificate certify_k_colorable(const Graph& g, std::size_t k, const CriticalDb& db) {
  if (db.k != k + 1) {
    throw ArgumentError("database holds " + std::to_string(db.k) +
                        "-vertex-critical graphs; certifying " + std::to_string(k) +
                        "-colourability needs " + std::to_string(k + 1));
  }
  if (auto v = find_violation(g, db.family)) {
    std::ostringstream what;
    what << "graph is not " << v->spec.to_string() << "-free (induced copy at";
    for (Vertex h : v->embedding) what << ' ' << h;
    what << ')';
    throw PreconditionError(what.str());
  }
  for (std::size_t i = 0; i < db.members.size(); ++i) {
    if (auto e = find_induced(g, parse_graph6(db.members[i]))) {
      return CriticalWitness{i, db.members[i], *e};
    }
  }
  if (auto c = is_k_colorable(g, k)) return *c;
  auto missing = extract_critical_subgraph(g, k + 1);
  throw IncompleteDatabaseError(
      "graph is not " + std::to_string(k) + "-colourable but contains no database member",
      to_graph6(missing.graph));
}

}  // namespace critcol
