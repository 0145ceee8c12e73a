#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "critcol/chroma.hpp"
#include "critcol/error.hpp"
#include "critcol/graph.hpp"
#include "critcol/parallel.hpp"
#include "critcol/patterns.hpp"

namespace critcol {

/// Chromatic data witnessing or refuting k-vertex-criticality.
/// verdict == (chi == k && every per_vertex entry == k - 1).
struct CritReport {
  std::size_t k = 0;
  std::size_t chi = 0;
  std::vector<std::size_t> per_vertex;  // chi(G - v)
  bool verdict = false;
};

CritReport criticality_report(const Graph& g, std::size_t k,
                              Execution execution = Execution::parallel);

/// Same verdict as criticality_report without computing every chi exactly.
bool is_vertex_critical(const Graph& g, std::size_t k);

struct CriticalSubgraph {
  VertexSet kept;  // vertices of g that remain
  Graph graph;     // induced on `kept`, order-preserving labels
};

/// Deletes the least-indexed vertex whose removal keeps chi >= k until none
/// remains. Throws PreconditionError if chi(g) < k.
CriticalSubgraph extract_critical_subgraph(const Graph& g, std::size_t k);

/// Least (u, v) in lexicographic order with u, v nonadjacent and N(u) ⊆ N(v).
/// Never found in a vertex-critical graph.
std::optional<std::pair<Vertex, Vertex>> find_comparable_nonadjacent(const Graph& g);

struct XYViolation {
  VertexSet x;
  VertexSet y;
};

/// Nonempty disjoint X, Y with |X|, |Y| <= size_cap such that X and Y are
/// anticomplete, chi(G[X]) <= chi(G[Y]) and Y is complete to N(X). Searched in
/// order of (|X| + |Y|, X, Y) with sets compared as sorted sequences.
std::optional<XYViolation> find_lemma_xy_violation(const Graph& g, std::size_t size_cap);

/// Central binomial coefficient C(k*l, floor(k*l/2)); OverflowError past 64 bits.
std::uint64_t sperner_constant(std::size_t k, std::size_t l);

struct TracePartition {
  VertexSet mixed;                 // M: vertices mixed on S
  std::vector<VertexSet> classes;  // M split by trace N(v) ∩ S, by least member
  VertexSet representatives;       // U: least member of every class
};

/// S must be independent (ArgumentError otherwise).
TracePartition mixed_trace_partition(const Graph& g, const VertexSet& s);

/// True iff the traces N(s) ∩ U, s in S, are pairwise incomparable.
bool antichain_check(const Graph& g, const VertexSet& s, const VertexSet& u);

/// Database of k-vertex-critical graphs free of `family`, stored as canonical
/// graph6 strings.
///
/// File format:
///   #critdb k=<k> family=<spec,spec,...>
///   <graph6>
///   ...
struct CriticalDb {
  std::size_t k = 0;
  std::vector<PatternSpec> family;
  std::vector<std::string> members;
};

void write_critical_db(std::ostream& out, const CriticalDb& db);
CriticalDb read_critical_db(std::istream& in);
CriticalDb load_critical_db(const std::string& path);
void save_critical_db(const std::string& path, const CriticalDb& db);

/// Negative certificate: a database member found as an induced subgraph.
struct CriticalWitness {
  std::size_t member_index = 0;
  std::string member;
  Embedding embedding;
};

using Certificate = std::variant<Coloring, CriticalWitness>;

/// Raised when g is not k-colourable yet contains no database member. Carries
/// a (k+1)-vertex-critical induced subgraph missing from the database.
class IncompleteDatabaseError : public Error {
 public:
  IncompleteDatabaseError(const std::string& what, std::string missing_graph6)
      : Error(what), missing_(std::move(missing_graph6)) {}
  const std::string& missing_graph6() const noexcept { return missing_; }

 private:
  std::string missing_;
};

/// Decides k-colourability of a graph in db.family with a checkable witness
/// either way. Requires db.k == k + 1; throws PreconditionError naming the
/// violated pattern if g is outside the family.
Certificate certify_k_colorable(const Graph& g, std::size_t k, const CriticalDb& db);

}  // namespace critcol
