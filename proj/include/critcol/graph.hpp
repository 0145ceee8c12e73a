#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace critcol {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr std::size_t kDefaultVertexCap = 512;

/// A subset of {0, ..., universe-1}, stored as a packed bit row.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe);
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);

  static VertexSet full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }
  bool contains(Vertex v) const noexcept {
    return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1U) != 0;
  }
  void insert(Vertex v);
  void erase(Vertex v);

  std::size_t size() const noexcept;
  bool empty() const noexcept;
  /// Least member, if any.
  std::optional<Vertex> front() const noexcept;
  std::vector<Vertex> to_vector() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      for (std::uint64_t bits = words_[w]; bits != 0; bits &= bits - 1) {
        f(static_cast<Vertex>(w * 64 + std::countr_zero(bits)));
      }
    }
  }

  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;
  VertexSet complement() const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  bool operator==(const VertexSet&) const = default;

  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::span<std::uint64_t> words() noexcept { return words_; }

  /// "{0,2,5}"
  std::string to_string() const;

 private:
  void require_same_universe(const VertexSet& other) const;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Loop-free undirected graph on vertices 0..order-1 with a dense symmetric
/// adjacency bit matrix. Operations in this library never mutate their
/// arguments; add_edge/remove_edge exist for building values.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t order, std::size_t vertex_cap = kDefaultVertexCap);
  Graph(std::size_t order, std::initializer_list<Edge> edges);

  std::size_t order() const noexcept { return order_; }
  std::size_t edge_count() const noexcept;
  std::size_t words_per_row() const noexcept { return stride_; }

  bool adjacent(Vertex u, Vertex v) const noexcept {
    return u < order_ && v < order_ &&
           ((bits_[u * stride_ + (v >> 6)] >> (v & 63)) & 1U) != 0;
  }
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  std::size_t degree(Vertex v) const;
  VertexSet neighbors(Vertex v) const;
  std::span<const std::uint64_t> row(Vertex v) const noexcept {
    return {bits_.data() + v * stride_, stride_};
  }
  std::vector<Edge> edges() const;
  VertexSet vertices() const { return VertexSet::full(order_); }
  /// Copy with one extra vertex, numbered order(), adjacent to `neighbours`.
  Graph with_new_vertex(const VertexSet& neighbours) const;

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(Vertex v) const;
  std::uint64_t& word(Vertex u, Vertex v) noexcept {
    return bits_[u * stride_ + (v >> 6)];
  }

  std::size_t order_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> bits_;
};

// graph6 interchange. parse_graph6 accepts one line without its terminator and
// throws ParseError naming the offending byte offset.
Graph parse_graph6(std::string_view text, std::size_t vertex_cap = kDefaultVertexCap);
std::string to_graph6(const Graph& g);

Graph induced_subgraph(const Graph& g, const VertexSet& s);
Graph relabel(const Graph& g, std::span<const Vertex> new_label);

VertexSet neighborhood(const Graph& g, Vertex v);
VertexSet closed_neighborhood(const Graph& g, Vertex v);
/// N(S): vertices outside S with a neighbour in S.
VertexSet set_neighborhood(const Graph& g, const VertexSet& s);
/// N[S] = N(S) ∪ S.
VertexSet closed_set_neighborhood(const Graph& g, const VertexSet& s);

bool is_independent(const Graph& g, const VertexSet& s);
bool is_clique(const Graph& g, const VertexSet& s);
/// X and Y must be disjoint; throws ArgumentError otherwise.
bool is_complete_between(const Graph& g, const VertexSet& x, const VertexSet& y);
bool is_anticomplete_between(const Graph& g, const VertexSet& x, const VertexSet& y);
/// Vertices outside S adjacent to at least one and non-adjacent to at least
/// one member of S. S must be nonempty.
VertexSet mixed_vertices(const Graph& g, const VertexSet& s);

Graph disjoint_union(const Graph& g, const Graph& h);
/// Disjoint union plus every edge between the two parts.
Graph join(const Graph& g, const Graph& h);
Graph complement(const Graph& g);
Graph delete_vertex(const Graph& g, Vertex v);

/// Components ordered by least vertex.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);
std::size_t min_degree(const Graph& g);

}  // namespace critcol
