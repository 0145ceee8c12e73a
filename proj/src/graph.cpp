#include "critcol/graph.hpp"

#include <algorithm>
#include <numeric>

#include "critcol/error.hpp"

namespace critcol {

namespace {

std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

void trim_tail(std::span<std::uint64_t> words, std::size_t universe) {
  if (universe % 64 != 0 && !words.empty()) {
    words.back() &= (std::uint64_t{1} << (universe % 64)) - 1;
  }
}

}  // namespace

// ---------------------------------------------------------------- VertexSet

VertexSet::VertexSet(std::size_t universe)
    : universe_(universe), words_(words_for(universe), 0) {}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
  trim_tail(s.words_, universe);
  return s;
}

void VertexSet::insert(Vertex v) {
  if (v >= universe_) {
    throw ArgumentError("vertex " + std::to_string(v) + " out of range for set over " +
                        std::to_string(universe_) + " vertices");
  }
  words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(Vertex v) {
  if (v < universe_) words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

std::size_t VertexSet::size() const noexcept {
  std::size_t count = 0;
  for (auto w : words_) count += static_cast<std::size_t>(std::popcount(w));
  return count;
}

bool VertexSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

std::optional<Vertex> VertexSet::front() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * 64 + static_cast<Vertex>(std::countr_zero(words_[w]));
  }
  return std::nullopt;
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

void VertexSet::require_same_universe(const VertexSet& other) const {
  if (other.universe_ != universe_) {
    throw ArgumentError("vertex sets over different universes (" +
                        std::to_string(universe_) + " vs " +
                        std::to_string(other.universe_) + ")");
  }
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  require_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  require_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & other.words_[w]) != 0) return true;
  }
  return false;
}

VertexSet VertexSet::complement() const {
  VertexSet out = *this;
  for (auto& w : out.words_) w = ~w;
  trim_tail(out.words_, universe_);
  return out;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  require_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  require_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  require_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for_each([&](Vertex v) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  });
  return out + "}";
}

// -------------------------------------------------------------------- Graph

Graph::Graph(std::size_t order, std::size_t vertex_cap)
    : order_(order), stride_(words_for(order)) {
  if (order > vertex_cap) {
    throw ArgumentError("graph order " + std::to_string(order) + " exceeds vertex cap " +
                        std::to_string(vertex_cap));
  }
  bits_.assign(order_ * stride_, 0);
}

Graph::Graph(std::size_t order, std::initializer_list<Edge> edges) : Graph(order) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(Vertex v) const {
  if (v >= order_) {
    throw ArgumentError("vertex " + std::to_string(v) + " out of range for graph of order " +
                        std::to_string(order_));
  }
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw ArgumentError("loop at vertex " + std::to_string(u));
  word(u, v) |= std::uint64_t{1} << (v & 63);
  word(v, u) |= std::uint64_t{1} << (u & 63);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  word(u, v) &= ~(std::uint64_t{1} << (v & 63));
  word(v, u) &= ~(std::uint64_t{1} << (u & 63));
}

std::size_t Graph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (auto w : bits_) twice += static_cast<std::size_t>(std::popcount(w));
  return twice / 2;
}

std::size_t Graph::degree(Vertex v) const {
  check_vertex(v);
  std::size_t d = 0;
  for (auto w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

VertexSet Graph::neighbors(Vertex v) const {
  check_vertex(v);
  VertexSet s(order_);
  std::copy(row(v).begin(), row(v).end(), s.words().begin());
  return s;
}

Graph Graph::with_new_vertex(const VertexSet& neighbours) const {
  if (neighbours.universe() != order_) {
    throw ArgumentError("neighbour set universe does not match graph order");
  }
  Graph out(order_ + 1, std::max(order_ + 1, kDefaultVertexCap));
  for (Vertex u = 0; u < order_; ++u) {
    std::copy(row(u).begin(), row(u).end(), out.bits_.begin() + static_cast<std::ptrdiff_t>(u * out.stride_));
  }
  neighbours.for_each([&](Vertex u) { out.add_edge(u, order_); });
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < order_; ++u) {
    for (Vertex v = u + 1; v < order_; ++v) {
      if (adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

// ------------------------------------------------------------------- graph6

namespace {

constexpr int kBias = 63;

char to_char(unsigned value) { return static_cast<char>(value + kBias); }

}  // namespace

Graph parse_graph6(std::string_view text, std::size_t vertex_cap) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  std::size_t pos = 0;
  auto next = [&]() -> unsigned {
    if (pos >= text.size()) throw ParseError("graph6 text truncated", pos);
    auto c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) {
      throw ParseError("graph6 byte " + std::to_string(c) + " outside 63..126", pos);
    }
    ++pos;
    return c - kBias;
  };

  if (text.empty()) throw ParseError("empty graph6 text", 0);
  std::uint64_t n = next();
  if (n == 63) {
    n = 0;
    if (pos < text.size() && text[pos] == '~') {
      ++pos;
      for (int i = 0; i < 6; ++i) n = (n << 6) | next();
    } else {
      for (int i = 0; i < 3; ++i) n = (n << 6) | next();
    }
  }
  if (n > vertex_cap) {
    throw ParseError("graph6 order " + std::to_string(n) + " exceeds vertex cap " +
                         std::to_string(vertex_cap),
                     0);
  }

  Graph g(static_cast<std::size_t>(n), vertex_cap);
  const std::size_t bit_count = n == 0 ? 0 : static_cast<std::size_t>(n * (n - 1) / 2);
  const std::size_t byte_count = (bit_count + 5) / 6;
  const std::size_t data_start = pos;
  if (text.size() - data_start < byte_count) {
    throw ParseError("graph6 text too short for order " + std::to_string(n), text.size());
  }
  if (text.size() - data_start > byte_count) {
    throw ParseError("trailing bytes after graph6 data", data_start + byte_count);
  }

  unsigned group = 0;
  int remaining = 0;
  std::size_t bit = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u, ++bit) {
      if (remaining == 0) {
        group = next();
        remaining = 6;
      }
      --remaining;
      if ((group >> remaining) & 1U) g.add_edge(u, v);
    }
  }
  if (remaining > 0 && (group & ((1U << remaining) - 1)) != 0) {
    throw ParseError("nonzero padding bits in graph6 data", pos - 1);
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out += to_char(static_cast<unsigned>(n));
  } else if (n <= 258047) {
    out += '~';
    for (int shift = 12; shift >= 0; shift -= 6) out += to_char((n >> shift) & 63);
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) out += to_char((n >> shift) & 63);
  }
  unsigned group = 0;
  int filled = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      group = (group << 1) | (g.adjacent(u, v) ? 1U : 0U);
      if (++filled == 6) {
        out += to_char(group);
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += to_char(group << (6 - filled));
  return out;
}

// ------------------------------------------------------------- operations

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) {
    throw ArgumentError("vertex set universe does not match graph order");
  }
  const auto members = s.to_vector();
  Graph h(members.size(), std::max(members.size(), kDefaultVertexCap));
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (g.adjacent(members[i], members[j])) h.add_edge(i, j);
    }
  }
  return h;
}

Graph relabel(const Graph& g, std::span<const Vertex> new_label) {
  const std::size_t n = g.order();
  if (new_label.size() != n) throw ArgumentError("relabeling has wrong length");
  std::vector<bool> seen(n, false);
  for (Vertex v : new_label) {
    if (v >= n || seen[v]) throw ArgumentError("relabeling is not a permutation");
    seen[v] = true;
  }
  Graph h(n, std::max(n, kDefaultVertexCap));
  for (auto [u, v] : g.edges()) h.add_edge(new_label[u], new_label[v]);
  return h;
}

VertexSet neighborhood(const Graph& g, Vertex v) { return g.neighbors(v); }

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  VertexSet s = g.neighbors(v);
  s.insert(v);
  return s;
}

VertexSet set_neighborhood(const Graph& g, const VertexSet& s) {
  return closed_set_neighborhood(g, s) - s;
}

VertexSet closed_set_neighborhood(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) {
    throw ArgumentError("vertex set universe does not match graph order");
  }
  VertexSet out = s;
  auto words = out.words();
  s.for_each([&](Vertex v) {
    auto r = g.row(v);
    for (std::size_t w = 0; w < words.size(); ++w) words[w] |= r[w];
  });
  return out;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  bool ok = true;
  s.for_each([&](Vertex v) {
    auto r = g.row(v);
    auto m = s.words();
    for (std::size_t w = 0; w < m.size(); ++w) {
      if ((r[w] & m[w]) != 0) ok = false;
    }
  });
  return ok;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  bool ok = true;
  s.for_each([&](Vertex v) {
    VertexSet rest = s;
    rest.erase(v);
    if (!rest.is_subset_of(g.neighbors(v))) ok = false;
  });
  return ok;
}

namespace {

void require_disjoint(const VertexSet& x, const VertexSet& y) {
  if (x.intersects(y)) {
    throw ArgumentError("vertex sets " + x.to_string() + " and " + y.to_string() +
                        " overlap");
  }
}

}  // namespace

bool is_complete_between(const Graph& g, const VertexSet& x, const VertexSet& y) {
  require_disjoint(x, y);
  bool ok = true;
  x.for_each([&](Vertex v) { ok = ok && y.is_subset_of(g.neighbors(v)); });
  return ok;
}

bool is_anticomplete_between(const Graph& g, const VertexSet& x, const VertexSet& y) {
  require_disjoint(x, y);
  return !set_neighborhood(g, x).intersects(y);
}

VertexSet mixed_vertices(const Graph& g, const VertexSet& s) {
  if (s.empty()) throw ArgumentError("mixed_vertices requires a nonempty set");
  VertexSet out(g.order());
  const std::size_t target = s.size();
  for (Vertex v = 0; v < g.order(); ++v) {
    if (s.contains(v)) continue;
    const std::size_t hits = (g.neighbors(v) & s).size();
    if (hits > 0 && hits < target) out.insert(v);
  }
  return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const std::size_t n = g.order() + h.order();
  Graph out(n, std::max(n, kDefaultVertexCap));
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (auto [u, v] : h.edges()) out.add_edge(g.order() + u, g.order() + v);
  return out;
}

Graph join(const Graph& g, const Graph& h) {
  Graph out = disjoint_union(g, h);
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = 0; v < h.order(); ++v) out.add_edge(u, g.order() + v);
  }
  return out;
}

Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  Graph out(n, std::max(n, kDefaultVertexCap));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

Graph delete_vertex(const Graph& g, Vertex v) {
  VertexSet keep = g.vertices();
  if (v >= g.order()) throw ArgumentError("vertex " + std::to_string(v) + " out of range");
  keep.erase(v);
  return induced_subgraph(g, keep);
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet unseen = g.vertices();
  while (auto start = unseen.front()) {
    VertexSet comp(g.order());
    comp.insert(*start);
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet grown = closed_set_neighborhood(g, frontier);
      frontier = grown - comp;
      comp |= grown;
    }
    unseen -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

std::size_t min_degree(const Graph& g) {
  std::size_t best = g.order();
  for (Vertex v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return g.order() == 0 ? 0 : best;
}

}  // namespace critcol
