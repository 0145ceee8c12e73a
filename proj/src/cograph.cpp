#include "critcol/cograph.hpp"

#include <algorithm>
#include <stdexcept>

namespace critcol {

// ------------------------------------------------------------------- Cotree

Cotree Cotree::leaf(Vertex v) {
  Cotree t;
  t.kind_ = Kind::leaf;
  t.vertex_ = v;
  return t;
}

Cotree Cotree::node(Kind kind, std::vector<Cotree> children) {
  if (kind == Kind::leaf) throw ArgumentError("internal cotree node cannot be a leaf");
  Cotree t;
  t.kind_ = kind;
  std::sort(children.begin(), children.end(),
            [](const Cotree& a, const Cotree& b) { return a.min_leaf() < b.min_leaf(); });
  t.children_ = std::move(children);
  return t;
}

std::size_t Cotree::leaf_count() const {
  if (kind_ == Kind::leaf) return 1;
  std::size_t total = 0;
  for (const auto& c : children_) total += c.leaf_count();
  return total;
}

Vertex Cotree::min_leaf() const {
  if (kind_ == Kind::leaf) return vertex_;
  Vertex best = children_.front().min_leaf();
  for (const auto& c : children_) best = std::min(best, c.min_leaf());
  return best;
}

namespace {

void collect_leaves(const Cotree& t, std::vector<Vertex>& out) {
  if (t.kind() == Cotree::Kind::leaf) {
    out.push_back(t.vertex());
    return;
  }
  for (const auto& c : t.children()) collect_leaves(c, out);
}

std::vector<Vertex> leaves_of(const Cotree& t) {
  std::vector<Vertex> out;
  collect_leaves(t, out);
  return out;
}

bool well_formed_below(const Cotree& t, Cotree::Kind parent) {
  if (t.kind() == Cotree::Kind::leaf) return true;
  if (t.kind() == parent || t.children().size() < 2) return false;
  return std::all_of(t.children().begin(), t.children().end(),
                     [&](const Cotree& c) { return well_formed_below(c, t.kind()); });
}

}  // namespace

Graph Cotree::realize() const {
  const std::size_t n = leaf_count();
  Graph g(n, std::max(n, kDefaultVertexCap));
  auto fill = [&](auto&& self, const Cotree& t) -> void {
    if (t.kind() == Kind::leaf) return;
    for (const auto& c : t.children()) self(self, c);
    if (t.kind() != Kind::join) return;
    for (std::size_t i = 0; i < t.children().size(); ++i) {
      const auto left = leaves_of(t.children()[i]);
      for (std::size_t j = i + 1; j < t.children().size(); ++j) {
        for (Vertex a : left) {
          for (Vertex b : leaves_of(t.children()[j])) g.add_edge(a, b);
        }
      }
    }
  };
  fill(fill, *this);
  return g;
}

bool Cotree::is_well_formed() const {
  auto leaves = leaves_of(*this);
  std::sort(leaves.begin(), leaves.end());
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    if (leaves[i] != i) return false;
  }
  return well_formed_below(*this, Kind::leaf);
}

std::string Cotree::to_string() const {
  if (kind_ == Kind::leaf) return std::to_string(vertex_);
  std::string out = kind_ == Kind::join ? "J(" : "U(";
  for (std::size_t i = 0; i < children_.size(); ++i) {
    if (i > 0) out += ',';
    out += children_[i].to_string();
  }
  return out + ")";
}

// -------------------------------------------------------- twin elimination

namespace {

struct TwinPair {
  Vertex keep;
  Vertex removed;
  bool true_twins;
};

bool are_twins(const Graph& g, const VertexSet& alive, Vertex u, Vertex v) {
  const auto ru = g.row(u);
  const auto rv = g.row(v);
  const auto a = alive.words();
  const std::uint64_t uv_mask_u = std::uint64_t{1} << (u & 63);
  const std::uint64_t uv_mask_v = std::uint64_t{1} << (v & 63);
  for (std::size_t w = 0; w < a.size(); ++w) {
    std::uint64_t mask = a[w];
    if (w == (u >> 6)) mask &= ~uv_mask_u;
    if (w == (v >> 6)) mask &= ~uv_mask_v;
    if (((ru[w] ^ rv[w]) & mask) != 0) return false;
  }
  return true;
}

/// Lexicographic scan over live pairs. With prefer_false, the first false
/// twin pair wins over any true twin pair; otherwise the first pair wins.
std::optional<TwinPair> find_twins(const Graph& g, const VertexSet& alive, bool prefer_false) {
  std::optional<TwinPair> first_true;
  const auto members = alive.to_vector();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const Vertex u = members[i], v = members[j];
      if (!are_twins(g, alive, u, v)) continue;
      const bool true_twins = g.adjacent(u, v);
      if (!true_twins) return TwinPair{u, v, false};
      if (!prefer_false) return TwinPair{u, v, true};
      if (!first_true) first_true = TwinPair{u, v, true};
    }
  }
  return first_true;
}

struct ArenaNode {
  Cotree::Kind kind;
  Vertex vertex;
  int parent;
  std::vector<int> children;
};

Cotree materialize(const std::vector<ArenaNode>& arena, int index) {
  const auto& node = arena[static_cast<std::size_t>(index)];
  if (node.kind == Cotree::Kind::leaf) return Cotree::leaf(node.vertex);
  std::vector<Cotree> children;
  children.reserve(node.children.size());
  for (int c : node.children) children.push_back(materialize(arena, c));
  return Cotree::node(node.kind, std::move(children));
}

}  // namespace

std::optional<Cotree> recognize(const Graph& g) {
  if (g.order() == 0) throw ArgumentError("the empty graph has no cotree");
  VertexSet alive = g.vertices();
  std::vector<TwinPair> steps;
  while (alive.size() > 1) {
    auto twins = find_twins(g, alive, false);
    if (!twins) return std::nullopt;
    steps.push_back(*twins);
    alive.erase(twins->removed);
  }

  std::vector<ArenaNode> arena;
  std::vector<int> leaf_of(g.order(), -1);
  auto add_leaf = [&](Vertex v, int parent) {
    arena.push_back({Cotree::Kind::leaf, v, parent, {}});
    leaf_of[v] = static_cast<int>(arena.size() - 1);
    return leaf_of[v];
  };
  int root = add_leaf(*alive.front(), -1);

  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    const auto kind = it->true_twins ? Cotree::Kind::join : Cotree::Kind::union_of;
    const int partner = leaf_of[it->keep];
    const int parent = arena[static_cast<std::size_t>(partner)].parent;
    if (parent >= 0 && arena[static_cast<std::size_t>(parent)].kind == kind) {
      const int leaf = add_leaf(it->removed, parent);
      arena[static_cast<std::size_t>(parent)].children.push_back(leaf);
      continue;
    }
    arena.push_back({kind, 0, parent, {}});
    const int inner = static_cast<int>(arena.size() - 1);
    if (parent >= 0) {
      auto& siblings = arena[static_cast<std::size_t>(parent)].children;
      std::replace(siblings.begin(), siblings.end(), partner, inner);
    } else {
      root = inner;
    }
    arena[static_cast<std::size_t>(partner)].parent = inner;
    const int leaf = add_leaf(it->removed, inner);
    arena[static_cast<std::size_t>(inner)].children = {partner, leaf};
  }
  return materialize(arena, root);
}

// ----------------------------------------------------------------- colouring

Coloring cograph_color(const Cotree& t) {
  Coloring c{0, std::vector<Colour>(t.leaf_count(), 0)};
  auto paint = [&](auto&& self, const Cotree& node, Colour offset) -> std::size_t {
    switch (node.kind()) {
      case Cotree::Kind::leaf:
        c.colour.at(node.vertex()) = offset + 1;
        return 1;
      case Cotree::Kind::union_of: {
        std::size_t width = 0;
        for (const auto& child : node.children()) width = std::max(width, self(self, child, offset));
        return width;
      }
      case Cotree::Kind::join: {
        std::size_t width = 0;
        for (const auto& child : node.children()) {
          width += self(self, child, offset + static_cast<Colour>(width));
        }
        return width;
      }
    }
    return 0;
  };
  c.palette_size = paint(paint, t, 0);
  return c;
}

// ------------------------------------------------------- anticomplete pair

bool verify_anticomplete_pair(const Graph& g, const AnticompletePair& p) {
  const std::size_t n = g.order();
  if (p.x.universe() != n || p.y.universe() != n || p.w.universe() != n) return false;
  if (p.x.empty() || p.y.empty() || p.w.empty()) return false;
  if (p.x.intersects(p.y)) return false;
  if (!is_anticomplete_between(g, p.x, p.y)) return false;
  if (set_neighborhood(g, p.x) != p.w || set_neighborhood(g, p.y) != p.w) return false;
  return is_complete_between(g, p.y, p.w) && is_complete_between(g, p.x, p.w);
}

AnticompletePair find_anticomplete_pair(const Graph& g) {
  using Reason = AnticompletePairError::Reason;
  const std::size_t n = g.order();
  if (n == 0) throw AnticompletePairError(Reason::no_induced_p3, "empty graph has no induced P3");
  if (!is_connected(g)) throw AnticompletePairError(Reason::disconnected, "graph is disconnected");
  if (!recognize(g)) throw AnticompletePairError(Reason::has_induced_p4, "graph has an induced P4");
  if (g.edge_count() == n * (n - 1) / 2) {
    throw AnticompletePairError(Reason::no_induced_p3, "complete graph has no induced P3");
  }

  // Peel true twins until a false twin pair appears; it always does, since
  // every reduced graph stays connected, P4-free and non-complete.
  VertexSet alive = g.vertices();
  std::vector<TwinPair> peeled;
  std::optional<TwinPair> seed;
  while (!seed) {
    auto twins = find_twins(g, alive, true);
    if (!twins || alive.size() < 3) throw std::logic_error("twin elimination stalled");
    if (twins->true_twins) {
      peeled.push_back(*twins);
      alive.erase(twins->removed);
    } else {
      seed = twins;
    }
  }

  AnticompletePair pair{VertexSet(n), VertexSet(n), VertexSet(n)};
  pair.x.insert(seed->keep);
  pair.y.insert(seed->removed);
  for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
    if (pair.x.contains(it->keep)) {
      pair.x.insert(it->removed);
    } else if (pair.y.contains(it->keep)) {
      pair.y.insert(it->removed);
    }
  }
  pair.w = set_neighborhood(g, pair.x);
  if (!verify_anticomplete_pair(g, pair)) {
    throw std::logic_error("anticomplete pair failed re-verification");
  }
  return pair;
}

}  // namespace critcol
