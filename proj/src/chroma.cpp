#include "critcol/chroma.hpp"

#include <algorithm>
#include <map>

#include "critcol/error.hpp"

namespace critcol {

std::size_t Coloring::used_colours() const {
  std::vector<Colour> seen(colour);
  std::sort(seen.begin(), seen.end());
  return static_cast<std::size_t>(std::unique(seen.begin(), seen.end()) - seen.begin());
}

std::string Coloring::to_string() const {
  std::string out;
  for (std::size_t v = 0; v < colour.size(); ++v) {
    if (v > 0) out += ' ';
    out += std::to_string(colour[v]);
  }
  return out;
}

bool is_proper_coloring(const Graph& g, const Coloring& c) {
  if (c.colour.size() != g.order()) return false;
  for (Colour x : c.colour) {
    if (x < 1 || x > c.palette_size) return false;
  }
  for (auto [u, v] : g.edges()) {
    if (c.colour[u] == c.colour[v]) return false;
  }
  return true;
}

Coloring compact(Coloring c) {
  std::map<Colour, Colour> rename;
  for (Colour x : c.colour) rename.emplace(x, 0);
  Colour next = 0;
  for (auto& [old, fresh] : rename) fresh = ++next;
  for (auto& x : c.colour) x = rename[x];
  c.palette_size = next;
  return c;
}

// ------------------------------------------------------------------ cliques

namespace {

class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : g_(g), best_(g.order()) {}

  VertexSet run() {
    VertexSet current(g_.order());
    expand(current, 0, g_.vertices());
    return best_;
  }

 private:
  // Greedy colour classes over `cand` give an upper bound on any clique in it.
  std::vector<std::pair<Vertex, std::size_t>> colour_order(const VertexSet& cand) const {
    std::vector<std::pair<Vertex, std::size_t>> out;
    VertexSet rest = cand;
    std::size_t colour = 0;
    while (!rest.empty()) {
      ++colour;
      VertexSet avail = rest;
      while (auto v = avail.front()) {
        out.emplace_back(*v, colour);
        rest.erase(*v);
        avail.erase(*v);
        avail -= g_.neighbors(*v);
      }
    }
    return out;
  }

  void expand(VertexSet& current, std::size_t size, VertexSet cand) {
    auto order = colour_order(cand);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      auto [v, bound] = *it;
      if (size + bound <= best_size_) return;
      current.insert(v);
      VertexSet next = cand & g_.neighbors(v);
      if (next.empty()) {
        if (size + 1 > best_size_) {
          best_size_ = size + 1;
          best_ = current;
        }
      } else {
        expand(current, size + 1, std::move(next));
      }
      current.erase(v);
      cand.erase(v);
    }
  }

  const Graph& g_;
  VertexSet best_;
  std::size_t best_size_ = 0;
};

}  // namespace

VertexSet maximum_clique(const Graph& g) { return CliqueSearch(g).run(); }

std::size_t clique_number(const Graph& g) { return maximum_clique(g).size(); }

std::size_t independence_number(const Graph& g) { return clique_number(complement(g)); }

// ----------------------------------------------------------------- colouring

Coloring greedy_coloring(const Graph& g) {
  const std::size_t n = g.order();
  Coloring c{0, std::vector<Colour>(n, 0)};
  std::vector<std::vector<bool>> blocked(n);
  std::vector<std::size_t> saturation(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    std::optional<Vertex> pick;
    for (Vertex v = 0; v < n; ++v) {
      if (c.colour[v] != 0) continue;
      if (!pick || saturation[v] > saturation[*pick] ||
          (saturation[v] == saturation[*pick] && g.degree(v) > g.degree(*pick))) {
        pick = v;
      }
    }
    const Vertex v = *pick;
    Colour x = 1;
    while (x < blocked[v].size() && blocked[v][x]) ++x;
    c.colour[v] = x;
    c.palette_size = std::max<std::size_t>(c.palette_size, x);
    g.neighbors(v).for_each([&](Vertex u) {
      if (c.colour[u] != 0) return;
      if (blocked[u].size() <= x) blocked[u].resize(x + 1, false);
      if (!blocked[u][x]) {
        blocked[u][x] = true;
        ++saturation[u];
      }
    });
  }
  return c;
}

namespace {

class ColouringSearch {
 public:
  ColouringSearch(const Graph& g, std::size_t k, SearchBudget budget)
      : g_(g), n_(g.order()), k_(k), budget_(budget),
        colour_(n_, 0), forbid_(n_ * (k + 1), 0), degree_(n_) {
    for (Vertex v = 0; v < n_; ++v) {
      degree_[v] = g.degree(v);
      neighbours_.push_back(g.neighbors(v).to_vector());
    }
  }

  std::optional<Coloring> run() {
    if (n_ == 0) return Coloring{0, {}};
    if (k_ == 0) return std::nullopt;
    if (!search(0)) return std::nullopt;
    Coloring c{used_, std::vector<Colour>(colour_.begin(), colour_.end())};
    return c;
  }

 private:
  std::size_t feasible(Vertex v) const {
    std::size_t count = 0;
    for (std::size_t c = 1; c <= used_; ++c) {
      if (forbid_[v * (k_ + 1) + c] == 0) ++count;
    }
    return count + (used_ < k_ ? 1 : 0);
  }

  void assign(Vertex v, Colour c, int delta) {
    for (Vertex u : neighbours_[v]) forbid_[u * (k_ + 1) + c] += delta;
  }

  bool search(std::size_t coloured) {
    if (coloured == n_) return true;
    if (budget_.max_nodes && ++nodes_ > *budget_.max_nodes) {
      throw BudgetError("colouring search exceeded " + std::to_string(*budget_.max_nodes) +
                        " nodes");
    }
    std::optional<Vertex> pick;
    std::size_t pick_feasible = 0;
    for (Vertex v = 0; v < n_; ++v) {
      if (colour_[v] != 0) continue;
      const std::size_t f = feasible(v);
      if (f == 0) return false;
      if (!pick || f < pick_feasible || (f == pick_feasible && degree_[v] > degree_[*pick])) {
        pick = v;
        pick_feasible = f;
      }
    }
    const Vertex v = *pick;
    const std::size_t limit = std::min(used_ + 1, k_);
    for (Colour c = 1; c <= limit; ++c) {
      if (forbid_[v * (k_ + 1) + c] != 0) continue;
      const bool opened = c > used_;
      if (opened) used_ = c;
      colour_[v] = c;
      assign(v, c, 1);
      if (search(coloured + 1)) return true;
      assign(v, c, -1);
      colour_[v] = 0;
      if (opened) used_ = c - 1;
    }
    return false;
  }

  const Graph& g_;
  std::size_t n_;
  std::size_t k_;
  SearchBudget budget_;
  std::vector<Colour> colour_;
  std::vector<int> forbid_;
  std::vector<std::size_t> degree_;
  std::vector<std::vector<Vertex>> neighbours_;
  std::size_t used_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::optional<Coloring> is_k_colorable(const Graph& g, std::size_t k, SearchBudget budget) {
  return ColouringSearch(g, k, budget).run();
}

ChromaticResult chromatic_number(const Graph& g, SearchBudget budget) {
  if (g.order() == 0) return {0, Coloring{}};
  Coloring upper = greedy_coloring(g);
  const std::size_t lower = clique_number(g);
  for (std::size_t k = lower; k < upper.palette_size; ++k) {
    if (auto c = is_k_colorable(g, k, budget)) return {c->palette_size, compact(*c)};
  }
  upper = compact(std::move(upper));
  return {upper.palette_size, upper};
}

}  // namespace critcol
