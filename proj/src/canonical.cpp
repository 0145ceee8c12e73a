#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>

#include "critcol/enumerate.hpp"
#include "critcol/error.hpp"

namespace critcol {

namespace {

using Mask = std::uint32_t;

// Upper-triangle bits in graph6 order, most significant first.
struct Key {
  std::array<std::uint64_t, 2> w{};
  auto operator<=>(const Key&) const = default;
};

// Ordered partition of the vertices: lab holds the vertices, cell c spans
// [start[c], start[c+1]).
struct Partition {
  std::array<std::uint8_t, kCanonicalMaxOrder> lab{};
  std::array<std::uint8_t, kCanonicalMaxOrder + 1> start{};
  int cells = 0;
};

constexpr int kMaxGenerators = 64;

class Canonicalizer {
 public:
  explicit Canonicalizer(const Graph& g) : n_(static_cast<int>(g.order())) {
    for (int u = 0; u < n_; ++u) {
      for (int v = 0; v < n_; ++v) {
        if (g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v))) adj_[u] |= Mask{1} << v;
      }
    }
  }

  void run() {
    Partition p;
    for (int i = 0; i < n_; ++i) p.lab[i] = static_cast<std::uint8_t>(i);
    p.start[0] = 0;
    p.start[1] = static_cast<std::uint8_t>(n_);
    p.cells = n_ == 0 ? 0 : 1;
    refine(p);
    std::array<std::uint8_t, kCanonicalMaxOrder> path{};
    search(p, path, 0);
  }

  const std::array<std::uint8_t, kCanonicalMaxOrder>& best_lab() const { return best_lab_; }
  const Key& best_key() const { return best_key_; }
  int order() const { return n_; }

 private:
  void refine(Partition& p) const {
    std::array<std::uint64_t, kCanonicalMaxOrder> sig{};
    while (p.cells < n_) {
      std::array<Mask, kCanonicalMaxOrder> cell_mask{};
      for (int c = 0; c < p.cells; ++c) {
        for (int i = p.start[c]; i < p.start[c + 1]; ++i) cell_mask[c] |= Mask{1} << p.lab[i];
      }
      for (int v = 0; v < n_; ++v) {
        std::uint64_t s = 0;
        for (int c = 0; c < p.cells; ++c) {
          s |= static_cast<std::uint64_t>(std::popcount(adj_[v] & cell_mask[c])) << (4 * (15 - c));
        }
        sig[v] = s;
      }
      Partition next;
      next.cells = 0;
      int pos = 0;
      for (int c = 0; c < p.cells; ++c) {
        const int b = p.start[c];
        const int e = p.start[c + 1];
        std::copy(p.lab.begin() + b, p.lab.begin() + e, next.lab.begin() + b);
        std::stable_sort(next.lab.begin() + b, next.lab.begin() + e,
                         [&](std::uint8_t x, std::uint8_t y) { return sig[x] < sig[y]; });
        for (int i = b; i < e; ++i) {
          if (i == b || sig[next.lab[i]] != sig[next.lab[i - 1]]) {
            next.start[next.cells++] = static_cast<std::uint8_t>(i);
          }
        }
        pos = e;
      }
      next.start[next.cells] = static_cast<std::uint8_t>(pos);
      const bool stable = next.cells == p.cells;
      p = next;
      if (stable) break;
    }
  }

  Key leaf_key(const Partition& p) const {
    Key key;
    int bit = 0;
    for (int j = 1; j < n_; ++j) {
      const Mask row = adj_[p.lab[j]];
      for (int i = 0; i < j; ++i, ++bit) {
        if ((row >> p.lab[i]) & 1U) key.w[bit >> 6] |= std::uint64_t{1} << (63 - (bit & 63));
      }
    }
    return key;
  }

  void search(const Partition& p, std::array<std::uint8_t, kCanonicalMaxOrder>& path, int depth) {
    if (p.cells == n_) {
      const Key key = leaf_key(p);
      if (!have_best_ || key < best_key_) {
        best_key_ = key;
        best_lab_ = p.lab;
        have_best_ = true;
      } else if (key == best_key_ && generators_ < kMaxGenerators) {
        auto& gamma = gens_[generators_++];
        for (int i = 0; i < n_; ++i) gamma[p.lab[i]] = best_lab_[i];
      }
      return;
    }
    int target = 0;
    while (p.start[target + 1] - p.start[target] == 1) ++target;
    const int b = p.start[target];
    const int e = p.start[target + 1];
    std::array<std::uint8_t, kCanonicalMaxOrder> members{};
    std::copy(p.lab.begin() + b, p.lab.begin() + e, members.begin());
    std::sort(members.begin(), members.begin() + (e - b));

    Mask tried = 0;
    for (int m = 0; m < e - b; ++m) {
      const int v = members[m];
      if (tried != 0 && in_tried_orbit(v, tried, path, depth)) continue;
      tried |= Mask{1} << v;

      Partition child = p;
      auto it = std::find(child.lab.begin() + b, child.lab.begin() + e, v);
      std::rotate(child.lab.begin() + b, it, it + 1);
      std::copy_backward(child.start.begin() + target + 1, child.start.begin() + child.cells + 1,
                         child.start.begin() + child.cells + 2);
      child.start[target + 1] = static_cast<std::uint8_t>(b + 1);
      ++child.cells;
      refine(child);
      path[depth] = static_cast<std::uint8_t>(v);
      search(child, path, depth + 1);
    }
  }

  // True when v shares an orbit with an already tried vertex under the known
  // automorphisms that fix the current path pointwise.
  bool in_tried_orbit(int v, Mask tried, const std::array<std::uint8_t, kCanonicalMaxOrder>& path,
                      int depth) const {
    std::array<std::uint8_t, kCanonicalMaxOrder> parent{};
    std::iota(parent.begin(), parent.end(), std::uint8_t{0});
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool any = false;
    for (int g = 0; g < generators_; ++g) {
      const auto& gamma = gens_[g];
      bool fixes = true;
      for (int d = 0; d < depth && fixes; ++d) fixes = gamma[path[d]] == path[d];
      if (!fixes) continue;
      any = true;
      for (int x = 0; x < n_; ++x) {
        const int a = find(x);
        const int c = find(gamma[x]);
        if (a != c) parent[a] = static_cast<std::uint8_t>(c);
      }
    }
    if (!any) return false;
    const int root = find(v);
    for (Mask t = tried; t != 0; t &= t - 1) {
      if (find(std::countr_zero(t)) == root) return true;
    }
    return false;
  }

  int n_;
  std::array<Mask, kCanonicalMaxOrder> adj_{};
  bool have_best_ = false;
  Key best_key_;
  std::array<std::uint8_t, kCanonicalMaxOrder> best_lab_{};
  std::array<std::array<std::uint8_t, kCanonicalMaxOrder>, kMaxGenerators> gens_{};
  int generators_ = 0;
};

void check_order(const Graph& g) {
  if (g.order() > kCanonicalMaxOrder) {
    throw BudgetError("canonical form supports at most " + std::to_string(kCanonicalMaxOrder) +
                      " vertices, got " + std::to_string(g.order()));
  }
}

}  // namespace

std::vector<Vertex> canonical_labeling(const Graph& g) {
  check_order(g);
  Canonicalizer c(g);
  c.run();
  std::vector<Vertex> new_label(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) new_label[c.best_lab()[i]] = i;
  return new_label;
}

CanonicalForm canonical_form(const Graph& g) {
  check_order(g);
  Canonicalizer c(g);
  c.run();
  const int n = c.order();
  const int bits = n * (n - 1) / 2;
  std::string text(1, static_cast<char>(63 + n));
  const Key& key = c.best_key();
  for (int b = 0; b < bits; b += 6) {
    int value = 0;
    for (int j = 0; j < 6; ++j) {
      const int bit = b + j;
      value <<= 1;
      if (bit < bits && ((key.w[bit >> 6] >> (63 - (bit & 63))) & 1U)) value |= 1;
    }
    text.push_back(static_cast<char>(63 + value));
  }
  return {std::move(text)};
}

Graph canonical_graph(const Graph& g) { return relabel(g, canonical_labeling(g)); }

}  // namespace critcol
