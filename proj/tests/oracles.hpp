// Independent reference implementations used only by the tests. Everything
// here is deliberately naive: exhaustive over maps, permutations or colourings.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "critcol/graph.hpp"

namespace oracle {

using critcol::Graph;
using critcol::Vertex;

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

inline std::vector<Vertex> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), Vertex{0});
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// Every labeled graph on n vertices, indexed by its edge mask.
inline Graph labeled_graph(std::size_t n, std::uint64_t mask) {
  Graph g(n);
  std::size_t bit = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u, ++bit) {
      if ((mask >> bit) & 1U) g.add_edge(u, v);
    }
  }
  return g;
}

/// Induced copy of `pattern` by trying every injective map.
inline bool has_induced(const Graph& host, const Graph& pattern) {
  const std::size_t k = pattern.order();
  const std::size_t n = host.order();
  if (k > n) return false;
  std::vector<Vertex> map(k);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == k) return true;
    for (Vertex h = 0; h < n; ++h) {
      if (used[h]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        ok = pattern.adjacent(i, j) == host.adjacent(h, map[j]);
      }
      if (!ok) continue;
      used[h] = true;
      map[i] = h;
      if (self(self, i + 1)) return true;
      used[h] = false;
    }
    return false;
  };
  return rec(rec, 0);
}

/// Colours vertices 0,1,2,... in order, trying 1..k each.
inline bool naive_colorable(const Graph& g, std::size_t k) {
  const std::size_t n = g.order();
  std::vector<std::size_t> c(n, 0);
  auto rec = [&](auto&& self, Vertex v) -> bool {
    if (v == n) return true;
    for (std::size_t col = 1; col <= k; ++col) {
      bool ok = true;
      for (Vertex u = 0; u < v && ok; ++u) ok = !(g.adjacent(u, v) && c[u] == col);
      if (!ok) continue;
      c[v] = col;
      if (self(self, v + 1)) return true;
    }
    return false;
  };
  return rec(rec, 0);
}

inline std::size_t naive_chi(const Graph& g) {
  std::size_t k = 0;
  while (!naive_colorable(g, k)) ++k;
  return k;
}

inline std::size_t naive_clique_number(const Graph& g) {
  const std::size_t n = g.order();
  std::size_t best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    bool clique = true;
    for (Vertex u = 0; u < n && clique; ++u) {
      for (Vertex v = u + 1; v < n && clique; ++v) {
        if (((s >> u) & 1U) && ((s >> v) & 1U) && !g.adjacent(u, v)) clique = false;
      }
    }
    if (clique) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountll(s)));
  }
  return best;
}

/// Least graph6 text over all n! relabelings.
inline std::string brute_canonical(const Graph& g) {
  std::vector<Vertex> p(g.order());
  std::iota(p.begin(), p.end(), Vertex{0});
  std::string best;
  do {
    std::string t = critcol::to_graph6(critcol::relabel(g, p));
    if (best.empty() || t < best) best = t;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

inline bool isomorphic(const Graph& g, const Graph& h) {
  return g.order() == h.order() && g.edge_count() == h.edge_count() &&
         brute_canonical(g) == brute_canonical(h);
}

/// Number of unlabeled graphs on n vertices by averaging 2^(cycles on pairs)
/// over all permutations.
inline std::uint64_t burnside_count(std::size_t n) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), Vertex{0});
  unsigned __int128 total = 0;
  std::uint64_t perms = 0;
  do {
    ++perms;
    std::vector<bool> seen(n * n, false);
    std::size_t cycles = 0;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (seen[u * n + v]) continue;
        ++cycles;
        Vertex a = u, b = v;
        while (!seen[std::min(a, b) * n + std::max(a, b)]) {
          seen[std::min(a, b) * n + std::max(a, b)] = true;
          a = p[a];
          b = p[b];
        }
      }
    }
    total += static_cast<unsigned __int128>(1) << cycles;
  } while (std::next_permutation(p.begin(), p.end()));
  return static_cast<std::uint64_t>(total / perms);
}

/// f(3) = l + 2, f(k + 1) = l f(k) + k.
inline std::uint64_t bound_f_recursive(std::size_t k, std::size_t l) {
  std::uint64_t f = l + 2;
  for (std::size_t j = 3; j < k; ++j) f = l * f + j;
  return f;
}

inline Graph cycle(std::size_t n) {
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

inline Graph complete(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

inline Graph petersen() {
  Graph g(10);
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

}  // namespace oracle
