// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "critcol/chroma.hpp"
#include "critcol/cograph.hpp"
#include "critcol/construct.hpp"
#include "critcol/critical.hpp"
#include "critcol/enumerate.hpp"
#include "oracles.hpp"

using namespace critcol;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!out.pass) ++failures;
  std::printf("%s %2d %s: %s (%.1fs)\n", out.pass ? "PASS" : "FAIL", id, title, out.detail.c_str(),
              secs);
  std::fflush(stdout);
}

std::vector<std::vector<Graph>> levels(std::size_t n_max, std::vector<PatternSpec> filters) {
  std::vector<std::vector<Graph>> out;
  EnumerateOptions options;
  options.filters = std::move(filters);
  enumerate_levels(n_max, options,
                   [&](std::size_t, const std::vector<Graph>& graphs) { out.push_back(graphs); });
  return out;
}

std::string canon(const Graph& g) { return canonical_form(g).text; }

// Plain loops over the adjacency relation, independent of the library's set code.
bool pair_holds(const Graph& g, const AnticompletePair& p) {
  const std::size_t n = g.order();
  std::vector<Vertex> x = p.x.to_vector(), y = p.y.to_vector(), w = p.w.to_vector();
  if (x.empty() || y.empty() || w.empty()) return false;
  for (Vertex a : x) {
    for (Vertex b : y) {
      if (a == b || g.adjacent(a, b)) return false;
    }
  }
  auto outer = [&](const std::vector<Vertex>& s) {
    std::set<Vertex> nb;
    for (Vertex a : s) {
      for (Vertex v = 0; v < n; ++v) {
        if (g.adjacent(a, v) && std::find(s.begin(), s.end(), v) == s.end()) nb.insert(v);
      }
    }
    return nb;
  };
  const std::set<Vertex> ws(w.begin(), w.end());
  if (outer(x) != ws || outer(y) != ws) return false;
  for (Vertex c : w) {
    for (Vertex a : x) {
      if (!g.adjacent(a, c)) return false;
    }
    for (Vertex b : y) {
      if (!g.adjacent(b, c)) return false;
    }
  }
  return true;
}

bool is_clique_image(const Graph& g, const std::vector<Vertex>& image, std::size_t size) {
  if (image.size() != size) return false;
  for (std::size_t i = 0; i < image.size(); ++i) {
    for (std::size_t j = i + 1; j < image.size(); ++j) {
      if (image[i] == image[j] || !g.adjacent(image[i], image[j])) return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  criterion(1, "perfect base case", [] {
    Outcome o;
    for (std::size_t k = 2; k <= 6; ++k) {
      const auto db = enumerate_critical(k, 8, {PatternSpec::path(4)});
      const bool ok = db.members == std::vector<std::string>{canon(oracle::complete(k))};
      o.detail += "k=" + std::to_string(k) + ":" + std::to_string(db.members.size()) + " ";
      o.pass = o.pass && ok;
    }
    o.detail += "(expect exactly K_k for k=2..6)";
    return o;
  });

  criterion(2, "triangle-free colouring bound", [] {
    Outcome o;
    std::size_t checked = 0, violations = 0;
    for (std::size_t l = 1; l <= 2; ++l) {
      const auto all = levels(9, {PatternSpec::plus_isolated(PatternSpec::path(4), l),
                                  PatternSpec::clique(3)});
      for (const auto& level : all) {
        for (const Graph& g : level) {
          ++checked;
          const auto r = color_k3_free(g, l);
          if (!oracle::naive_colorable(g, l + 2) || !is_proper_coloring(g, r.coloring) ||
              r.coloring.palette_size > l + 2 || chromatic_number(g).chi > l + 2) {
            ++violations;
          }
        }
      }
    }
    o.pass = violations == 0;
    o.detail = std::to_string(checked) + " graphs, " + std::to_string(violations) + " violations";
    return o;
  });

  criterion(3, "general clique colouring bound", [] {
    Outcome o;
    std::size_t checked = 0, violations = 0, mismatches = 0;
    for (const auto& level : levels(8, {PatternSpec::plus_isolated(PatternSpec::path(4), 1),
                                        PatternSpec::clique(4)})) {
      for (const Graph& g : level) {
        ++checked;
        const auto r = color_kk_free(g, 1, 4);
        if (!is_proper_coloring(g, r.coloring) || r.coloring.palette_size > bound_f(4, 1)) ++violations;
      }
    }
    for (std::size_t k = 3; k <= 8; ++k) {
      for (std::size_t l = 0; l <= 5; ++l) {
        if (bound_f(k, l) != oracle::bound_f_recursive(k, l)) ++mismatches;
      }
    }
    o.pass = violations == 0 && mismatches == 0 && bound_f(4, 1) == 6;
    o.detail = std::to_string(checked) + " graphs, " + std::to_string(violations) +
               " violations, " + std::to_string(mismatches) + " formula mismatches";
    return o;
  });

  criterion(4, "anticomplete pair totality", [] {
    Outcome o;
    std::size_t checked = 0, failed = 0;
    for (const auto& level : levels(8, {PatternSpec::path(4)})) {
      for (const Graph& g : level) {
        const std::size_t n = g.order();
        if (!is_connected(g) || g.edge_count() == n * (n - 1) / 2) continue;
        ++checked;
        try {
          if (!pair_holds(g, find_anticomplete_pair(g))) ++failed;
        } catch (const std::exception&) {
          ++failed;
        }
      }
    }
    o.pass = failed == 0 && checked > 0;
    o.detail = std::to_string(checked) + " connected non-complete cographs, " +
               std::to_string(failed) + " failures";
    return o;
  });

  criterion(5, "criticality obstructions", [] {
    Outcome o;
    std::size_t checked = 0, violations = 0;
    for (std::size_t k = 1; k <= 5; ++k) {
      for (const auto& text : enumerate_critical(k, 8, {}).members) {
        const Graph g = parse_graph6(text);
        ++checked;
        if (find_comparable_nonadjacent(g) || find_lemma_xy_violation(g, 2)) ++violations;
      }
    }
    o.pass = violations == 0 && checked > 0;
    o.detail = std::to_string(checked) + " critical graphs (k<=5, n<=8), " +
               std::to_string(violations) + " violations";
    return o;
  });

  criterion(6, "4-critical P5-free one-sided count", [] {
    Outcome o;
    const auto db = enumerate_critical(4, 9, {PatternSpec::path(5)});
    const std::set<std::string> members(db.members.begin(), db.members.end());
    const bool has_k4 = members.count(canon(oracle::complete(4))) != 0;
    const bool has_w5 = members.count(canon(join(oracle::cycle(5), Graph(1)))) != 0;
    std::size_t per_order[10] = {};
    for (const auto& m : db.members) ++per_order[parse_graph6(m).order()];
    std::size_t running = 0;
    bool within = true;
    o.detail = "cumulative by order:";
    for (std::size_t n = 1; n <= 9; ++n) {
      running += per_order[n];
      within = within && running <= 12;
      o.detail += " " + std::to_string(running);
    }
    o.pass = has_k4 && has_w5 && db.members.size() >= 2 && within;
    o.detail += std::string("; K4 ") + (has_k4 ? "found" : "missing") + ", W5 " +
                (has_w5 ? "found" : "missing") + " (bound 12)";
    return o;
  });

  criterion(7, "chromatic oracle equivalence", [] {
    Outcome o;
    std::size_t classes = 0, mismatches = 0;
    for (const auto& level : levels(7, {})) {
      for (const Graph& g : level) {
        if (g.order() == 0) continue;
        ++classes;
        const auto r = chromatic_number(g);
        if (r.chi != oracle::naive_chi(g) || !is_proper_coloring(g, r.coloring)) ++mismatches;
      }
    }
    std::size_t cographs = 0, imperfect = 0;
    for (const auto& level : levels(8, {PatternSpec::path(4)})) {
      for (const Graph& g : level) {
        if (g.order() == 0) continue;
        ++cographs;
        if (chromatic_number(g).chi != clique_number(g)) ++imperfect;
      }
    }
    o.pass = classes == 1252 && mismatches == 0 && imperfect == 0;
    o.detail = std::to_string(classes) + " classes, " + std::to_string(mismatches) +
               " mismatches; " + std::to_string(cographs) + " cographs, " +
               std::to_string(imperfect) + " with chi != omega";
    return o;
  });

  criterion(8, "3-critical graphs are odd cycles", [] {
    Outcome o;
    const auto db = enumerate_critical(3, 9, {});
    std::vector<std::string> expected{canon(oracle::complete(3)), canon(oracle::cycle(5)),
                                      canon(oracle::cycle(7)), canon(oracle::cycle(9))};
    o.pass = db.members == expected;
    o.detail = std::to_string(db.members.size()) + " members:";
    for (const auto& m : db.members) o.detail += " " + m;
    return o;
  });

  criterion(9, "graph6 fidelity and class counts", [] {
    Outcome o;
    const std::size_t frozen[] = {1, 1, 2, 4, 11, 34, 156, 1044};
    const auto all = levels(8, {});
    std::size_t roundtrips = 0, broken = 0;
    for (const auto& level : all) {
      for (const Graph& g : level) {
        ++roundtrips;
        if (!(parse_graph6(to_graph6(g)) == g)) ++broken;
      }
    }
    bool counts = true;
    o.detail = "counts";
    for (std::size_t n = 1; n <= 7; ++n) {
      counts = counts && all[n].size() == frozen[n];
      o.detail += " " + std::to_string(all[n].size());
    }
    o.pass = counts && broken == 0;
    o.detail += "; " + std::to_string(roundtrips) + " round trips, " + std::to_string(broken) + " broken";
    return o;
  });

  criterion(10, "certification soundness", [] {
    Outcome o;
    const CriticalDb db{4, {PatternSpec::path(4)}, {canon(oracle::complete(4))}};
    const Graph k4 = parse_graph6(db.members[0]);
    std::size_t checked = 0, disagreements = 0, bad_witness = 0, negatives = 0;
    for (const auto& level : levels(8, {PatternSpec::path(4)})) {
      for (const Graph& g : level) {
        ++checked;
        const bool colourable = is_k_colorable(g, 3).has_value();
        const auto cert = certify_k_colorable(g, 3, db);
        if (const auto* c = std::get_if<Coloring>(&cert)) {
          if (!colourable) ++disagreements;
          if (!is_proper_coloring(g, *c) || c->palette_size > 3) ++bad_witness;
        } else {
          ++negatives;
          const auto& w = std::get<CriticalWitness>(cert);
          if (colourable) ++disagreements;
          if (!is_clique_image(g, w.embedding, 4) || !is_induced_embedding(g, k4, w.embedding)) {
            ++bad_witness;
          }
        }
      }
    }
    o.pass = disagreements == 0 && bad_witness == 0;
    o.detail = std::to_string(checked) + " cographs (" + std::to_string(negatives) +
               " negative), " + std::to_string(disagreements) + " disagreements, " +
               std::to_string(bad_witness) + " bad witnesses";
    return o;
  });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
