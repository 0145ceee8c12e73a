#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "critcol/chroma.hpp"
#include "critcol/cograph.hpp"
#include "critcol/construct.hpp"
#include "critcol/critical.hpp"
#include "critcol/enumerate.hpp"
#include "critcol/error.hpp"
#include "critcol/patterns.hpp"
#include "json.hpp"

using namespace critcol;
using nlohmann::json;

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kUsage = 2;

// Result of one subcommand on one input.
struct Outcome {
  int code = kYes;
  std::string text;
  json data = json::object();
};

Outcome failure(const std::string& message) {
  return {kUsage, "error: " + message, json{{"error", message}}};
}

// Internal consistency guard: every witness is re-checked before it is shown.
void ensure(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("witness failed re-verification: ") + what);
}

std::string join_ints(const std::vector<Vertex>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

Outcome run_guarded(const std::function<Outcome()>& body) {
  try {
    return body();
  } catch (const IncompleteDatabaseError& e) {
    Outcome o = failure(e.what());
    o.data["missing"] = e.missing_graph6();
    return o;
  } catch (const AnticompletePairError& e) {
    static const char* names[] = {"disconnected", "has_induced_p4", "no_induced_p3"};
    Outcome o{kNo, std::string("precondition failed: ") + e.what(),
              json{{"error", e.what()}, {"reason", names[static_cast<int>(e.reason())]}}};
    return o;
  } catch (const BudgetError& e) {
    return failure(std::string("budget exhausted: ") + e.what());
  } catch (const std::exception& e) {
    return failure(e.what());
  }
}

using GraphCommand = std::function<Outcome(const Graph&)>;

// Runs `cmd` on one graph6 argument, or on every line of stdin for "-".
int drive(const std::string& name, const std::string& input, bool as_json, const GraphCommand& cmd) {
  const auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  };

  if (input != "-") {
    Outcome o = run_guarded([&] { return cmd(parse_graph6(input)); });
    if (as_json) {
      std::cout << json{{"command", name}, {"input", input}, {"result", o.data},
                        {"elapsed_ms", elapsed()}}
                       .dump()
                << '\n';
    } else if (o.code == kUsage) {
      std::cerr << "critcol " << name << ": " << o.text << '\n';
    } else {
      std::cout << o.text << '\n';
    }
    return o.code;
  }

  std::vector<std::string> lines;
  for (std::string line; std::getline(std::cin, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  std::vector<Outcome> results(lines.size());
  const auto count = static_cast<std::ptrdiff_t>(lines.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto& line = lines[static_cast<std::size_t>(i)];
    results[static_cast<std::size_t>(i)] = run_guarded([&] { return cmd(parse_graph6(line)); });
  }

  int worst = kYes;
  json batch = json::array();
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const Outcome& o = results[i];
    if (o.code == kUsage || (o.code == kNo && worst == kYes)) worst = o.code;
    if (as_json) {
      batch.push_back(json{{"input", lines[i]}, {"exit", o.code}, {"result", o.data}});
    } else {
      std::string text = o.text;
      std::replace(text.begin(), text.end(), '\n', ';');
      std::cout << lines[i] << '\t' << text << '\n';
    }
  }
  if (as_json) {
    std::cout << json{{"command", name}, {"input", "-"}, {"result", batch},
                      {"elapsed_ms", elapsed()}}
                     .dump()
              << '\n';
  }
  return worst;
}

json colouring_json(const Coloring& c) { return c.colour; }

Outcome free_cmd(const Graph& g, const std::vector<PatternSpec>& specs) {
  if (auto v = find_violation(g, specs)) {
    ensure(is_induced_embedding(g, realize(v->spec), v->embedding), "free");
    return {kNo, "not " + v->spec.to_string() + "-free: induced copy at " + join_ints(v->embedding),
            json{{"free", false}, {"pattern", v->spec.to_string()}, {"embedding", v->embedding}}};
  }
  return {kYes, "free", json{{"free", true}}};
}

Outcome chi_cmd(const Graph& g, std::optional<std::size_t> k, SearchBudget budget) {
  if (k) {
    if (auto c = is_k_colorable(g, *k, budget)) {
      ensure(is_proper_coloring(g, *c) && c->palette_size <= *k, "chi");
      return {kYes, "colourable with " + std::to_string(*k) + "\ncolouring " + c->to_string(),
              json{{"k", *k}, {"colourable", true}, {"colouring", colouring_json(*c)}}};
    }
    return {kNo, "not colourable with " + std::to_string(*k),
            json{{"k", *k}, {"colourable", false}}};
  }
  const auto r = chromatic_number(g, budget);
  ensure(is_proper_coloring(g, r.coloring) && r.coloring.palette_size == r.chi, "chi");
  return {kYes, "chi " + std::to_string(r.chi) + "\ncolouring " + r.coloring.to_string(),
          json{{"chi", r.chi}, {"colouring", colouring_json(r.coloring)}}};
}

Outcome critical_cmd(const Graph& g, std::size_t k) {
  const auto r = criticality_report(g, k);
  std::ostringstream text;
  text << "k " << r.k << "\nchi " << r.chi << "\nchi(G-v)";
  for (std::size_t c : r.per_vertex) text << ' ' << c;
  text << "\nverdict " << (r.verdict ? "critical" : "not critical");
  return {r.verdict ? kYes : kNo, text.str(),
          json{{"k", r.k}, {"chi", r.chi}, {"per_vertex", r.per_vertex}, {"verdict", r.verdict}}};
}

Outcome cotree_cmd(const Graph& g) {
  if (g.order() == 0) return failure("empty graph has no cotree");
  if (auto t = recognize(g)) {
    ensure(t->is_well_formed() && t->realize() == g, "cotree");
    return {kYes, t->to_string(), json{{"cograph", true}, {"cotree", t->to_string()}}};
  }
  auto p4 = find_induced(g, realize(PatternSpec::path(4)));
  ensure(p4.has_value(), "cotree");
  return {kNo, "not a cograph: induced P4 at " + join_ints(*p4),
          json{{"cograph", false}, {"p4", *p4}}};
}

Outcome pair_cmd(const Graph& g) {
  const auto p = find_anticomplete_pair(g);
  ensure(verify_anticomplete_pair(g, p), "pair");
  return {kYes, "X " + p.x.to_string() + "\nY " + p.y.to_string() + "\nW " + p.w.to_string(),
          json{{"x", p.x.to_vector()}, {"y", p.y.to_vector()}, {"w", p.w.to_vector()}}};
}

Outcome color_cmd(const Graph& g, std::size_t l, std::size_t clique, bool skip_check) {
  const ConstructOptions options{.skip_precondition = skip_check};
  const auto r = clique == 3 ? color_k3_free(g, l, options) : color_kk_free(g, l, clique, options);
  ensure(is_proper_coloring(g, r.coloring), "color");
  const std::uint64_t bound = bound_f(clique, l);
  const bool within = r.coloring.palette_size <= bound;
  json blocks = json::array();
  for (const auto& b : r.blocks) blocks.push_back(b.to_vector());
  std::ostringstream text;
  text << "colouring " << r.coloring.to_string() << "\ncolours " << r.coloring.palette_size
       << " bound " << bound << (within ? " within" : " EXCEEDED");
  return {within ? kYes : kNo, text.str(),
          json{{"colouring", colouring_json(r.coloring)},
               {"colours", r.coloring.palette_size},
               {"bound", bound},
               {"within_bound", within},
               {"s", r.s.to_vector()},
               {"blocks", blocks},
               {"remainder", r.remainder.to_vector()}}};
}

Outcome certify_cmd(const Graph& g, std::size_t k, const CriticalDb& db) {
  const auto cert = certify_k_colorable(g, k, db);
  if (const auto* c = std::get_if<Coloring>(&cert)) {
    ensure(is_proper_coloring(g, *c) && c->palette_size <= k, "certify");
    return {kYes, "colourable with " + std::to_string(k) + "\ncolouring " + c->to_string(),
            json{{"colourable", true}, {"colouring", colouring_json(*c)}}};
  }
  const auto& w = std::get<CriticalWitness>(cert);
  ensure(is_induced_embedding(g, parse_graph6(w.member), w.embedding), "certify");
  return {kNo,
          "not colourable with " + std::to_string(k) + "\nwitness " + w.member + " at " +
              join_ints(w.embedding),
          json{{"colourable", false}, {"member", w.member}, {"embedding", w.embedding}}};
}

std::vector<PatternSpec> parse_specs(const std::vector<std::string>& texts) {
  std::vector<PatternSpec> specs;
  for (const auto& t : texts) {
    for (auto& s : parse_pattern_list(t)) specs.push_back(std::move(s));
  }
  return specs;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Colouring, criticality and enumeration tools for hereditary graph classes"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit one JSON document per invocation");

  std::string graph;
  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("graph", graph, "graph6 text, or - to read one graph per line from stdin")
        ->required();
  };

  auto* free_sub = app.add_subcommand("free", "Test freeness of forbidden induced subgraphs");
  std::vector<std::string> patterns;
  free_sub->add_option("--pattern", patterns, "Pattern spec, e.g. P5, 2P2, P4+2P1")->required()->allow_extra_args(false);
  add_graph(free_sub);

  auto* chi_sub = app.add_subcommand("chi", "Chromatic number, or decide k-colourability");
  std::optional<std::size_t> chi_k;
  std::optional<std::uint64_t> max_nodes;
  chi_sub->add_option("--k", chi_k, "Decide colourability with this many colours");
  chi_sub->add_option("--max-nodes", max_nodes, "Abort the exact search after this many nodes");
  add_graph(chi_sub);

  auto* crit_sub = app.add_subcommand("critical", "k-vertex-criticality report");
  std::size_t crit_k = 0;
  crit_sub->add_option("--k", crit_k, "Target chromatic number")->required()->check(CLI::PositiveNumber);
  add_graph(crit_sub);

  auto* cotree_sub = app.add_subcommand("cotree", "Cotree of a P4-free graph");
  add_graph(cotree_sub);

  auto* pair_sub = app.add_subcommand("pair", "Anticomplete pair of a connected P4-free graph");
  add_graph(pair_sub);

  auto* color_sub = app.add_subcommand("color", "Constructive colouring of (P4+lP1, K_k)-free graphs");
  std::size_t ell = 0;
  std::size_t clique = 3;
  bool skip_check = false;
  color_sub->add_option("--ell", ell, "Isolated vertices in the forbidden P4+lP1")->required();
  color_sub->add_option("--clique", clique, "Forbidden clique size (default 3)")
      ->check(CLI::Range(std::size_t{3}, std::size_t{64}));
  color_sub->add_flag("--skip-check", skip_check, "Skip the family membership check");
  add_graph(color_sub);

  auto* bound_sub = app.add_subcommand("bound", "Palette bound for (P4+lP1, K_k)-free graphs");
  std::size_t bound_l = 0, bound_k = 0;
  bound_sub->add_option("--ell", bound_l)->required();
  bound_sub->add_option("--k", bound_k)->required();

  auto* enum_sub = app.add_subcommand("enumerate", "Enumerate graphs or vertex-critical graphs");
  std::size_t enum_n = 0;
  std::vector<std::string> enum_free;
  std::optional<std::size_t> enum_critical;
  bool connected = false, serial = false;
  std::string db_path;
  enum_sub->add_option("--n", enum_n, "Order (maximum order with --critical)")->required();
  enum_sub->add_option("--free", enum_free, "Forbidden pattern spec")->allow_extra_args(false);
  enum_sub->add_option("--critical", enum_critical, "List k-vertex-critical graphs instead");
  enum_sub->add_flag("--connected", connected, "Connected graphs only");
  enum_sub->add_flag("--serial", serial, "Use the single-threaded kernel");
  enum_sub->add_option("--db", db_path, "Write the critical database to this file")
      ->needs("--critical");

  auto* cert_sub = app.add_subcommand("certify", "Certifying k-colourability against a critical database");
  std::size_t cert_k = 0;
  std::string cert_db;
  cert_sub->add_option("--k", cert_k)->required();
  cert_sub->add_option("--db", cert_db, "Critical database file")->required();
  add_graph(cert_sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kUsage;
  }

  try {
    if (*free_sub) {
      const auto specs = parse_specs(patterns);
      return drive("free", graph, as_json, [&](const Graph& g) { return free_cmd(g, specs); });
    }
    if (*chi_sub) {
      const SearchBudget budget{max_nodes};
      return drive("chi", graph, as_json, [&](const Graph& g) { return chi_cmd(g, chi_k, budget); });
    }
    if (*crit_sub) {
      return drive("critical", graph, as_json, [&](const Graph& g) { return critical_cmd(g, crit_k); });
    }
    if (*cotree_sub) return drive("cotree", graph, as_json, cotree_cmd);
    if (*pair_sub) return drive("pair", graph, as_json, pair_cmd);
    if (*color_sub) {
      return drive("color", graph, as_json,
                   [&](const Graph& g) { return color_cmd(g, ell, clique, skip_check); });
    }
    if (*cert_sub) {
      const CriticalDb db = load_critical_db(cert_db);
      return drive("certify", graph, as_json, [&](const Graph& g) { return certify_cmd(g, cert_k, db); });
    }

    const auto t0 = std::chrono::steady_clock::now();
    auto elapsed = [&] {
      return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    };
    if (*bound_sub) {
      const std::uint64_t b = bound_f(bound_k, bound_l);
      if (as_json) {
        std::cout << json{{"command", "bound"}, {"input", nullptr},
                          {"result", {{"k", bound_k}, {"ell", bound_l}, {"bound", b}}},
                          {"elapsed_ms", elapsed()}}
                         .dump()
                  << '\n';
      } else {
        std::cout << b << '\n';
      }
      return kYes;
    }
    if (*enum_sub) {
      const auto specs = parse_specs(enum_free);
      const Execution ex = serial ? Execution::serial : Execution::parallel;
      std::vector<std::string> out;
      if (enum_critical) {
        CriticalDb db = enumerate_critical(*enum_critical, enum_n, specs, ex);
        if (!db_path.empty()) save_critical_db(db_path, db);
        out = db.members;
      } else {
        EnumerateOptions options;
        options.filters = specs;
        options.connected_only = connected;
        options.execution = ex;
        for (const Graph& g : enumerate_graphs(enum_n, options)) out.push_back(to_graph6(g));
      }
      if (as_json) {
        json result{{"n", enum_n}, {"count", out.size()}, {"graphs", out}};
        if (enum_critical) result["critical"] = *enum_critical;
        if (!db_path.empty()) result["db"] = db_path;
        std::cout << json{{"command", "enumerate"}, {"input", nullptr}, {"result", result},
                          {"elapsed_ms", elapsed()}}
                         .dump()
                  << '\n';
      } else {
        for (const auto& t : out) std::cout << t << '\n';
      }
      return kYes;
    }
  } catch (const std::exception& e) {
    if (as_json) {
      std::cout << json{{"command", app.get_subcommands().front()->get_name()},
                        {"input", graph.empty() ? json(nullptr) : json(graph)},
                        {"result", {{"error", e.what()}}}}
                       .dump()
                << '\n';
    } else {
      std::cerr << "critcol: error: " << e.what() << '\n';
    }
    return kUsage;
  }
  return kUsage;
}
