#include "critcol/patterns.hpp"

#include <algorithm>
#include <cctype>

#include "critcol/error.hpp"

namespace critcol {

// ---------------------------------------------------------------- realize

namespace {

Graph path_graph(std::size_t n) {
  Graph g(n, std::max(n, kDefaultVertexCap));
  for (Vertex v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

Graph isolated(std::size_t n) { return Graph(n, std::max(n, kDefaultVertexCap)); }

}  // namespace

Graph realize(const PatternSpec& spec) {
  using K = PatternSpec::Kind;
  switch (spec.kind) {
    case K::path:
      return path_graph(spec.a);
    case K::clique: {
      Graph g(spec.a, std::max(spec.a, kDefaultVertexCap));
      for (Vertex u = 0; u < spec.a; ++u) {
        for (Vertex v = u + 1; v < spec.a; ++v) g.add_edge(u, v);
      }
      return g;
    }
    case K::star: {
      Graph g(spec.a + 1, std::max(spec.a + 1, kDefaultVertexCap));
      for (Vertex v = 1; v <= spec.a; ++v) g.add_edge(0, v);
      return g;
    }
    case K::cycle: {
      if (spec.a < 3) throw ArgumentError("cycle needs at least 3 vertices");
      Graph g = path_graph(spec.a);
      g.add_edge(spec.a - 1, 0);
      return g;
    }
    case K::broom: {
      const std::size_t n = spec.a, m = spec.b;
      if (n < 2) throw ArgumentError("broom(n,m) needs n >= 2");
      Graph g = disjoint_union(path_graph(n), isolated(m));
      for (Vertex w = n; w < n + m; ++w) g.add_edge(n - 1, w);
      return g;
    }
    case K::broom_plus: {
      const std::size_t m = spec.a;
      Graph g(4 + m, std::max(4 + m, kDefaultVertexCap));
      g.add_edge(0, 1);
      g.add_edge(1, 2);
      g.add_edge(1, 3);
      g.add_edge(2, 3);
      for (Vertex w = 4; w < 4 + m; ++w) g.add_edge(2, w);
      return g;
    }
    case K::chair:
      return Graph(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}});
    case K::bull:
      return Graph(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}});
    case K::cricket:
      return Graph(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {0, 4}});
    case K::two_p2:
      return Graph(4, {{0, 1}, {2, 3}});
    case K::gem:
      return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}});
    case K::union_of:
      if (spec.parts.size() != 2) throw ArgumentError("union needs two parts");
      return disjoint_union(realize(spec.parts[0]), realize(spec.parts[1]));
    case K::plus_isolated:
      if (spec.parts.size() != 1) throw ArgumentError("plus-isolated needs a base");
      return disjoint_union(realize(spec.parts[0]), isolated(spec.a));
  }
  throw ArgumentError("unknown pattern kind");
}

// ------------------------------------------------------------ text grammar

std::string PatternSpec::to_string() const {
  switch (kind) {
    case Kind::path:
      return "P" + std::to_string(a);
    case Kind::clique:
      return "K" + std::to_string(a);
    case Kind::star:
      return "star(" + std::to_string(a) + ")";
    case Kind::cycle:
      return "C" + std::to_string(a);
    case Kind::broom:
      return "broom(" + std::to_string(a) + "," + std::to_string(b) + ")";
    case Kind::broom_plus:
      return "broomplus(" + std::to_string(a) + ")";
    case Kind::chair:
      return "chair";
    case Kind::bull:
      return "bull";
    case Kind::cricket:
      return "cricket";
    case Kind::two_p2:
      return "2P2";
    case Kind::gem:
      return "gem";
    case Kind::union_of:
      return parts.at(0).to_string() + "+" + parts.at(1).to_string();
    case Kind::plus_isolated:
      if (a == 0) return parts.at(0).to_string();
      return parts.at(0).to_string() + "+" + (a == 1 ? "" : std::to_string(a)) + "P1";
  }
  return "?";
}

namespace {

class PatternParser {
 public:
  explicit PatternParser(std::string_view text) : text_(text) {}

  PatternSpec parse() {
    skip_space();
    auto [count, base] = term();
    PatternSpec acc = first_term(count, std::move(base));
    skip_space();
    while (peek() == '+') {
      ++pos_;
      skip_space();
      auto [c, b] = term();
      if (b.kind == PatternSpec::Kind::path && b.a == 1) {
        acc = PatternSpec::plus_isolated(std::move(acc), c);
      } else {
        for (std::size_t i = 0; i < c; ++i) acc = PatternSpec::union_of(std::move(acc), b);
      }
      skip_space();
    }
    if (pos_ != text_.size()) fail("unexpected character");
    return acc;
  }

 private:
  static PatternSpec first_term(std::size_t count, PatternSpec base) {
    if (count == 1) return base;
    if (count == 2 && base.kind == PatternSpec::Kind::path && base.a == 2) {
      return PatternSpec::two_p2();
    }
    if (base.kind == PatternSpec::Kind::path && base.a == 1) {
      return PatternSpec::plus_isolated(base, count - 1);
    }
    PatternSpec acc = base;
    for (std::size_t i = 1; i < count; ++i) acc = PatternSpec::union_of(std::move(acc), base);
    return acc;
  }

  std::pair<std::size_t, PatternSpec> term() {
    std::size_t count = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      count = number();
      if (count == 0) fail("zero multiplicity");
    }
    return {count, base()};
  }

  PatternSpec base() {
    const std::size_t start = pos_;
    std::string word;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      word += static_cast<char>(std::tolower(static_cast<unsigned char>(text_[pos_])));
      ++pos_;
    }
    if (word.empty()) fail("expected a pattern name");
    if (word == "chair") return PatternSpec::chair();
    if (word == "bull") return PatternSpec::bull();
    if (word == "cricket") return PatternSpec::cricket();
    if (word == "gem") return PatternSpec::gem();
    if (word == "star") return PatternSpec::star(single_arg());
    if (word == "broomplus") return PatternSpec::broom_plus(single_arg());
    if (word == "broom") {
      expect('(');
      std::size_t n = number();
      expect(',');
      std::size_t m = number();
      expect(')');
      if (n < 2) fail("broom(n,m) needs n >= 2");
      return PatternSpec::broom(n, m);
    }
    if (word == "p" || word == "k" || word == "c") {
      std::size_t n = number();
      if (word == "p") return PatternSpec::path(n);
      if (word == "k") return PatternSpec::clique(n);
      if (n < 3) fail("cycle needs at least 3 vertices");
      return PatternSpec::cycle(n);
    }
    pos_ = start;
    fail("unknown pattern '" + word + "'");
  }

  std::size_t single_arg() {
    expect('(');
    std::size_t m = number();
    expect(')');
    return m;
  }

  std::size_t number() {
    skip_space();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    std::size_t value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (value > kDefaultVertexCap) fail("pattern parameter too large");
      ++pos_;
    }
    skip_space();
    return value;
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
    skip_space();
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("pattern '" + std::string(text_) + "': " + what, pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

PatternSpec parse_pattern(std::string_view text) { return PatternParser(text).parse(); }

std::vector<PatternSpec> parse_pattern_list(std::string_view text) {
  std::vector<PatternSpec> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    const char c = i < text.size() ? text[i] : ',';
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      auto piece = text.substr(start, i - start);
      if (piece.find_first_not_of(" \t") != std::string_view::npos) {
        out.push_back(parse_pattern(piece));
      }
      start = i + 1;
    }
  }
  return out;
}

std::string pattern_list_to_string(std::span<const PatternSpec> specs) {
  std::string out;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    if (i > 0) out += ',';
    out += specs[i].to_string();
  }
  return out;
}

// ------------------------------------------------------- induced matching

namespace {

class InducedMatcher {
 public:
  InducedMatcher(const Graph& host, const Graph& pattern)
      : host_(host), pattern_(pattern), words_(host.words_per_row()) {
    host_degree_.resize(host.order());
    for (Vertex h = 0; h < host.order(); ++h) host_degree_[h] = host.degree(h);
    pattern_degree_.resize(pattern.order());
    for (Vertex q = 0; q < pattern.order(); ++q) pattern_degree_[q] = pattern.degree(q);
  }

  std::optional<Embedding> run(std::optional<Vertex> pinned_pattern_vertex,
                               std::optional<Vertex> pinned_host_vertex) {
    const std::size_t p = pattern_.order();
    if (p > host_.order()) return std::nullopt;
    if (p == 0) return Embedding{};
    build_order(pinned_pattern_vertex);
    pinned_host_ = pinned_host_vertex;
    map_.assign(p, 0);
    used_.assign(words_, 0);
    if (!extend(0)) return std::nullopt;
    return map_;
  }

 private:
  static std::uint64_t bit(Vertex v) { return std::uint64_t{1} << (v & 63); }

  void build_order(std::optional<Vertex> first) {
    const std::size_t p = pattern_.order();
    order_.clear();
    std::vector<bool> placed(p, false);
    std::vector<std::size_t> placed_neighbours(p, 0);
    auto place = [&](Vertex q) {
      order_.push_back(q);
      placed[q] = true;
      for (Vertex r = 0; r < p; ++r) {
        if (pattern_.adjacent(q, r)) ++placed_neighbours[r];
      }
    };
    if (first) place(*first);
    while (order_.size() < p) {
      std::optional<Vertex> best;
      for (Vertex q = 0; q < p; ++q) {
        if (placed[q]) continue;
        if (!best || placed_neighbours[q] > placed_neighbours[*best] ||
            (placed_neighbours[q] == placed_neighbours[*best] &&
             pattern_degree_[q] > pattern_degree_[*best])) {
          best = q;
        }
      }
      place(*best);
    }
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex q = order_[depth];
    const std::size_t p = pattern_.order();
    const std::size_t n = host_.order();

    // candidates = unused host vertices consistent with every placed vertex
    std::vector<std::uint64_t> cand(words_);
    for (std::size_t w = 0; w < words_; ++w) cand[w] = ~used_[w];
    if (n % 64 != 0) cand[words_ - 1] &= (std::uint64_t{1} << (n % 64)) - 1;
    for (std::size_t i = 0; i < depth; ++i) {
      const Vertex placed = order_[i];
      const auto row = host_.row(map_[placed]);
      if (pattern_.adjacent(q, placed)) {
        for (std::size_t w = 0; w < words_; ++w) cand[w] &= row[w];
      } else {
        for (std::size_t w = 0; w < words_; ++w) cand[w] &= ~row[w];
      }
    }
    if (depth == 0 && pinned_host_) {
      const bool ok = (cand[*pinned_host_ >> 6] & bit(*pinned_host_)) != 0;
      std::fill(cand.begin(), cand.end(), 0);
      if (ok) cand[*pinned_host_ >> 6] = bit(*pinned_host_);
    }

    const std::size_t need_adj = pattern_degree_[q];
    const std::size_t need_non = p - 1 - pattern_degree_[q];
    for (std::size_t w = 0; w < words_; ++w) {
      for (std::uint64_t bits = cand[w]; bits != 0; bits &= bits - 1) {
        const Vertex h = w * 64 + static_cast<Vertex>(std::countr_zero(bits));
        if (host_degree_[h] < need_adj || n - 1 - host_degree_[h] < need_non) continue;
        map_[q] = h;
        used_[w] |= bit(h);
        if (extend(depth + 1)) return true;
        used_[w] &= ~bit(h);
      }
    }
    return false;
  }

  const Graph& host_;
  const Graph& pattern_;
  std::size_t words_;
  std::vector<std::size_t> host_degree_;
  std::vector<std::size_t> pattern_degree_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
  std::vector<std::uint64_t> used_;
  std::optional<Vertex> pinned_host_;
};

}  // namespace

std::optional<Embedding> find_induced(const Graph& host, const Graph& pattern) {
  return InducedMatcher(host, pattern).run(std::nullopt, std::nullopt);
}

std::optional<Embedding> find_induced_through(const Graph& host, const Graph& pattern,
                                              Vertex anchor) {
  if (anchor >= host.order()) {
    throw ArgumentError("anchor vertex " + std::to_string(anchor) + " out of range");
  }
  InducedMatcher matcher(host, pattern);
  for (Vertex q = 0; q < pattern.order(); ++q) {
    if (auto e = matcher.run(q, anchor)) return e;
  }
  return std::nullopt;
}

bool is_induced_embedding(const Graph& host, const Graph& pattern,
                          std::span<const Vertex> map) {
  if (map.size() != pattern.order()) return false;
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (map[i] >= host.order()) return false;
    for (std::size_t j = i + 1; j < map.size(); ++j) {
      if (map[i] == map[j]) return false;
      if (pattern.adjacent(i, j) != host.adjacent(map[i], map[j])) return false;
    }
  }
  return true;
}

std::optional<Violation> find_violation(const Graph& g, std::span<const PatternSpec> specs) {
  for (std::size_t i = 0; i < specs.size(); ++i) {
    if (auto e = find_induced(g, realize(specs[i]))) return Violation{i, specs[i], *e};
  }
  return std::nullopt;
}

bool is_free(const Graph& g, std::span<const PatternSpec> specs) {
  return !find_violation(g, specs);
}

PatternSet::PatternSet(std::vector<PatternSpec> specs) : specs_(std::move(specs)) {
  graphs_.reserve(specs_.size());
  for (const auto& s : specs_) graphs_.push_back(realize(s));
}

std::optional<Violation> PatternSet::find_violation(const Graph& g) const {
  for (std::size_t i = 0; i < graphs_.size(); ++i) {
    if (auto e = find_induced(g, graphs_[i])) return Violation{i, specs_[i], *e};
  }
  return std::nullopt;
}

bool PatternSet::is_free_through(const Graph& g, Vertex anchor) const {
  for (const auto& pattern : graphs_) {
    if (find_induced_through(g, pattern, anchor)) return false;
  }
  return true;
}

}  // namespace critcol
