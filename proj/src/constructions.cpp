#include "gpnum/constructions.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <optional>
#include <variant>

#include "gpnum/error.hpp"

namespace gpnum {

namespace {

std::string set_label(const KSubset& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out + "}";
}

// Labels for a graph made of pieces of g and h; empty when neither is labeled.
bool any_labels(const Graph& g, const Graph& h) { return g.has_labels() || h.has_labels(); }

}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max())
      throw InputError("binomial coefficient overflows 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

Graph complete(std::size_t n) {
  if (n == 0) throw InputError("complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph edgeless(std::size_t n) { return Graph(n); }

Graph path(std::size_t n) {
  if (n == 0) throw InputError("path needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

Graph cycle(std::size_t n) {
  if (n < 3) throw InputError("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(0, static_cast<Vertex>(n - 1));
  return Graph::from_edges(n, edges);
}

std::vector<KSubset> k_subsets(std::size_t n, std::size_t k) {
  std::vector<KSubset> out;
  if (k > n) return out;
  KSubset cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = static_cast<std::uint32_t>(i + 1);
  while (true) {
    out.push_back(cur);
    // advance to the lexicographic successor
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

Vertex kneser_vertex(std::size_t n, const KSubset& s) {
  const std::size_t k = s.size();
  std::uint64_t rank = 0;
  std::uint32_t prev = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (s[i] <= prev || s[i] > n) throw InputError("not a strictly increasing subset of [1..n]");
    // count subsets that agree on the first i elements and have a smaller i-th element
    for (std::uint32_t x = prev + 1; x < s[i]; ++x) rank += binomial(n - x, k - i - 1);
    prev = s[i];
  }
  return static_cast<Vertex>(rank);
}

Graph kneser(std::size_t n, std::size_t k) {
  if (k == 0) throw InputError("kneser graph needs k >= 1");
  if (k > n) throw InputError("kneser graph needs n >= k");
  if (n > 64) throw InputError("kneser graph ground set larger than 64");
  if (binomial(n, k) > kMaxOrder) throw InputError("kneser graph too large");
  const auto subsets = k_subsets(n, k);
  const std::size_t m = subsets.size();
  std::vector<std::uint64_t> masks(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (auto x : subsets[i]) masks[i] |= std::uint64_t{1} << (x - 1);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < m; ++u)
    for (Vertex v = u + 1; v < m; ++v)
      if ((masks[u] & masks[v]) == 0) edges.emplace_back(u, v);
  std::vector<std::string> labels;
  labels.reserve(m);
  for (const auto& s : subsets) labels.push_back(set_label(s));
  return Graph::from_edges(m, edges, std::move(labels));
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const std::size_t ng = g.order(), nh = h.order();
  auto id = [nh](Vertex a, Vertex b) { return static_cast<Vertex>(std::size_t{a} * nh + b); };
  std::vector<Edge> edges;
  for (Vertex a = 0; a < ng; ++a)
    for (Vertex b = 0; b < nh; ++b) {
      for (Vertex a2 : g.neighbors(a))
        if (a < a2) edges.emplace_back(id(a, b), id(a2, b));
      for (Vertex b2 : h.neighbors(b))
        if (b < b2) edges.emplace_back(id(a, b), id(a, b2));
    }
  std::vector<std::string> labels;
  labels.reserve(ng * nh);
  for (Vertex a = 0; a < ng; ++a)
    for (Vertex b = 0; b < nh; ++b) labels.push_back("(" + g.label(a) + "," + h.label(b) + ")");
  return Graph::from_edges(ng * nh, edges, std::move(labels));
}

Graph hamming(std::span<const std::size_t> ns) {
  if (ns.empty()) throw InputError("hamming graph needs at least one factor");
  Graph g = complete(ns[0]);
  for (std::size_t i = 1; i < ns.size(); ++i) g = cartesian_product(g, complete(ns[i]));
  return g;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const auto off = static_cast<Vertex>(g.order());
  std::vector<Edge> edges = g.edges();
  for (auto [u, v] : h.edges()) edges.emplace_back(u + off, v + off);
  std::vector<std::string> labels;
  if (any_labels(g, h)) {
    for (Vertex v = 0; v < g.order(); ++v) labels.push_back(g.label(v));
    for (Vertex v = 0; v < h.order(); ++v) labels.push_back(h.label(v));
  }
  return Graph::from_edges(g.order() + h.order(), edges, std::move(labels));
}

Graph join(const Graph& g, const Graph& h) {
  const auto off = static_cast<Vertex>(g.order());
  std::vector<Edge> edges = disjoint_union(g, h).edges();
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = 0; v < h.order(); ++v) edges.emplace_back(u, v + off);
  return Graph::from_edges(g.order() + h.order(), edges, disjoint_union(g, h).labels());
}

Graph corona(const Graph& g, const Graph& h) {
  const std::size_t ng = g.order(), nh = h.order();
  if (ng == 0) throw InputError("corona needs a nonempty base graph");
  auto copy = [ng, nh](std::size_t i, Vertex x) { return static_cast<Vertex>(ng + i * nh + x); };
  std::vector<Edge> edges = g.edges();
  const auto h_edges = h.edges();
  for (Vertex i = 0; i < ng; ++i) {
    for (auto [x, y] : h_edges) edges.emplace_back(copy(i, x), copy(i, y));
    for (Vertex x = 0; x < nh; ++x) edges.emplace_back(i, copy(i, x));
  }
  std::vector<std::string> labels;
  if (any_labels(g, h)) {
    for (Vertex i = 0; i < ng; ++i) labels.push_back(g.label(i));
    for (Vertex i = 0; i < ng; ++i)
      for (Vertex x = 0; x < nh; ++x) labels.push_back(g.label(i) + "/" + h.label(x));
  }
  return Graph::from_edges(ng * (1 + nh), edges, std::move(labels));
}

Graph line_graph(const Graph& g) {
  const auto es = g.edges();
  std::vector<Edge> edges;
  for (Vertex i = 0; i < es.size(); ++i)
    for (Vertex j = i + 1; j < es.size(); ++j) {
      const auto [a, b] = es[i];
      const auto [c, d] = es[j];
      if (a == c || a == d || b == c || b == d) edges.emplace_back(i, j);
    }
  std::vector<std::string> labels;
  labels.reserve(es.size());
  for (auto [u, v] : es) labels.push_back("{" + g.label(u) + "," + g.label(v) + "}");
  return Graph::from_edges(es.size(), edges, std::move(labels));
}

// ---------------------------------------------------------------------------
// expression parser

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  Graph parse() {
    Graph g = graph();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return g;
  }

 private:
  using Arg = std::variant<Graph, std::size_t>;

  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("bad graph expression '" + std::string(text_) + "': " + what + " at offset " +
                     std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string identifier() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::optional<std::size_t> number() {
    skip_ws();
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc{}) return std::nullopt;
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  Arg argument() {
    skip_ws();
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) return *number();
    return graph();
  }

  std::vector<Arg> arguments() {
    std::vector<Arg> args;
    expect('(');
    if (!peek(')')) {
      args.push_back(argument());
      while (peek(',')) {
        ++pos_;
        args.push_back(argument());
      }
    }
    expect(')');
    return args;
  }

  static std::size_t as_int(const Arg& a, const char* fn) {
    if (auto p = std::get_if<std::size_t>(&a)) return *p;
    throw InputError(std::string(fn) + " expects integer arguments");
  }
  static const Graph& as_graph(const Arg& a, const char* fn) {
    if (auto p = std::get_if<Graph>(&a)) return *p;
    throw InputError(std::string(fn) + " expects graph arguments");
  }

  Graph graph() {
    std::string name = identifier();
    if (name.empty()) fail("expected a graph name");
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });

    // Shorthand families: K5, P4, C6, E3.
    if (name.size() == 1 && std::string_view("KPCE").find(name[0]) != std::string_view::npos) {
      auto n = number();
      if (!n) fail("expected an order after '" + name + "'");
      switch (name[0]) {
        case 'K': return complete(*n);
        case 'P': return path(*n);
        case 'C': return cycle(*n);
        default: return edgeless(*n);
      }
    }
    if (lower == "petersen") return kneser(5, 2);

    const auto args = arguments();
    auto need = [&](std::size_t count) {
      if (args.size() != count)
        fail(name + " takes " + std::to_string(count) + " argument(s)");
    };
    if (lower == "complete") return need(1), complete(as_int(args[0], "complete"));
    if (lower == "path") return need(1), path(as_int(args[0], "path"));
    if (lower == "cycle") return need(1), cycle(as_int(args[0], "cycle"));
    if (lower == "edgeless") return need(1), edgeless(as_int(args[0], "edgeless"));
    if (lower == "kneser") return need(2), kneser(as_int(args[0], "kneser"), as_int(args[1], "kneser"));
    if (lower == "hamming") {
      if (args.empty()) fail("hamming needs factors");
      std::vector<std::size_t> ns;
      for (const auto& a : args) ns.push_back(as_int(a, "hamming"));
      return hamming(ns);
    }
    if (lower == "complement") return need(1), complement(as_graph(args[0], "complement"));
    if (lower == "line") return need(1), line_graph(as_graph(args[0], "line"));
    if (lower == "cart" || lower == "join" || lower == "corona" || lower == "union") {
      need(2);
      const Graph& g = as_graph(args[0], lower.c_str());
      const Graph& h = as_graph(args[1], lower.c_str());
      if (lower == "cart") return cartesian_product(g, h);
      if (lower == "join") return join(g, h);
      if (lower == "corona") return corona(g, h);
      return disjoint_union(g, h);
    }
    fail("unknown family '" + name + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Graph graph_from_expr(std::string_view expr) { return ExprParser(expr).parse(); }

}  // namespace gpnum
