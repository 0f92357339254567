#include "gpnum/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gpnum/error.hpp"

namespace gpnum {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

void append_order(std::string& out, std::size_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

std::uint8_t sextet(std::string_view text, std::size_t pos, std::size_t base) {
  const auto c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126) throw ParseError("byte outside the graph6 range 63..126", base + pos);
  return static_cast<std::uint8_t>(c - 63);
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  append_order(out, n);
  int filled = 0;
  std::uint8_t acc = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = static_cast<std::uint8_t>((acc << 1) | (g.adjacent(i, j) ? 1 : 0));
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph from_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.starts_with(kGraph6Header)) {
    text.remove_prefix(kGraph6Header.size());
    base = kGraph6Header.size();
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty graph6 record", base);
  for (std::size_t p = 0; p < text.size(); ++p) sextet(text, p, base);

  std::size_t pos = 0, n = 0;
  auto take = [&](int count) {
    std::size_t v = 0;
    for (int i = 0; i < count; ++i) {
      if (pos >= text.size()) throw ParseError("truncated graph6 order field", base + pos);
      v = (v << 6) | sextet(text, pos++, base);
    }
    return v;
  };
  if (text[0] != 126) {
    n = take(1);
  } else if (text.size() > 1 && text[1] == 126) {
    pos = 2;
    n = take(6);
  } else {
    pos = 1;
    n = take(3);
  }
  if (n > kMaxOrder) throw ParseError("graph order " + std::to_string(n) + " exceeds 65536", base);

  const std::size_t bit_count = n * (n > 0 ? n - 1 : 0) / 2;
  const std::size_t need = (bit_count + 5) / 6;
  if (text.size() - pos < need) throw ParseError("truncated graph6 adjacency data", base + text.size());
  if (text.size() - pos > need) throw ParseError("unexpected trailing bytes", base + pos + need);

  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++bit) {
      const std::uint8_t chunk = sextet(text, pos + bit / 6, base);
      if ((chunk >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  return Graph::from_edges(n, edges);
}

std::string to_json_sidecar(const Graph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.order();
  auto edges = nlohmann::ordered_json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  if (g.has_labels()) j["labels"] = g.labels();
  return j.dump();
}

Graph from_json_sidecar(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
  }
  auto fail = [](const std::string& what) -> Graph { throw ParseError("graph JSON: " + what, 0); };
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_unsigned()) return fail("missing non-negative \"n\"");
  const auto n = j["n"].get<std::size_t>();
  std::vector<Edge> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) return fail("\"edges\" must be an array");
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
        return fail("each edge must be a pair of vertex ids");
      edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
    }
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array()) return fail("\"labels\" must be an array");
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) return fail("labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }
  try {
    return Graph::from_edges(n, edges, std::move(labels));
  } catch (const InputError& e) {
    return fail(e.what());
  }
}

Graph parse_graph(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return from_json_sidecar(text);
  return from_graph6(text);
}

std::string encode_graph(const Graph& g, GraphFormat format) {
  return format == GraphFormat::graph6 ? to_graph6(g) : to_json_sidecar(g);
}

Graph read_graph(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

void write_graph(const Graph& g, const std::filesystem::path& path, GraphFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << encode_graph(g, format) << '\n';
}

}  // namespace gpnum
