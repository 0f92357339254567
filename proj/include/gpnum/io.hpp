#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "gpnum/graph.hpp"

namespace gpnum {

enum class GraphFormat { graph6, json };

/// graph6 encoding (no header, no trailing newline).
std::string to_graph6(const Graph& g);

/// Decodes one graph6 record. An optional ">>graph6<<" header and trailing
/// line break are accepted. Throws ParseError with the offending byte offset.
Graph from_graph6(std::string_view text);

/// Sidecar JSON {"n": ..., "edges": [[u, v], ...], "labels": [...]}; labels
/// are written only when present.
std::string to_json_sidecar(const Graph& g);
Graph from_json_sidecar(std::string_view text);

/// Sniffs the format: JSON when the first non-blank byte is '{'.
Graph parse_graph(std::string_view text);
std::string encode_graph(const Graph& g, GraphFormat format);

Graph read_graph(const std::filesystem::path& path);
void write_graph(const Graph& g, const std::filesystem::path& path, GraphFormat format);

}  // namespace gpnum
