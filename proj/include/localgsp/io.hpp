#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "localgsp/graph.hpp"

namespace localgsp {

// Shortest decimal text that parses back to the same double. Integral values
// keep a trailing ".0" so the output always reads as a real number.
std::string format_double(double value);
double parse_double(std::string_view text);

std::string base64_encode(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> base64_decode(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

// Graph JSON: {"n": int, "edges": [[u,v],...], "weights": [...]?, "signal": [...]?}
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& doc);

// TSV edge list (`u \t v [\t w]`) plus an optional sidecar signal file with
// one value per line. Integer labels are used as node ids directly; any other
// labels are remapped to 0..n-1 in order of first appearance and the mapping
// is kept in Graph::labels().
Graph graph_from_tsv(std::string_view edges_text,
                     std::optional<std::string_view> signal_text = std::nullopt);
std::string graph_edges_to_tsv(const Graph& g);
std::string graph_signal_to_text(const Graph& g);

// Dispatches on the extension: .json, or .tsv/.txt/.edges with an optional
// signal sidecar.
Graph load_graph(const std::filesystem::path& path,
                 const std::optional<std::filesystem::path>& signal_path = std::nullopt);

nlohmann::json parse_json(std::string_view text, std::string_view what);

}  // namespace localgsp
