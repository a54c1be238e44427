#include "localgsp/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "localgsp/error.hpp"

namespace localgsp {

std::string format_double(double value) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  std::string text(buf.data(), ptr);
  if (std::isfinite(value) && text.find_first_of(".e") == std::string::npos) {
    text += ".0";
  }
  return text;
}

double parse_double(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '+')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\r')) text.remove_suffix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(Errc::parse_error, "not a number: '" + std::string(text) + "'");
  }
  return value;
}

namespace {

constexpr std::string_view kBase64Alphabet =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

int base64_value(char c) {
  if (c >= 'A' && c <= 'Z') return c - 'A';
  if (c >= 'a' && c <= 'z') return c - 'a' + 26;
  if (c >= '0' && c <= '9') return c - '0' + 52;
  if (c == '+') return 62;
  if (c == '/') return 63;
  return -1;
}

}  // namespace

std::string base64_encode(std::span<const std::uint8_t> bytes) {
  std::string out;
  out.reserve((bytes.size() + 2) / 3 * 4);
  std::size_t i = 0;
  for (; i + 2 < bytes.size(); i += 3) {
    const std::uint32_t word = (bytes[i] << 16) | (bytes[i + 1] << 8) | bytes[i + 2];
    out += kBase64Alphabet[(word >> 18) & 63];
    out += kBase64Alphabet[(word >> 12) & 63];
    out += kBase64Alphabet[(word >> 6) & 63];
    out += kBase64Alphabet[word & 63];
  }
  if (i + 1 == bytes.size()) {
    const std::uint32_t word = bytes[i] << 16;
    out += kBase64Alphabet[(word >> 18) & 63];
    out += kBase64Alphabet[(word >> 12) & 63];
    out += "==";
  } else if (i + 2 == bytes.size()) {
    const std::uint32_t word = (bytes[i] << 16) | (bytes[i + 1] << 8);
    out += kBase64Alphabet[(word >> 18) & 63];
    out += kBase64Alphabet[(word >> 12) & 63];
    out += kBase64Alphabet[(word >> 6) & 63];
    out += '=';
  }
  return out;
}

std::vector<std::uint8_t> base64_decode(std::string_view text) {
  if (text.size() % 4 != 0) throw Error(Errc::parse_error, "base64 length");
  std::vector<std::uint8_t> out;
  out.reserve(text.size() / 4 * 3);
  for (std::size_t i = 0; i < text.size(); i += 4) {
    std::uint32_t word = 0;
    int pad = 0;
    for (std::size_t k = 0; k < 4; ++k) {
      const char c = text[i + k];
      int v = 0;
      if (c == '=' && i + 4 == text.size() && k >= 2) {
        ++pad;
      } else {
        if (pad > 0) throw Error(Errc::parse_error, "base64 padding");
        v = base64_value(c);
        if (v < 0) throw Error(Errc::parse_error, "base64 character");
      }
      word = (word << 6) | static_cast<std::uint32_t>(v);
    }
    out.push_back(static_cast<std::uint8_t>(word >> 16));
    if (pad < 2) out.push_back(static_cast<std::uint8_t>((word >> 8) & 0xff));
    if (pad < 1) out.push_back(static_cast<std::uint8_t>(word & 0xff));
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io_error, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::io_error, "cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error(Errc::io_error, "write failed for " + path.string());
}

nlohmann::json parse_json(std::string_view text, std::string_view what) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::parse_error, std::string(what) + ": " + e.what());
  }
}

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json doc;
  doc["n"] = g.num_nodes();
  auto edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  doc["edges"] = std::move(edges);
  if (g.is_weighted()) {
    doc["weights"] = std::vector<double>(g.weights().begin(), g.weights().end());
  }
  if (g.has_signal()) {
    doc["signal"] = std::vector<double>(g.signal().begin(), g.signal().end());
  }
  return doc;
}

Graph graph_from_json(const nlohmann::json& doc) {
  try {
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges")) {
      throw Error(Errc::parse_error, "graph JSON needs \"n\" and \"edges\"");
    }
    const auto n = doc.at("n").get<std::int64_t>();
    if (n < 0) throw Error(Errc::parse_error, "negative node count");
    std::vector<Edge> edges;
    for (const auto& pair : doc.at("edges")) {
      if (!pair.is_array() || pair.size() != 2) {
        throw Error(Errc::parse_error, "edge must be a [u, v] pair");
      }
      const auto u = pair[0].get<std::int64_t>();
      const auto v = pair[1].get<std::int64_t>();
      if (u < 0 || v < 0 || u > UINT32_MAX || v > UINT32_MAX) {
        throw Error(Errc::node_out_of_range, "edge endpoint");
      }
      edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v)});
    }
    std::optional<std::vector<double>> weights;
    if (doc.contains("weights") && !doc.at("weights").is_null()) {
      weights = doc.at("weights").get<std::vector<double>>();
    }
    std::optional<std::vector<double>> signal;
    if (doc.contains("signal") && !doc.at("signal").is_null()) {
      signal = doc.at("signal").get<std::vector<double>>();
    }
    return build_graph(static_cast<std::size_t>(n), std::move(edges), std::move(weights),
                       std::move(signal));
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, std::string("graph JSON: ") + e.what());
  }
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (start <= line.size()) {
    const std::size_t end = line.find('\t', start);
    if (end == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, end - start));
    start = end + 1;
  }
  return fields;
}

std::vector<std::string_view> content_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && line.front() != '#') lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::optional<std::uint64_t> parse_node_id(std::string_view text) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    return std::nullopt;
  }
  return value;
}

}  // namespace

Graph graph_from_tsv(std::string_view edges_text, std::optional<std::string_view> signal_text) {
  struct Row {
    std::string_view u, v;
    std::optional<double> w;
  };
  std::vector<Row> rows;
  std::size_t line_no = 0;
  for (std::string_view line : content_lines(edges_text)) {
    ++line_no;
    auto fields = split_fields(line);
    if (fields.size() != 2 && fields.size() != 3) {
      throw Error(Errc::parse_error, "TSV edge line " + std::to_string(line_no) +
                                         " needs 2 or 3 tab-separated fields");
    }
    Row row{fields[0], fields[1], std::nullopt};
    if (fields.size() == 3) row.w = parse_double(fields[2]);
    rows.push_back(row);
  }
  const bool weighted = !rows.empty() && rows.front().w.has_value();
  for (const Row& row : rows) {
    if (row.w.has_value() != weighted) {
      throw Error(Errc::parse_error, "TSV mixes weighted and unweighted edge lines");
    }
  }

  std::optional<std::vector<double>> signal;
  if (signal_text) {
    signal.emplace();
    for (std::string_view line : content_lines(*signal_text)) signal->push_back(parse_double(line));
  }

  bool integer_ids = true;
  for (const Row& row : rows) {
    if (!parse_node_id(row.u) || !parse_node_id(row.v)) {
      integer_ids = false;
      break;
    }
  }

  std::vector<Edge> edges;
  std::vector<double> weights;
  std::vector<std::string> labels;
  std::size_t n = 0;
  if (integer_ids) {
    for (const Row& row : rows) {
      const auto u = *parse_node_id(row.u);
      const auto v = *parse_node_id(row.v);
      if (u > UINT32_MAX || v > UINT32_MAX) throw Error(Errc::node_out_of_range, "TSV node id");
      edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v)});
      n = std::max<std::size_t>(n, std::max(u, v) + 1);
      if (row.w) weights.push_back(*row.w);
    }
    if (signal) n = std::max(n, signal->size());
  } else {
    std::map<std::string, NodeId, std::less<>> ids;
    auto id_of = [&](std::string_view label) {
      auto it = ids.find(label);
      if (it != ids.end()) return it->second;
      const auto id = static_cast<NodeId>(labels.size());
      ids.emplace(std::string(label), id);
      labels.emplace_back(label);
      return id;
    };
    for (const Row& row : rows) {
      const NodeId u = id_of(row.u);
      const NodeId v = id_of(row.v);
      edges.push_back({u, v});
      if (row.w) weights.push_back(*row.w);
    }
    n = labels.size();
  }
  std::optional<std::vector<double>> maybe_weights;
  if (weighted) maybe_weights = std::move(weights);
  Graph g = build_graph(n, std::move(edges), std::move(maybe_weights), std::move(signal));
  if (!labels.empty()) g = g.with_labels(std::move(labels));
  return g;
}

std::string graph_edges_to_tsv(const Graph& g) {
  std::string out;
  const auto& labels = g.labels();
  auto name = [&](NodeId v) { return labels.empty() ? std::to_string(v) : labels[v]; };
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& edge = g.edges()[e];
    out += name(edge.u);
    out += '\t';
    out += name(edge.v);
    if (g.is_weighted()) {
      out += '\t';
      out += format_double(g.weights()[e]);
    }
    out += '\n';
  }
  return out;
}

std::string graph_signal_to_text(const Graph& g) {
  std::string out;
  for (double x : g.signal()) {
    out += format_double(x);
    out += '\n';
  }
  return out;
}

Graph load_graph(const std::filesystem::path& path,
                 const std::optional<std::filesystem::path>& signal_path) {
  const std::string text = read_text_file(path);
  const auto ext = path.extension().string();
  if (ext == ".json") {
    Graph g = graph_from_json(parse_json(text, path.string()));
    if (signal_path) {
      const std::string sig = read_text_file(*signal_path);
      std::vector<double> values;
      for (std::string_view line : content_lines(sig)) values.push_back(parse_double(line));
      g = g.with_signal(std::move(values));
    }
    return g;
  }
  if (signal_path) {
    const std::string sig = read_text_file(*signal_path);
    return graph_from_tsv(text, std::string_view(sig));
  }
  return graph_from_tsv(text);
}

}  // namespace localgsp
