#pragma once

#include <algorithm>
#include <charconv>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "activityvec/corpus.hpp"
#include "activityvec/errors.hpp"
#include "activityvec/graph.hpp"
#include "activityvec/tfidf.hpp"

namespace activityvec {

enum class ExportFormat { gexf, dot, edge_csv, matrix_csv, corpus_csv };

namespace detail {

// Shortest decimal representation that round-trips to the same double.
inline std::string render_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  (void)ec;
  return std::string(buf, ptr);
}

inline std::string xml_escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char ch : text) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += ch;
    }
  }
  return out;
}

// Quotes a CSV field only when it needs it.
inline std::string csv_field(std::string_view text) {
  const bool needs_quotes =
      text.find_first_of(",\"\r\n") != std::string_view::npos;
  if (!needs_quotes) return std::string(text);
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"') out += "\"\"";
    else out += ch;
  }
  out += '"';
  return out;
}

inline std::string dot_quote(std::string_view text) {
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  out += '"';
  return out;
}

inline double parse_double_field(const std::string& text, std::size_t line_no) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw ValidationError("weight must be a number, got \"" + text + "\"",
                          line_no);
  return value;
}

}  // namespace detail

// GEXF 1.2draft document with undirected edges. Each node carries a
// declared "type" attribute (object or actor); each edge carries its
// weight at full precision. Node ids are positional (o0, o1, ... / a0,
// a1, ...) with the original identifier as the label. Output is
// deterministic: insertion order, LF line endings, UTF-8.
inline std::string to_gexf(const BipartiteGraph& graph) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<gexf xmlns=\"http://www.gexf.net/1.2draft\" version=\"1.2\">\n";
  out << "  <graph mode=\"static\" defaultedgetype=\"undirected\">\n";
  out << "    <attributes class=\"node\">\n";
  out << "      <attribute id=\"0\" title=\"type\" type=\"string\"/>\n";
  out << "    </attributes>\n";
  out << "    <nodes>\n";
  for (std::size_t i = 0; i < graph.object_nodes.size(); ++i) {
    out << "      <node id=\"o" << i << "\" label=\""
        << detail::xml_escape(graph.object_nodes[i]) << "\">\n";
    out << "        <attvalues>\n";
    out << "          <attvalue for=\"0\" value=\"object\"/>\n";
    out << "        </attvalues>\n";
    out << "      </node>\n";
  }
  for (std::size_t i = 0; i < graph.actor_nodes.size(); ++i) {
    out << "      <node id=\"a" << i << "\" label=\""
        << detail::xml_escape(graph.actor_nodes[i]) << "\">\n";
    out << "        <attvalues>\n";
    out << "          <attvalue for=\"0\" value=\"actor\"/>\n";
    out << "        </attvalues>\n";
    out << "      </node>\n";
  }
  out << "    </nodes>\n";
  out << "    <edges>\n";
  for (std::size_t i = 0; i < graph.edges.size(); ++i) {
    const auto& edge = graph.edges[i];
    out << "      <edge id=\"" << i << "\" source=\"o" << edge.object
        << "\" target=\"a" << edge.actor << "\" weight=\""
        << detail::render_double(edge.weight) << "\"/>\n";
  }
  out << "    </edges>\n";
  out << "  </graph>\n";
  out << "</gexf>\n";
  return out.str();
}

// Undirected DOT. Nodes are listed first so isolated ones survive; edges
// carry their weight as an attribute.
inline std::string to_dot(const BipartiteGraph& graph) {
  std::ostringstream out;
  out << "graph G {\n";
  for (const auto& id : graph.object_nodes)
    out << "  " << detail::dot_quote(id) << ";\n";
  for (const auto& id : graph.actor_nodes)
    out << "  " << detail::dot_quote(id) << ";\n";
  for (const auto& edge : graph.edges) {
    out << "  " << detail::dot_quote(graph.object_nodes[edge.object]) << " -- "
        << detail::dot_quote(graph.actor_nodes[edge.actor]) << " [weight="
        << detail::render_double(edge.weight) << "];\n";
  }
  out << "}\n";
  return out.str();
}

// The weight matrix as CSV: header `object,<actors...>`, one row per
// document, every cell present regardless of sparsity.
inline std::string matrix_csv(const WeightMatrix& weights,
                              DisplayMode mode = DisplayMode::full) {
  std::ostringstream out;
  out << "object";
  for (const auto& actor : weights.actors)
    out << ',' << detail::csv_field(actor);
  out << '\n';
  for (std::size_t i = 0; i < weights.rows(); ++i) {
    out << detail::csv_field(weights.objects[i]);
    for (std::size_t j = 0; j < weights.cols(); ++j)
      out << ',' << format_weight(weights.values[i][j], mode);
    out << '\n';
  }
  return out.str();
}

// Edge list as `source,target,weight`, weights at full precision.
inline std::string edge_csv(const BipartiteGraph& graph) {
  std::ostringstream out;
  out << "source,target,weight\n";
  for (const auto& edge : graph.edges) {
    out << detail::csv_field(graph.object_nodes[edge.object]) << ','
        << detail::csv_field(graph.actor_nodes[edge.actor]) << ','
        << detail::render_double(edge.weight) << '\n';
  }
  return out.str();
}

// The corpus in its canonical ingest CSV form, the round-trip partner of
// parse_csv. Rows are emitted in the order the (object, actor) pairs first
// appeared, which reproduces both the document order and the vocabulary
// order on re-parse.
inline std::string corpus_csv(const ActivityCorpus& corpus) {
  struct Row {
    std::size_t first_seen;
    const Document* doc;
    const DocumentEntry* entry;
  };
  std::vector<Row> rows;
  for (const Document& doc : corpus.documents())
    for (const DocumentEntry& entry : doc.entries)
      rows.push_back(Row{entry.first_seen, &doc, &entry});
  std::sort(rows.begin(), rows.end(),
            [](const Row& a, const Row& b) { return a.first_seen < b.first_seen; });

  std::ostringstream out;
  out << "object_id,actor_id,count\n";
  for (const Row& row : rows) {
    out << detail::csv_field(row.doc->id) << ','
        << detail::csv_field(row.entry->actor) << ',' << row.entry->count
        << '\n';
  }
  return out.str();
}

// Rebuilds a graph from its own edge_csv output. Nodes appear in first-use
// order, so node and edge sets (and weights) match the exported graph.
inline BipartiteGraph parse_edge_csv(std::istream& in) {
  BipartiteGraph graph;
  std::unordered_map<std::string, std::size_t> objects;
  std::unordered_map<std::string, std::size_t> actors;

  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    detail::strip_cr(line);
    if (detail::is_blank(line)) continue;

    auto fields = detail::split_csv_row(line, line_no);
    if (!header_seen) {
      if (fields != std::vector<std::string>{"source", "target", "weight"})
        throw FormatError("expected header \"source,target,weight\"", line_no);
      header_seen = true;
      continue;
    }
    if (fields.size() != 3)
      throw ParseError("expected 3 fields, got " + std::to_string(fields.size()),
                       line_no);

    const double weight = detail::parse_double_field(fields[2], line_no);
    if (weight <= 0.0)
      throw ValidationError("edge weight must be > 0", line_no);

    auto [obj_it, obj_new] =
        objects.try_emplace(fields[0], graph.object_nodes.size());
    if (obj_new) graph.object_nodes.push_back(fields[0]);
    auto [act_it, act_new] =
        actors.try_emplace(fields[1], graph.actor_nodes.size());
    if (act_new) graph.actor_nodes.push_back(fields[1]);

    for (const auto& edge : graph.edges)
      if (edge.object == obj_it->second && edge.actor == act_it->second)
        throw ValidationError("duplicate edge " + fields[0] + " -- " + fields[1],
                              line_no);
    graph.edges.push_back(
        BipartiteGraph::Edge{obj_it->second, act_it->second, weight});
  }
  if (!header_seen) throw FormatError("missing edge CSV header line");
  return graph;
}

inline BipartiteGraph parse_edge_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_csv(in);
}

}  // namespace activityvec
