// activity_vec: turn activity logs into TF-IDF matrices, bipartite
// actor-object graphs, graph statistics, and Gephi-ready exports.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"

#include "activityvec/activityvec.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitDegenerate = 3;

struct PipelineConfig {
  std::string input;
  std::string input_format;            // empty: infer from the extension
  std::string export_format = "gexf";  // export subcommand output format
  std::string tf_mode = "binary";
  double threshold = 0.0;
  bool keep_isolated = false;
  std::string display = "full";
  bool porcelain = false;
  std::string output;
  bool show_idf = false;
};

std::string detect_input_format(const std::string& path) {
  auto ends_with = [&](std::string_view suffix) {
    return path.size() >= suffix.size() &&
           path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  if (ends_with(".jsonl") || ends_with(".ndjson") || ends_with(".json"))
    return "jsonl";
  if (ends_with(".csv")) return "csv";
  throw activityvec::Error("cannot infer input format from \"" + path +
                           "\"; pass --format jsonl|csv");
}

std::vector<activityvec::ActivityRecord> load_records(const std::string& path,
                                                      const std::string& format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw activityvec::Error("cannot open input file: " + path);
  if (format == "jsonl") return activityvec::parse_jsonl(in);
  return activityvec::parse_csv(in);
}

activityvec::TfMode tf_mode_from(const std::string& name) {
  return name == "raw_count" ? activityvec::TfMode::raw_count
                             : activityvec::TfMode::binary;
}

activityvec::DisplayMode display_from(const std::string& name) {
  return name == "paper" ? activityvec::DisplayMode::paper
                         : activityvec::DisplayMode::full;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw activityvec::Error("cannot open output file: " + path);
  out << text;
  out.flush();
  if (!out) throw activityvec::Error("failed writing output file: " + path);
}

activityvec::WeightMatrix weights_for(const PipelineConfig& cfg,
                                      const std::string& input_format) {
  auto records = load_records(cfg.input, input_format);
  auto corpus = activityvec::build_corpus(records);
  return activityvec::tfidf(corpus, tf_mode_from(cfg.tf_mode));
}

int run_vectorize(const PipelineConfig& cfg) {
  const std::string input_format = cfg.input_format.empty()
                                       ? detect_input_format(cfg.input)
                                       : cfg.input_format;
  auto records = load_records(cfg.input, input_format);
  auto corpus = activityvec::build_corpus(records);
  auto tf = activityvec::term_frequency(corpus, tf_mode_from(cfg.tf_mode));
  auto idf = activityvec::inverse_document_frequency(corpus);
  auto weights = activityvec::tfidf(tf, idf);

  if (cfg.show_idf) {
    for (std::size_t j = 0; j < idf.size(); ++j)
      std::cerr << corpus.vocabulary()[j] << '\t'
                << activityvec::format_weight(idf[j], display_from(cfg.display))
                << '\n';
  }
  write_output(cfg.output,
               activityvec::matrix_csv(weights, display_from(cfg.display)));
  return 0;
}

void print_panel(const activityvec::GraphStatistics& stats, std::ostream& out) {
  char buf[64];
  out << "Diameter: " << stats.diameter << '\n';
  out << "Radius: " << stats.radius << '\n';
  std::snprintf(buf, sizeof buf, "%.4f", stats.average_path_length);
  out << "Average Path length: " << buf << '\n';
  out << "Number of shortest paths: " << stats.shortest_path_pair_count << '\n';
  std::snprintf(buf, sizeof buf, "%.4f", stats.average_weighted_degree);
  out << "Average Weighted Degree: " << buf << '\n';
  std::snprintf(buf, sizeof buf, "%.3f", stats.density);
  out << "Graph Density: " << buf << '\n';
  out << "Components: " << stats.component_count << '\n';
}

void print_porcelain(const activityvec::GraphStatistics& stats,
                     const activityvec::BipartiteGraph& graph,
                     std::ostream& out) {
  out << "nodes=" << graph.node_count() << '\n';
  out << "edges=" << graph.edge_count() << '\n';
  out << "diameter=" << stats.diameter << '\n';
  out << "radius=" << stats.radius << '\n';
  out << "average_path_length="
      << activityvec::detail::render_double(stats.average_path_length) << '\n';
  out << "shortest_paths=" << stats.shortest_path_pair_count << '\n';
  out << "average_weighted_degree="
      << activityvec::detail::render_double(stats.average_weighted_degree)
      << '\n';
  out << "density=" << activityvec::detail::render_double(stats.density)
      << '\n';
  out << "components=" << stats.component_count << '\n';
}

int run_stats(const PipelineConfig& cfg) {
  const std::string input_format = cfg.input_format.empty()
                                       ? detect_input_format(cfg.input)
                                       : cfg.input_format;
  auto weights = weights_for(cfg, input_format);
  auto graph =
      activityvec::build_graph(weights, cfg.threshold, cfg.keep_isolated);

  activityvec::GraphStatistics stats;
  try {
    stats = activityvec::statistics(graph);
  } catch (const activityvec::StatisticsUndefinedError& e) {
    std::cerr << "error: " << e.what() << '\n';
    if (graph.node_count() >= 1) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.4f",
                    activityvec::average_weighted_degree(graph));
      std::cerr << "Average Weighted Degree: " << buf << '\n';
    }
    return kExitDegenerate;
  }

  if (cfg.porcelain)
    print_porcelain(stats, graph, std::cout);
  else
    print_panel(stats, std::cout);
  return 0;
}

int run_export(const PipelineConfig& cfg) {
  const std::string input_format = detect_input_format(cfg.input);
  auto weights = weights_for(cfg, input_format);

  if (cfg.export_format == "matrix-csv") {
    write_output(cfg.output,
                 activityvec::matrix_csv(weights, display_from(cfg.display)));
    std::cerr << weights.rows() << " documents, " << weights.cols()
              << " actors\n";
    return 0;
  }

  auto graph =
      activityvec::build_graph(weights, cfg.threshold, cfg.keep_isolated);
  std::string text;
  if (cfg.export_format == "gexf")
    text = activityvec::to_gexf(graph);
  else if (cfg.export_format == "dot")
    text = activityvec::to_dot(graph);
  else
    text = activityvec::edge_csv(graph);
  write_output(cfg.output, text);
  std::cerr << graph.node_count() << " nodes, " << graph.edge_count()
            << " edges\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  PipelineConfig cfg;
  CLI::App app{
      "Vectorize social-activity logs with TF-IDF and analyze the "
      "actor-object graph"};
  app.require_subcommand(1);

  auto add_input_options = [&cfg](CLI::App* cmd) {
    cmd->add_option("--input,-i", cfg.input, "Activity log file (JSONL or CSV)")
        ->required();
    cmd->add_option("--tf-mode", cfg.tf_mode,
                    "Term-frequency mode (default binary)")
        ->check(CLI::IsMember({"binary", "raw_count"}));
  };

  CLI::App* vectorize = app.add_subcommand(
      "vectorize", "Write the TF-IDF weight matrix as CSV");
  add_input_options(vectorize);
  vectorize->add_option("--format", cfg.input_format, "Input format override")
      ->check(CLI::IsMember({"jsonl", "csv"}));
  vectorize->add_option("--display", cfg.display,
                        "Value rendering: full (6 decimals) or paper "
                        "(3 decimals, truncated)")
      ->check(CLI::IsMember({"full", "paper"}));
  vectorize->add_flag("--show-idf", cfg.show_idf,
                      "Also print the idf vector to stderr");
  vectorize->add_option("--output,-o", cfg.output,
                        "Output path (default stdout)");

  CLI::App* stats = app.add_subcommand(
      "stats", "Print the graph statistics panel");
  add_input_options(stats);
  stats->add_option("--format", cfg.input_format, "Input format override")
      ->check(CLI::IsMember({"jsonl", "csv"}));
  stats->add_option("--threshold", cfg.threshold,
                    "Keep edges with weight strictly above this (default 0)");
  stats->add_flag("--keep-isolated", cfg.keep_isolated,
                  "Keep documents and actors with no kept edge as nodes");
  stats->add_flag("--porcelain", cfg.porcelain,
                  "Machine-readable key=value output");

  CLI::App* export_cmd = app.add_subcommand(
      "export", "Write the graph (or matrix) in an exchange format");
  add_input_options(export_cmd);
  export_cmd->add_option("--format", cfg.export_format, "Output format")
      ->check(CLI::IsMember({"gexf", "dot", "edge-csv", "matrix-csv"}));
  export_cmd->add_option("--threshold", cfg.threshold,
                         "Keep edges with weight strictly above this");
  export_cmd->add_flag("--keep-isolated", cfg.keep_isolated,
                       "Keep documents and actors with no kept edge as nodes");
  export_cmd->add_option("--display", cfg.display,
                         "Value rendering for matrix-csv")
      ->check(CLI::IsMember({"full", "paper"}));
  export_cmd->add_option("--output,-o", cfg.output,
                         "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (vectorize->parsed()) return run_vectorize(cfg);
    if (stats->parsed()) return run_stats(cfg);
    return run_export(cfg);
  } catch (const activityvec::EmptyCorpusError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDegenerate;
  } catch (const activityvec::StatisticsUndefinedError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDegenerate;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
