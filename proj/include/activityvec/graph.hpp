#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "activityvec/errors.hpp"
#include "activityvec/tfidf.hpp"

namespace activityvec {

enum class NodeKind { object, actor };

// Undirected weighted bipartite graph: object nodes on one side, actor
// nodes on the other, one edge per kept weight-matrix cell. Nodes share a
// unified index space for path algorithms: objects first, then actors.
struct BipartiteGraph {
  struct Edge {
    std::size_t object;  // index into object_nodes
    std::size_t actor;   // index into actor_nodes
    double weight;       // > 0
  };

  std::vector<ObjectId> object_nodes;
  std::vector<ActorId> actor_nodes;
  std::vector<Edge> edges;

  std::size_t node_count() const {
    return object_nodes.size() + actor_nodes.size();
  }
  std::size_t edge_count() const { return edges.size(); }

  std::size_t object_node(std::size_t object_index) const {
    return object_index;
  }
  std::size_t actor_node(std::size_t actor_index) const {
    return object_nodes.size() + actor_index;
  }

  NodeKind kind(std::size_t node) const {
    return node < object_nodes.size() ? NodeKind::object : NodeKind::actor;
  }

  const std::string& name(std::size_t node) const {
    return node < object_nodes.size()
               ? object_nodes[node]
               : actor_nodes[node - object_nodes.size()];
  }

  std::optional<std::size_t> find_object(const ObjectId& id) const {
    for (std::size_t i = 0; i < object_nodes.size(); ++i)
      if (object_nodes[i] == id) return i;
    return std::nullopt;
  }

  std::optional<std::size_t> find_actor(const ActorId& id) const {
    for (std::size_t i = 0; i < actor_nodes.size(); ++i)
      if (actor_nodes[i] == id) return i;
    return std::nullopt;
  }

  // Unified index of the node with this name; objects win a (rare) tie.
  std::optional<std::size_t> find_node(const std::string& name) const {
    if (auto obj = find_object(name)) return object_node(*obj);
    if (auto act = find_actor(name)) return actor_node(*act);
    return std::nullopt;
  }

  std::vector<std::vector<std::size_t>> adjacency() const {
    std::vector<std::vector<std::size_t>> adj(node_count());
    for (const Edge& e : edges) {
      const std::size_t u = object_node(e.object);
      const std::size_t v = actor_node(e.actor);
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    return adj;
  }
};

// Materializes the weight matrix as a graph. An edge is kept iff its
// weight is strictly greater than `threshold`; with the default 0 that
// means every positive weight. Documents and actors that keep no edge are
// dropped unless `keep_isolated` is set.
inline BipartiteGraph build_graph(const WeightMatrix& weights,
                                  double threshold = 0.0,
                                  bool keep_isolated = false) {
  if (threshold < 0.0)
    throw ValidationError("threshold must be >= 0, got " +
                          std::to_string(threshold));

  const std::size_t rows = weights.rows();
  const std::size_t cols = weights.cols();
  std::vector<bool> keep_row(rows, keep_isolated);
  std::vector<bool> keep_col(cols, keep_isolated);
  if (!keep_isolated) {
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        if (weights.values[i][j] > threshold) {
          keep_row[i] = true;
          keep_col[j] = true;
        }
      }
    }
  }

  BipartiteGraph graph;
  std::vector<std::size_t> row_node(rows, 0);
  std::vector<std::size_t> col_node(cols, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!keep_row[i]) continue;
    row_node[i] = graph.object_nodes.size();
    graph.object_nodes.push_back(weights.objects[i]);
  }
  for (std::size_t j = 0; j < cols; ++j) {
    if (!keep_col[j]) continue;
    col_node[j] = graph.actor_nodes.size();
    graph.actor_nodes.push_back(weights.actors[j]);
  }
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (weights.values[i][j] > threshold)
        graph.edges.push_back(
            BipartiteGraph::Edge{row_node[i], col_node[j], weights.values[i][j]});
    }
  }
  return graph;
}

// Hop distances for every ordered node pair, `unreachable` where no path
// exists. Distances are unweighted: edge weights play no role in paths.
struct DistanceMatrix {
  static constexpr int unreachable = -1;

  std::size_t size = 0;
  std::vector<int> hops;  // size*size, row-major

  int at(std::size_t u, std::size_t v) const { return hops[u * size + v]; }
  bool reachable(std::size_t u, std::size_t v) const {
    return at(u, v) != unreachable;
  }
};

namespace detail {

inline void bfs_fill(const std::vector<std::vector<std::size_t>>& adj,
                     std::size_t source, int* dist) {
  for (std::size_t v = 0; v < adj.size(); ++v) dist[v] = DistanceMatrix::unreachable;
  dist[source] = 0;
  std::deque<std::size_t> queue{source};
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v : adj[u]) {
      if (dist[v] != DistanceMatrix::unreachable) continue;
      dist[v] = dist[u] + 1;
      queue.push_back(v);
    }
  }
}

}  // namespace detail

// Breadth-first search from every node.
inline DistanceMatrix all_pairs_distances(const BipartiteGraph& graph) {
  const std::size_t n = graph.node_count();
  DistanceMatrix dm;
  dm.size = n;
  dm.hops.assign(n * n, DistanceMatrix::unreachable);
  const auto adj = graph.adjacency();
  for (std::size_t s = 0; s < n; ++s)
    detail::bfs_fill(adj, s, dm.hops.data() + s * n);
  return dm;
}

// Max hop distance from this node to any reachable node; 0 for an
// isolated node.
inline int eccentricity(const BipartiteGraph& graph, std::size_t node) {
  if (node >= graph.node_count())
    throw NotFoundError("node index " + std::to_string(node) +
                        " out of range");
  const auto adj = graph.adjacency();
  std::vector<int> dist(graph.node_count());
  detail::bfs_fill(adj, node, dist.data());
  int ecc = 0;
  for (int d : dist)
    if (d > ecc) ecc = d;
  return ecc;
}

inline int eccentricity(const BipartiteGraph& graph, const std::string& name) {
  auto node = graph.find_node(name);
  if (!node) throw NotFoundError("no node named \"" + name + "\"");
  return eccentricity(graph, *node);
}

// Partition of all nodes into connected components. Components are ordered
// by their smallest unified node index; nodes within a component are in
// index order.
inline std::vector<std::vector<std::size_t>> connected_components(
    const BipartiteGraph& graph) {
  const std::size_t n = graph.node_count();
  const auto adj = graph.adjacency();
  std::vector<bool> visited(n, false);
  std::vector<std::vector<std::size_t>> components;
  for (std::size_t s = 0; s < n; ++s) {
    if (visited[s]) continue;
    std::vector<std::size_t> component;
    std::deque<std::size_t> queue{s};
    visited[s] = true;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      component.push_back(u);
      for (std::size_t v : adj[u]) {
        if (visited[v]) continue;
        visited[v] = true;
        queue.push_back(v);
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

// 2 * (sum of edge weights) / n.
inline double average_weighted_degree(const BipartiteGraph& graph) {
  if (graph.node_count() == 0)
    throw StatisticsUndefinedError(
        "average weighted degree is undefined for an empty graph");
  double weight_sum = 0.0;
  for (const auto& edge : graph.edges) weight_sum += edge.weight;
  return 2.0 * weight_sum / static_cast<double>(graph.node_count());
}

// The statistics panel: diameter, radius, average path length, number of
// shortest paths, average weighted degree, density, component count.
struct GraphStatistics {
  int diameter = 0;
  int radius = 0;
  double average_path_length = 0.0;
  std::int64_t shortest_path_pair_count = 0;
  double average_weighted_degree = 0.0;
  double density = 0.0;
  int component_count = 0;
};

// Path metrics use unweighted hop distances and are aggregated over
// reachable ordered pairs only; `shortest_path_pair_count` is the number
// of such pairs (u, v), u != v. Density is 2|E| / (n(n-1)). Throws
// StatisticsUndefinedError for graphs with fewer than 2 nodes; the degree
// metric is still available through average_weighted_degree().
inline GraphStatistics statistics(const BipartiteGraph& graph) {
  const std::size_t n = graph.node_count();
  if (n < 2)
    throw StatisticsUndefinedError(
        "density and path statistics need at least 2 nodes, got " +
        std::to_string(n));

  const DistanceMatrix dm = all_pairs_distances(graph);
  GraphStatistics stats;

  int diameter = 0;
  int radius = -1;
  std::int64_t pair_count = 0;
  std::int64_t hop_sum = 0;
  for (std::size_t u = 0; u < n; ++u) {
    int ecc = 0;
    for (std::size_t v = 0; v < n; ++v) {
      const int d = dm.at(u, v);
      if (d == DistanceMatrix::unreachable) continue;
      if (d > ecc) ecc = d;
      if (u != v) {
        ++pair_count;
        hop_sum += d;
      }
    }
    if (ecc > diameter) diameter = ecc;
    if (radius < 0 || ecc < radius) radius = ecc;
  }

  stats.diameter = diameter;
  stats.radius = radius;
  stats.shortest_path_pair_count = pair_count;
  stats.average_path_length =
      pair_count > 0 ? static_cast<double>(hop_sum) / static_cast<double>(pair_count)
                     : 0.0;
  stats.average_weighted_degree = average_weighted_degree(graph);
  stats.density = 2.0 * static_cast<double>(graph.edge_count()) /
                  (static_cast<double>(n) * static_cast<double>(n - 1));
  stats.component_count = static_cast<int>(connected_components(graph).size());
  return stats;
}

}  // namespace activityvec
