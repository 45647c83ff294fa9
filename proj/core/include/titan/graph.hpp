#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "titan/errors.hpp"

namespace titan {

/// Immutable directed graph on nodes 1..m. No self-loops, no duplicate
/// edges. Edge order is preserved and is the canonical column order for
/// the incidence matrix.
class DirectedGraph {
 public:
  DirectedGraph(int node_count, std::vector<std::pair<int, int>> edges);

  int node_count() const { return node_count_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  /// Sorted ascending. Node ids are 1-based; out of range throws DomainError.
  const std::vector<int>& in_neighbors(int node) const;
  const std::vector<int>& out_neighbors(int node) const;

  bool has_edge(int from, int to) const;

  /// Position of (from, to) in edges(), or -1.
  int edge_index(int from, int to) const;

 private:
  void check_node(int node) const;

  int node_count_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> in_adj_, out_adj_;
  std::vector<std::int32_t> edge_lookup_;  // m*m, -1 when absent
};

bool is_strongly_connected(const DirectedGraph& g);

/// Longest shortest directed path. Throws DomainError when the graph is
/// not strongly connected (the diameter is undefined there).
int diameter(const DirectedGraph& g);

/// Vertex connectivity of the symmetrized (undirected) graph: the smallest
/// number of nodes whose removal disconnects it, m-1 for complete graphs,
/// 0 when already disconnected. Computed with unit-capacity max-flow cuts.
int weak_vertex_connectivity(const DirectedGraph& g);

/// Node-by-edge matrix: column e for edge (i, j) holds +1 at the receiver
/// j and -1 at the sender i, so every column sums to zero.
struct IncidenceMatrix {
  int nodes = 0;
  int edges = 0;
  std::vector<std::int8_t> entries;  // row-major nodes x edges

  int operator()(int node, int edge) const {
    return entries[static_cast<std::size_t>(node - 1) * edges + edge];
  }
};

IncidenceMatrix incidence_matrix(const DirectedGraph& g);

enum class GraphKind { kRing, kRingPlusChords, kComplete };

/// Deterministic generators: identical (kind, m, seed, chords) always give
/// identical edge lists.
DirectedGraph generate_graph(GraphKind kind, int m, std::uint64_t seed = 0,
                             int chord_count = 0);

/// Edge-list text: first line m, then one "i j" per line (1-based ids).
/// Blank lines and '#' comments are skipped. Errors carry line numbers.
DirectedGraph parse_graph(const std::string& text);
std::string format_graph(const DirectedGraph& g);

}  // namespace titan
