#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "srcloc/sparse.hpp"

namespace srcloc {

// Immutable sparse undirected graph. No self-loops, no duplicate edges.
struct Graph {
  int node_count = 0;
  std::vector<std::pair<int, int>> edges;  // u < v, lexicographically sorted
  std::vector<int> adj_ptr;                // CSR neighbor lists, both directions
  std::vector<int> adj;                    // neighbors sorted ascending per node
  std::vector<int> degrees;

  int degree(int i) const { return degrees[i]; }
  std::span<const int> neighbors(int i) const {
    return {adj.data() + adj_ptr[i], adj.data() + adj_ptr[i + 1]};
  }
  int edge_count() const { return static_cast<int>(edges.size()); }

  // Normalizes (dedupes, sorts, drops self-loops) and builds adjacency.
  static Graph from_edges(int node_count, std::vector<std::pair<int, int>> edges);
};

struct EdgeListStats {
  int dropped_self_loops = 0;
  int dropped_duplicates = 0;
};

// Text edge lists: two whitespace-separated 0-based node ids per line,
// '#' starts a comment. A "# nodes=N" header fixes the node count, which
// also makes an edgeless file loadable.
Graph load_edge_list(const std::string& path, EdgeListStats* stats = nullptr);
void write_edge_list(const Graph& g, const std::string& path);

// Derived matrix operators shared by every consumer of a graph.
struct GraphOperators {
  CsrMatrix norm_weight;  // S = D^{-1/2} A D^{-1/2}
  CsrMatrix gcn_adj;      // D~^{-1/2} (A + I) D~^{-1/2}
  CsrMatrix laplacian;    // L = D - A
};

// Rejects graphs with isolated nodes (D^{-1/2} undefined there).
GraphOperators derive_operators(const Graph& g);

enum class GraphModel { ErdosRenyi, WattsStrogatz, BarabasiAlbert };

struct GraphGenParams {
  int nodes = 0;
  double edge_prob = 0.0;  // Erdos-Renyi
  int ring_k = 4;          // Watts-Strogatz: even neighbor count
  double rewire_prob = 0.0;
  int attach = 1;          // Barabasi-Albert: edges per new node
};

// Generates a graph and reduces it to its largest connected component.
Graph generate_graph(GraphModel model, const GraphGenParams& params, std::uint64_t seed);

Graph largest_component(const Graph& g);

// Normalized closeness centrality in [0, 1]; the Wasserman-Faust correction
// (reachable/(n-1) factor) handles disconnected graphs. With a subset, the
// centrality is computed on the induced subgraph; other entries are 0.
Vec closeness_centrality(const Graph& g);
Vec closeness_centrality(const Graph& g, const std::vector<int>& subset);

}  // namespace srcloc
