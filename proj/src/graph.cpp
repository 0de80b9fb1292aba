#include "srcloc/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "srcloc/rng.hpp"

namespace srcloc {

Graph Graph::from_edges(int node_count, std::vector<std::pair<int, int>> edges) {
  for (auto& [u, v] : edges) {
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::erase_if(edges, [](const auto& e) { return e.first == e.second; });

  Graph g;
  g.node_count = node_count;
  g.edges = std::move(edges);
  g.degrees.assign(node_count, 0);
  for (const auto& [u, v] : g.edges) {
    if (u < 0 || v >= node_count) throw std::invalid_argument("edge endpoint out of range");
    g.degrees[u]++;
    g.degrees[v]++;
  }
  g.adj_ptr.assign(node_count + 1, 0);
  for (int i = 0; i < node_count; ++i) g.adj_ptr[i + 1] = g.adj_ptr[i] + g.degrees[i];
  g.adj.resize(g.adj_ptr[node_count]);
  std::vector<int> fill(node_count, 0);
  for (const auto& [u, v] : g.edges) {
    g.adj[g.adj_ptr[u] + fill[u]++] = v;
    g.adj[g.adj_ptr[v] + fill[v]++] = u;
  }
  for (int i = 0; i < node_count; ++i)
    std::sort(g.adj.begin() + g.adj_ptr[i], g.adj.begin() + g.adj_ptr[i + 1]);
  return g;
}

Graph load_edge_list(const std::string& path, EdgeListStats* stats) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open edge list: " + path);

  std::vector<std::pair<int, int>> raw;
  int header_nodes = -1;
  int max_id = -1;
  EdgeListStats local;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      // a "# nodes=N" header pins the node count
      const std::string comment = line.substr(hash + 1);
      const auto key = comment.find("nodes=");
      if (key != std::string::npos) header_nodes = std::stoi(comment.substr(key + 6));
      line = line.substr(0, hash);
    }
    std::istringstream ls(line);
    long long u, v;
    if (!(ls >> u)) continue;  // blank line
    if (!(ls >> v)) throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected two node ids");
    std::string trailing;
    if (ls >> trailing)
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": trailing tokens after edge");
    if (u < 0 || v < 0) throw std::runtime_error(path + ":" + std::to_string(lineno) + ": negative node id");
    if (u == v) {
      local.dropped_self_loops++;
      continue;
    }
    raw.emplace_back(static_cast<int>(u), static_cast<int>(v));
    max_id = std::max(max_id, static_cast<int>(std::max(u, v)));
  }

  int n = std::max(max_id + 1, header_nodes);
  if (raw.empty() && header_nodes < 0)
    throw std::runtime_error(path + ": no edges (and no '# nodes=' header)");

  const std::size_t before = raw.size();
  Graph g = Graph::from_edges(n, std::move(raw));
  local.dropped_duplicates = static_cast<int>(before - g.edges.size());
  if (stats) *stats = local;
  return g;
}

void write_edge_list(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write edge list: " + path);
  out << "# nodes=" << g.node_count << "\n";
  for (const auto& [u, v] : g.edges) out << u << " " << v << "\n";
  if (!out) throw std::runtime_error("write failed: " + path);
}

GraphOperators derive_operators(const Graph& g) {
  const int n = g.node_count;
  for (int i = 0; i < n; ++i)
    if (g.degrees[i] == 0)
      throw std::invalid_argument("isolated node " + std::to_string(i) + ": operators undefined");

  std::vector<double> dinv_sqrt(n), dinv_sqrt_loop(n);
  for (int i = 0; i < n; ++i) {
    dinv_sqrt[i] = 1.0 / std::sqrt(static_cast<double>(g.degrees[i]));
    dinv_sqrt_loop[i] = 1.0 / std::sqrt(static_cast<double>(g.degrees[i] + 1));
  }

  std::vector<std::vector<std::pair<int, double>>> s_rows(n), a_rows(n), l_rows(n);
  for (int i = 0; i < n; ++i) {
    const auto nbrs = g.neighbors(i);
    s_rows[i].reserve(nbrs.size());
    a_rows[i].reserve(nbrs.size() + 1);
    l_rows[i].reserve(nbrs.size() + 1);
    bool self_done = false;
    for (int j : nbrs) {
      if (!self_done && j > i) {
        a_rows[i].emplace_back(i, dinv_sqrt_loop[i] * dinv_sqrt_loop[i]);
        l_rows[i].emplace_back(i, static_cast<double>(g.degrees[i]));
        self_done = true;
      }
      s_rows[i].emplace_back(j, dinv_sqrt[i] * dinv_sqrt[j]);
      a_rows[i].emplace_back(j, dinv_sqrt_loop[i] * dinv_sqrt_loop[j]);
      l_rows[i].emplace_back(j, -1.0);
    }
    if (!self_done) {
      a_rows[i].emplace_back(i, dinv_sqrt_loop[i] * dinv_sqrt_loop[i]);
      l_rows[i].emplace_back(i, static_cast<double>(g.degrees[i]));
    }
  }

  GraphOperators ops;
  ops.norm_weight = csr_from_rows(n, n, s_rows);
  ops.gcn_adj = csr_from_rows(n, n, a_rows);
  ops.laplacian = csr_from_rows(n, n, l_rows);
  return ops;
}

namespace {

Graph erdos_renyi(int n, double p, Rng& rng) {
  if (n < 1) throw std::invalid_argument("erdos-renyi: need at least one node");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("erdos-renyi: p outside [0,1]");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.uniform() < p) edges.emplace_back(u, v);
  return Graph::from_edges(n, std::move(edges));
}

Graph watts_strogatz(int n, int k, double p, Rng& rng) {
  if (k < 2 || k % 2 != 0) throw std::invalid_argument("watts-strogatz: k must be even and >= 2");
  if (k >= n) throw std::invalid_argument("watts-strogatz: k must be < n");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("watts-strogatz: rewiring probability outside [0,1]");

  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> adj(n);
  auto connected = [&](int u, int v) {
    return std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end();
  };
  auto add_edge = [&](int u, int v) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  };
  for (int i = 0; i < n; ++i)
    for (int d = 1; d <= k / 2; ++d) add_edge(i, (i + d) % n);

  if (p > 0.0) {
    for (int i = 0; i < n; ++i) {
      for (int d = 1; d <= k / 2; ++d) {
        const int j = (i + d) % n;
        if (rng.uniform() >= p) continue;
        // rewire (i, j) -> (i, w)
        int w = static_cast<int>(rng.below(n));
        int guard = 0;
        while ((w == i || connected(i, w)) && guard++ < 8 * n) w = static_cast<int>(rng.below(n));
        if (w == i || connected(i, w)) continue;  // saturated node, keep original edge
        adj[i].erase(std::find(adj[i].begin(), adj[i].end(), j));
        adj[j].erase(std::find(adj[j].begin(), adj[j].end(), i));
        add_edge(i, w);
      }
    }
  }
  for (int u = 0; u < n; ++u)
    for (int v : adj[u])
      if (u < v) edges.emplace_back(u, v);
  return Graph::from_edges(n, std::move(edges));
}

// Preferential attachment starting from `m` unconnected seed nodes; every new
// node attaches to m distinct existing nodes, giving exactly m(n-m) edges.
Graph barabasi_albert(int n, int m, Rng& rng) {
  if (m < 1) throw std::invalid_argument("barabasi-albert: attachment count must be >= 1");
  if (m >= n) throw std::invalid_argument("barabasi-albert: attachment count must be < node count");

  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m) * (n - m));
  std::vector<int> repeated;  // node id appears once per incident edge
  repeated.reserve(2 * static_cast<std::size_t>(m) * (n - m));

  std::vector<int> targets(m);
  for (int i = 0; i < m; ++i) targets[i] = i;

  for (int v = m; v < n; ++v) {
    for (int t : targets) {
      edges.emplace_back(t, v);
      repeated.push_back(t);
      repeated.push_back(v);
    }
    // sample m distinct nodes proportional to degree
    std::vector<int> next;
    while (static_cast<int>(next.size()) < m) {
      const int cand = repeated[rng.below(repeated.size())];
      if (std::find(next.begin(), next.end(), cand) == next.end()) next.push_back(cand);
    }
    targets = std::move(next);
  }
  return Graph::from_edges(n, std::move(edges));
}

}  // namespace

Graph largest_component(const Graph& g) {
  const int n = g.node_count;
  std::vector<int> comp(n, -1);
  int best_root = -1, best_size = 0, ncomp = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    int size = 0;
    stack.push_back(s);
    comp[s] = ncomp;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      ++size;
      for (int v : g.neighbors(u)) {
        if (comp[v] < 0) {
          comp[v] = ncomp;
          stack.push_back(v);
        }
      }
    }
    if (size > best_size) {
      best_size = size;
      best_root = ncomp;
    }
    ++ncomp;
  }
  if (ncomp <= 1) return g;

  std::vector<int> remap(n, -1);
  int next = 0;
  for (int i = 0; i < n; ++i)
    if (comp[i] == best_root) remap[i] = next++;
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edges.size());
  for (const auto& [u, v] : g.edges)
    if (remap[u] >= 0 && remap[v] >= 0) edges.emplace_back(remap[u], remap[v]);
  return Graph::from_edges(next, std::move(edges));
}

Graph generate_graph(GraphModel model, const GraphGenParams& params, std::uint64_t seed) {
  Rng rng(mix64(seed));
  Graph g;
  switch (model) {
    case GraphModel::ErdosRenyi: g = erdos_renyi(params.nodes, params.edge_prob, rng); break;
    case GraphModel::WattsStrogatz: g = watts_strogatz(params.nodes, params.ring_k, params.rewire_prob, rng); break;
    case GraphModel::BarabasiAlbert: g = barabasi_albert(params.nodes, params.attach, rng); break;
  }
  g = largest_component(g);
  if (g.edges.empty()) throw std::runtime_error("generated graph is degenerate (no edges after component extraction)");
  return g;
}

namespace {

// BFS over the induced subgraph (member[] == 1 restricts membership).
// Returns the normalized closeness of `src` within that subgraph.
double closeness_of(const Graph& g, int src, const std::vector<char>& member, int sub_n,
                    std::vector<int>& dist, std::vector<int>& queue) {
  std::fill(dist.begin(), dist.end(), -1);
  dist[src] = 0;
  queue.clear();
  queue.push_back(src);
  long long dist_sum = 0;
  int reached = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int u = queue[head];
    for (int v : g.neighbors(u)) {
      if (!member[v] || dist[v] >= 0) continue;
      dist[v] = dist[u] + 1;
      dist_sum += dist[v];
      ++reached;
      queue.push_back(v);
    }
  }
  if (reached == 0 || sub_n <= 1) return 0.0;
  const double base = static_cast<double>(reached) / static_cast<double>(dist_sum);
  const double correction = static_cast<double>(reached) / static_cast<double>(sub_n - 1);
  return base * correction;
}

}  // namespace

Vec closeness_centrality(const Graph& g) {
  std::vector<int> all(g.node_count);
  for (int i = 0; i < g.node_count; ++i) all[i] = i;
  return closeness_centrality(g, all);
}

Vec closeness_centrality(const Graph& g, const std::vector<int>& subset) {
  if (subset.empty()) throw std::invalid_argument("closeness_centrality: empty subset");
  std::vector<char> member(g.node_count, 0);
  for (int i : subset) {
    if (i < 0 || i >= g.node_count) throw std::invalid_argument("closeness_centrality: node out of range");
    member[i] = 1;
  }
  Vec out(g.node_count, 0.0);
  std::vector<int> dist(g.node_count);
  std::vector<int> queue;
  queue.reserve(subset.size());
  for (int i : subset) out[i] = closeness_of(g, i, member, static_cast<int>(subset.size()), dist, queue);
  return out;
}

}  // namespace srcloc
