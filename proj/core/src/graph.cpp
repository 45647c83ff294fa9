#include "titan/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "titan/rng.hpp"

namespace titan {

DirectedGraph::DirectedGraph(int node_count, std::vector<std::pair<int, int>> edges)
    : node_count_(node_count), edges_(std::move(edges)) {
  if (node_count_ < 1) throw DomainError("graph needs at least one node");
  in_adj_.assign(node_count_, {});
  out_adj_.assign(node_count_, {});
  edge_lookup_.assign(static_cast<std::size_t>(node_count_) * node_count_, -1);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto [from, to] = edges_[e];
    if (from < 1 || from > node_count_ || to < 1 || to > node_count_)
      throw DomainError("edge endpoint out of range");
    if (from == to) throw DomainError("self-loops are not allowed");
    auto& slot = edge_lookup_[static_cast<std::size_t>(from - 1) * node_count_ + (to - 1)];
    if (slot != -1) throw DomainError("duplicate edge");
    slot = static_cast<std::int32_t>(e);
    out_adj_[from - 1].push_back(to);
    in_adj_[to - 1].push_back(from);
  }
  for (auto& v : in_adj_) std::sort(v.begin(), v.end());
  for (auto& v : out_adj_) std::sort(v.begin(), v.end());
}

void DirectedGraph::check_node(int node) const {
  if (node < 1 || node > node_count_) throw DomainError("node id out of range");
}

const std::vector<int>& DirectedGraph::in_neighbors(int node) const {
  check_node(node);
  return in_adj_[node - 1];
}

const std::vector<int>& DirectedGraph::out_neighbors(int node) const {
  check_node(node);
  return out_adj_[node - 1];
}

bool DirectedGraph::has_edge(int from, int to) const {
  return edge_index(from, to) >= 0;
}

int DirectedGraph::edge_index(int from, int to) const {
  if (from < 1 || from > node_count_ || to < 1 || to > node_count_) return -1;
  return edge_lookup_[static_cast<std::size_t>(from - 1) * node_count_ + (to - 1)];
}

namespace {

// Distances from a 0-based source over the given adjacency; -1 = unreachable.
std::vector<int> bfs_dist(const std::vector<std::vector<int>>& adj, int src) {
  std::vector<int> dist(adj.size(), -1);
  std::deque<int> queue{src};
  dist[src] = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : adj[u]) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

std::vector<std::vector<int>> out_adjacency0(const DirectedGraph& g) {
  std::vector<std::vector<int>> adj(g.node_count());
  for (int i = 1; i <= g.node_count(); ++i)
    for (int j : g.out_neighbors(i)) adj[i - 1].push_back(j - 1);
  return adj;
}

std::vector<std::vector<int>> in_adjacency0(const DirectedGraph& g) {
  std::vector<std::vector<int>> adj(g.node_count());
  for (int i = 1; i <= g.node_count(); ++i)
    for (int j : g.in_neighbors(i)) adj[i - 1].push_back(j - 1);
  return adj;
}

// Symmetrized 0-based adjacency (deduplicated, sorted).
std::vector<std::vector<int>> undirected_adjacency0(const DirectedGraph& g) {
  std::vector<std::vector<int>> adj(g.node_count());
  for (const auto& [from, to] : g.edges()) {
    adj[from - 1].push_back(to - 1);
    adj[to - 1].push_back(from - 1);
  }
  for (auto& v : adj) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  return adj;
}

struct Dinic {
  struct Arc {
    int to, rev, cap;
  };
  std::vector<std::vector<Arc>> adj;
  std::vector<int> level, iter;

  explicit Dinic(int n) : adj(n), level(n), iter(n) {}

  void add_arc(int u, int v, int cap) {
    adj[u].push_back({v, static_cast<int>(adj[v].size()), cap});
    adj[v].push_back({u, static_cast<int>(adj[u].size()) - 1, 0});
  }

  bool bfs(int s, int t) {
    std::fill(level.begin(), level.end(), -1);
    std::deque<int> queue{s};
    level[s] = 0;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (const Arc& a : adj[u]) {
        if (a.cap > 0 && level[a.to] < 0) {
          level[a.to] = level[u] + 1;
          queue.push_back(a.to);
        }
      }
    }
    return level[t] >= 0;
  }

  int dfs(int u, int t, int f) {
    if (u == t) return f;
    for (int& i = iter[u]; i < static_cast<int>(adj[u].size()); ++i) {
      Arc& a = adj[u][i];
      if (a.cap > 0 && level[a.to] == level[u] + 1) {
        const int d = dfs(a.to, t, std::min(f, a.cap));
        if (d > 0) {
          a.cap -= d;
          adj[a.to][a.rev].cap += d;
          return d;
        }
      }
    }
    return 0;
  }

  int max_flow(int s, int t, int limit) {
    int flow = 0;
    while (flow < limit && bfs(s, t)) {
      std::fill(iter.begin(), iter.end(), 0);
      int f;
      while (flow < limit && (f = dfs(s, t, limit - flow)) > 0) flow += f;
    }
    return flow;
  }
};

// Menger: for non-adjacent s, t the minimum vertex cut equals the maximum
// number of internally disjoint paths, computed on the split-node network.
int local_vertex_connectivity(const std::vector<std::vector<int>>& und, int s, int t) {
  const int n = static_cast<int>(und.size());
  const int big = n + 1;
  Dinic net(2 * n);
  for (int u = 0; u < n; ++u)
    net.add_arc(2 * u, 2 * u + 1, (u == s || u == t) ? big : 1);
  for (int u = 0; u < n; ++u)
    for (int v : und[u]) net.add_arc(2 * u + 1, 2 * v, big);
  return net.max_flow(2 * s + 1, 2 * t, n);
}

}  // namespace

bool is_strongly_connected(const DirectedGraph& g) {
  if (g.node_count() == 1) return true;
  const auto fwd = bfs_dist(out_adjacency0(g), 0);
  if (std::any_of(fwd.begin(), fwd.end(), [](int d) { return d < 0; })) return false;
  const auto bwd = bfs_dist(in_adjacency0(g), 0);
  return std::all_of(bwd.begin(), bwd.end(), [](int d) { return d >= 0; });
}

int diameter(const DirectedGraph& g) {
  if (!is_strongly_connected(g))
    throw DomainError("diameter is undefined: graph is not strongly connected");
  const auto adj = out_adjacency0(g);
  int best = 0;
  for (int s = 0; s < g.node_count(); ++s) {
    const auto dist = bfs_dist(adj, s);
    best = std::max(best, *std::max_element(dist.begin(), dist.end()));
  }
  return best;
}

int weak_vertex_connectivity(const DirectedGraph& g) {
  const int n = g.node_count();
  if (n < 2) throw DomainError("weak vertex connectivity needs at least two nodes");
  const auto und = undirected_adjacency0(g);

  bool complete = true;
  for (int u = 0; u < n && complete; ++u)
    complete = static_cast<int>(und[u].size()) == n - 1;
  if (complete) return n - 1;

  const auto dist = bfs_dist(und, 0);
  if (std::any_of(dist.begin(), dist.end(), [](int d) { return d < 0; })) return 0;

  const auto adjacent = [&](int u, int v) {
    return std::binary_search(und[u].begin(), und[u].end(), v);
  };

  // Every minimum cut either separates a minimum-degree node v from a
  // non-neighbor, or contains v and separates two non-adjacent neighbors
  // of v; checking those pairs is enough.
  int v = 0;
  for (int u = 1; u < n; ++u)
    if (und[u].size() < und[v].size()) v = u;

  int k = static_cast<int>(und[v].size());
  for (int w = 0; w < n; ++w) {
    if (w == v || adjacent(v, w)) continue;
    k = std::min(k, local_vertex_connectivity(und, v, w));
  }
  const auto& nbrs = und[v];
  for (std::size_t a = 0; a < nbrs.size(); ++a) {
    for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
      if (adjacent(nbrs[a], nbrs[b])) continue;
      k = std::min(k, local_vertex_connectivity(und, nbrs[a], nbrs[b]));
    }
  }
  return k;
}

IncidenceMatrix incidence_matrix(const DirectedGraph& g) {
  IncidenceMatrix b;
  b.nodes = g.node_count();
  b.edges = g.edge_count();
  b.entries.assign(static_cast<std::size_t>(b.nodes) * b.edges, 0);
  for (int e = 0; e < b.edges; ++e) {
    const auto [from, to] = g.edges()[e];
    b.entries[static_cast<std::size_t>(from - 1) * b.edges + e] = -1;
    b.entries[static_cast<std::size_t>(to - 1) * b.edges + e] = +1;
  }
  return b;
}

DirectedGraph generate_graph(GraphKind kind, int m, std::uint64_t seed, int chord_count) {
  if (m < 1) throw DomainError("graph needs at least one node");
  std::vector<std::pair<int, int>> edges;
  switch (kind) {
    case GraphKind::kRing:
    case GraphKind::kRingPlusChords: {
      if (m >= 2) {
        for (int i = 1; i < m; ++i) edges.emplace_back(i, i + 1);
        edges.emplace_back(m, 1);
      }
      if (kind == GraphKind::kRingPlusChords && chord_count > 0) {
        if (m < 3 && chord_count > 0)
          throw DomainError("chords need at least three nodes");
        Rng rng(derive_seed(seed, 0x67726170));
        std::vector<char> used(static_cast<std::size_t>(m) * m, 0);
        for (const auto& [f, t] : edges) used[(f - 1) * m + (t - 1)] = 1;
        const long long slots = static_cast<long long>(m) * (m - 1) - static_cast<long long>(edges.size());
        if (chord_count > slots) throw DomainError("more chords requested than free node pairs");
        int added = 0;
        while (added < chord_count) {
          const int f = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(m))) + 1;
          const int t = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(m))) + 1;
          if (f == t || used[(f - 1) * m + (t - 1)]) continue;
          used[(f - 1) * m + (t - 1)] = 1;
          edges.emplace_back(f, t);
          ++added;
        }
      }
      break;
    }
    case GraphKind::kComplete: {
      for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
          if (i != j) edges.emplace_back(i, j);
      break;
    }
  }
  return DirectedGraph(m, std::move(edges));
}

DirectedGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int m = -1;
  std::vector<std::pair<int, int>> edges;
  std::vector<char> seen;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    if (m < 0) {
      if (!(fields >> m)) {
        if (fields.eof()) { m = -1; continue; }  // blank line before header
        throw ParseError("line " + std::to_string(line_no) + ": expected node count");
      }
      std::string rest;
      if (fields >> rest)
        throw ParseError("line " + std::to_string(line_no) + ": trailing tokens after node count");
      if (m < 1) throw ParseError("line " + std::to_string(line_no) + ": node count must be positive");
      seen.assign(static_cast<std::size_t>(m) * m, 0);
      continue;
    }
    int from = 0, to = 0;
    if (!(fields >> from)) continue;  // blank line
    if (!(fields >> to))
      throw ParseError("line " + std::to_string(line_no) + ": expected \"i j\" edge");
    std::string rest;
    if (fields >> rest)
      throw ParseError("line " + std::to_string(line_no) + ": trailing tokens after edge");
    if (from < 1 || from > m || to < 1 || to > m)
      throw ParseError("line " + std::to_string(line_no) + ": edge endpoint out of range");
    if (from == to)
      throw ParseError("line " + std::to_string(line_no) + ": self-loop");
    auto& mark = seen[static_cast<std::size_t>(from - 1) * m + (to - 1)];
    if (mark) throw ParseError("line " + std::to_string(line_no) + ": duplicate edge");
    mark = 1;
    edges.emplace_back(from, to);
  }
  if (m < 0) throw ParseError("empty graph file");
  return DirectedGraph(m, std::move(edges));
}

std::string format_graph(const DirectedGraph& g) {
  std::ostringstream out;
  out << g.node_count() << "\n";
  for (const auto& [from, to] : g.edges()) out << from << " " << to << "\n";
  return out.str();
}

}  // namespace titan
