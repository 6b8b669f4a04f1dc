#include "ballsearch/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ballsearch {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  if (n > std::numeric_limits<Vertex>::max()) throw std::invalid_argument("too many vertices");
  Graph g;
  g.n_ = n;
  g.kind_ = GraphKind::Explicit;
  g.adjacency_.assign(n, {});
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto& adj = g.adjacency_[v];
    std::sort(adj.begin(), adj.end());
    if (std::adjacent_find(adj.begin(), adj.end()) != adj.end())
      throw std::invalid_argument("duplicate edge at vertex " + std::to_string(v));
  }
  return g;
}

Graph Graph::hypercube(unsigned dimension) {
  if (dimension > kMaxHypercubeDimension)
    throw std::invalid_argument("hypercube dimension exceeds " + std::to_string(kMaxHypercubeDimension));
  Graph g;
  g.n_ = std::size_t{1} << dimension;
  g.kind_ = GraphKind::Hypercube;
  g.dimension_ = dimension;
  return g;
}

std::size_t Graph::edge_count() const {
  if (is_hypercube()) return n_ * dimension_ / 2;
  std::size_t twice = 0;
  for (const auto& adj : adjacency_) twice += adj.size();
  return twice / 2;
}

std::size_t Graph::max_degree() const {
  if (is_hypercube()) return dimension_;
  std::size_t d = 0;
  for (const auto& adj : adjacency_) d = std::max(d, adj.size());
  return d;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  std::vector<Vertex> out;
  for_each_neighbor(v, [&](Vertex u) { out.push_back(u); });
  std::sort(out.begin(), out.end());
  return out;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  if (is_hypercube()) return std::popcount(u ^ v) == 1;
  return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex v = 0; v < n_; ++v)
    for_each_neighbor(v, [&](Vertex u) {
      if (v < u) out.emplace_back(v, u);
    });
  std::sort(out.begin(), out.end());
  return out;
}

void Graph::check_vertex(Vertex v) const {
  if (v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range (n=" + std::to_string(n_) + ")");
}

namespace {

// BFS that stops expanding past `limit`; dist holds kUnreachable for vertices not reached.
std::vector<std::uint32_t> bounded_bfs(const Graph& g, Vertex source, std::uint32_t limit) {
  std::vector<std::uint32_t> dist(g.order(), kUnreachable);
  std::vector<Vertex> frontier{source};
  std::vector<Vertex> next;
  dist[source] = 0;
  for (std::uint32_t level = 0; !frontier.empty() && level < limit; ++level) {
    next.clear();
    for (Vertex v : frontier)
      g.for_each_neighbor(v, [&](Vertex u) {
        if (dist[u] == kUnreachable) {
          dist[u] = level + 1;
          next.push_back(u);
        }
      });
    frontier.swap(next);
  }
  return dist;
}

}  // namespace

DistanceVector bfs(const Graph& g, Vertex source) {
  g.check_vertex(source);
  return DistanceVector{source, bounded_bfs(g, source, kUnreachable)};
}

VertexSet ball_by_bfs(const Graph& g, Vertex v, Radius r) {
  g.check_vertex(v);
  auto dist = bounded_bfs(g, v, r);
  VertexSet out(g.order());
  for (Vertex u = 0; u < g.order(); ++u)
    if (dist[u] != kUnreachable) out.set(u);
  return out;
}

VertexSet ball(const Graph& g, Vertex v, Radius r) {
  g.check_vertex(v);
  if (!g.is_hypercube()) return ball_by_bfs(g, v, r);
  VertexSet out(g.order());
  for (Vertex u = 0; u < g.order(); ++u)
    if (static_cast<Radius>(std::popcount(u ^ v)) <= r) out.set(u);
  return out;
}

std::uint32_t distance(const Graph& g, Vertex u, Vertex v) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (g.is_hypercube()) return static_cast<std::uint32_t>(std::popcount(u ^ v));
  return bfs(g, u).dist[v];
}

std::optional<Radius> diameter(const Graph& g) {
  if (g.order() == 0) return Radius{0};
  // Vertex-transitive: the eccentricity of 0 is the diameter.
  if (g.is_hypercube()) return static_cast<Radius>(g.dimension());
  Radius best = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto d = bfs(g, v);
    for (auto x : d.dist) {
      if (x == kUnreachable) return std::nullopt;
      best = std::max(best, x);
    }
  }
  return best;
}

Radius max_finite_distance(const Graph& g) {
  if (g.is_hypercube()) return static_cast<Radius>(g.dimension());
  Radius best = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    for (auto x : bfs(g, v).dist)
      if (x != kUnreachable) best = std::max(best, x);
  return best;
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1 || g.is_hypercube()) return true;
  for (auto x : bfs(g, 0).dist)
    if (x == kUnreachable) return false;
  return true;
}

VertexSet component_of(const Graph& g, Vertex v) { return ball_by_bfs(g, v, kUnreachable); }

DistanceTable::DistanceTable(const Graph& g) : n_(g.order()), hypercube_(g.is_hypercube()) {
  if (hypercube_) {
    max_finite_ = static_cast<Radius>(g.dimension());
    return;
  }
  table_.resize(n_ * n_);
  for (Vertex v = 0; v < n_; ++v) {
    auto d = bfs(g, v);
    for (Vertex u = 0; u < n_; ++u) {
      table_[static_cast<std::size_t>(v) * n_ + u] = d.dist[u];
      if (d.dist[u] == kUnreachable)
        connected_ = false;
      else
        max_finite_ = std::max(max_finite_, d.dist[u]);
    }
  }
}

}  // namespace ballsearch
