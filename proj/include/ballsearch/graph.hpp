#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ballsearch/bitset.hpp"

namespace ballsearch {

using Vertex = std::uint32_t;
using Radius = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

/// Largest hypercube dimension accepted; vertices are 32-bit and BFS scratch is 2^n.
inline constexpr unsigned kMaxHypercubeDimension = 24;

enum class GraphKind { Explicit, Hypercube };

/**
 * Finite simple undirected graph on vertices 0..n-1.
 *
 * Explicit graphs store sorted adjacency lists. Hypercube graphs store only
 * their dimension: vertex x is the bit vector x, coordinate i is bit i-1, and
 * neighbours are single-bit flips.
 */
class Graph {
 public:
  Graph() = default;

  /// Throws std::invalid_argument on self-loops, duplicate edges or endpoints >= n.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  static Graph hypercube(unsigned dimension);

  std::size_t order() const { return n_; }
  std::size_t edge_count() const;
  GraphKind kind() const { return kind_; }
  bool is_hypercube() const { return kind_ == GraphKind::Hypercube; }
  unsigned dimension() const { return dimension_; }

  std::size_t degree(Vertex v) const {
    return is_hypercube() ? dimension_ : adjacency_[v].size();
  }
  std::size_t max_degree() const;

  template <class F>
  void for_each_neighbor(Vertex v, F&& f) const {
    if (is_hypercube()) {
      for (unsigned i = 0; i < dimension_; ++i) f(static_cast<Vertex>(v ^ (Vertex{1} << i)));
    } else {
      for (Vertex u : adjacency_[v]) f(u);
    }
  }

  std::vector<Vertex> neighbors(Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const;

  /// Edge list with u < v, sorted. Only meaningful for modest sizes.
  std::vector<Edge> edges() const;

  /// Throws std::out_of_range if v >= order().
  void check_vertex(Vertex v) const;

 private:
  std::size_t n_ = 0;
  GraphKind kind_ = GraphKind::Explicit;
  unsigned dimension_ = 0;
  std::vector<std::vector<Vertex>> adjacency_;
};

struct DistanceVector {
  Vertex source = 0;
  std::vector<std::uint32_t> dist;

  bool reachable(Vertex v) const { return dist[v] != kUnreachable; }
};

DistanceVector bfs(const Graph& g, Vertex source);

/// Closed ball: every vertex at distance <= r from v. Hypercubes use popcount.
VertexSet ball(const Graph& g, Vertex v, Radius r);

/// Ball computed by breadth-first search for every graph kind.
VertexSet ball_by_bfs(const Graph& g, Vertex v, Radius r);

/// Shortest-path distance, kUnreachable across components.
std::uint32_t distance(const Graph& g, Vertex u, Vertex v);

/// Maximum eccentricity; nullopt when g is disconnected.
std::optional<Radius> diameter(const Graph& g);

/// Largest finite distance between any two vertices (diameter per component).
Radius max_finite_distance(const Graph& g);

bool is_connected(const Graph& g);

/// Vertex set of the component containing v.
VertexSet component_of(const Graph& g, Vertex v);

/**
 * All-pairs distance table. Explicit graphs are materialised row by row with
 * one BFS per vertex; hypercubes answer from popcount without storage.
 */
class DistanceTable {
 public:
  explicit DistanceTable(const Graph& g);

  std::size_t order() const { return n_; }
  std::uint32_t operator()(Vertex u, Vertex v) const {
    if (hypercube_) return static_cast<std::uint32_t>(std::popcount(u ^ v));
    return table_[static_cast<std::size_t>(u) * n_ + v];
  }
  /// Largest finite entry.
  Radius max_finite() const { return max_finite_; }
  bool connected() const { return connected_; }

 private:
  std::size_t n_ = 0;
  bool hypercube_ = false;
  bool connected_ = true;
  Radius max_finite_ = 0;
  std::vector<std::uint32_t> table_;
};

}  // namespace ballsearch
