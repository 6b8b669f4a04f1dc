#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "ballsearch/graph.hpp"

namespace ballsearch {

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
/// Vertex 0 is the centre, 1..n-1 are leaves.
Graph star_graph(std::size_t n);
Graph complete_graph(std::size_t n);
/// k disjoint copies of K_size; copy i occupies vertices [i*size, (i+1)*size).
Graph disjoint_cliques(std::size_t k, std::size_t clique_size);
/// Erdos-Renyi G(n,p): each pair (u<v) is an edge with probability p, drawn in lexicographic pair order.
Graph gnp(std::size_t n, double p, std::uint64_t seed);

/**
 * Random connected graph with maximum degree <= max_degree.
 *
 * A random spanning tree is grown by attaching vertices in shuffled order to a
 * uniformly chosen earlier vertex with spare degree; then `extra_attempts`
 * random pairs are tried as additional edges, kept only when both endpoints
 * still have spare degree. extra_attempts defaults to n * max_degree.
 */
Graph bounded_degree_connected(std::size_t n, std::size_t max_degree, std::uint64_t seed,
                               std::size_t extra_attempts = static_cast<std::size_t>(-1));

/// Generator families reachable by name.
enum class Family { Path, Cycle, Star, Complete, Cliques, Gnp, BoundedDegree, Hypercube };

struct GraphSpec {
  Family family = Family::Path;
  std::size_t n = 1;        // vertices, or hypercube dimension, or number of cliques
  std::size_t k = 0;        // clique size / degree cap
  double p = 0.0;

  /**
   * Parses "path:N", "cycle:N", "star:N", "complete:N", "cliques:K:SIZE",
   * "gnp:N:P", "bounded:N:DELTA" and "hypercube:D".
   */
  static GraphSpec parse(std::string_view text);
  std::string to_string() const;
};

Graph generate(const GraphSpec& spec, std::uint64_t seed = 0);

}  // namespace ballsearch
