#include "ballsearch/generators.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "ballsearch/rng.hpp"

namespace ballsearch {

Graph path_graph(std::size_t n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  std::vector<Edge> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph::from_edges(n, e);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<Edge> e;
  for (Vertex v = 0; v < n; ++v) e.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph::from_edges(n, e);
}

Graph star_graph(std::size_t n) {
  if (n < 1) throw std::invalid_argument("star needs n >= 1");
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) e.emplace_back(0, v);
  return Graph::from_edges(n, e);
}

Graph complete_graph(std::size_t n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

Graph disjoint_cliques(std::size_t k, std::size_t clique_size) {
  if (k < 1 || clique_size < 1) throw std::invalid_argument("cliques need k >= 1 and size >= 1");
  std::vector<Edge> e;
  for (std::size_t c = 0; c < k; ++c) {
    auto base = static_cast<Vertex>(c * clique_size);
    for (Vertex u = 0; u < clique_size; ++u)
      for (Vertex v = u + 1; v < clique_size; ++v) e.emplace_back(base + u, base + v);
  }
  return Graph::from_edges(k * clique_size, e);
}

Graph gnp(std::size_t n, double p, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gnp needs n >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gnp needs 0 <= p <= 1");
  Rng rng(seed);
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

Graph bounded_degree_connected(std::size_t n, std::size_t max_degree, std::uint64_t seed,
                               std::size_t extra_attempts) {
  if (n < 1) throw std::invalid_argument("bounded-degree graph needs n >= 1");
  if (max_degree < 1) throw std::invalid_argument("bounded-degree graph needs max degree >= 1");
  if (max_degree == 1 && n > 2) throw std::invalid_argument("a connected graph with max degree 1 has at most 2 vertices");
  if (extra_attempts == static_cast<std::size_t>(-1)) extra_attempts = n * max_degree;

  Rng rng(seed);
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  rng.shuffle(order);

  std::vector<std::size_t> degree(n, 0);
  std::vector<Edge> e;
  // Attached vertices that can still take an edge. The newest leaf always has
  // degree 1 < max_degree (max_degree >= 2 here), so this is never empty.
  std::vector<Vertex> open{order[0]};
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t pick = rng.below(open.size());
    const Vertex parent = open[pick];
    const Vertex child = order[i];
    e.emplace_back(parent, child);
    if (++degree[parent] == max_degree) {
      open[pick] = open.back();
      open.pop_back();
    }
    if (++degree[child] < max_degree) open.push_back(child);
  }

  std::vector<std::vector<bool>> adjacent(n, std::vector<bool>(n, false));
  for (auto [u, v] : e) adjacent[u][v] = adjacent[v][u] = true;
  for (std::size_t a = 0; a < extra_attempts && n > 1; ++a) {
    auto u = static_cast<Vertex>(rng.below(n));
    auto v = static_cast<Vertex>(rng.below(n));
    if (u == v || adjacent[u][v] || degree[u] >= max_degree || degree[v] >= max_degree) continue;
    adjacent[u][v] = adjacent[v][u] = true;
    ++degree[u];
    ++degree[v];
    e.emplace_back(u, v);
  }
  return Graph::from_edges(n, e);
}

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::size_t parse_count(std::string_view s) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument("expected a non-negative integer, got '" + std::string(s) + "'");
  return v;
}

double parse_probability(std::string_view s) {
  std::string copy(s);
  std::size_t used = 0;
  double p = 0;
  try {
    p = std::stod(copy, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != copy.size() || copy.empty()) throw std::invalid_argument("expected a probability, got '" + copy + "'");
  return p;
}

}  // namespace

GraphSpec GraphSpec::parse(std::string_view text) {
  auto parts = split(text, ':');
  const auto name = parts[0];
  auto want = [&](std::size_t count) {
    if (parts.size() != count + 1)
      throw std::invalid_argument("generator '" + std::string(name) + "' takes " + std::to_string(count) + " parameter(s)");
  };
  GraphSpec s;
  if (name == "path" || name == "cycle" || name == "star" || name == "complete" || name == "hypercube") {
    want(1);
    s.n = parse_count(parts[1]);
    s.family = name == "path"       ? Family::Path
               : name == "cycle"    ? Family::Cycle
               : name == "star"     ? Family::Star
               : name == "complete" ? Family::Complete
                                    : Family::Hypercube;
  } else if (name == "cliques") {
    want(2);
    s.family = Family::Cliques;
    s.n = parse_count(parts[1]);
    s.k = parse_count(parts[2]);
  } else if (name == "gnp") {
    want(2);
    s.family = Family::Gnp;
    s.n = parse_count(parts[1]);
    s.p = parse_probability(parts[2]);
  } else if (name == "bounded") {
    want(2);
    s.family = Family::BoundedDegree;
    s.n = parse_count(parts[1]);
    s.k = parse_count(parts[2]);
  } else {
    throw std::invalid_argument("unknown graph family '" + std::string(name) + "'");
  }
  return s;
}

std::string GraphSpec::to_string() const {
  std::ostringstream os;
  switch (family) {
    case Family::Path: os << "path:" << n; break;
    case Family::Cycle: os << "cycle:" << n; break;
    case Family::Star: os << "star:" << n; break;
    case Family::Complete: os << "complete:" << n; break;
    case Family::Cliques: os << "cliques:" << n << ':' << k; break;
    case Family::Gnp: os << "gnp:" << n << ':' << p; break;
    case Family::BoundedDegree: os << "bounded:" << n << ':' << k; break;
    case Family::Hypercube: os << "hypercube:" << n; break;
  }
  return os.str();
}

Graph generate(const GraphSpec& spec, std::uint64_t seed) {
  switch (spec.family) {
    case Family::Path: return path_graph(spec.n);
    case Family::Cycle: return cycle_graph(spec.n);
    case Family::Star: return star_graph(spec.n);
    case Family::Complete: return complete_graph(spec.n);
    case Family::Cliques: return disjoint_cliques(spec.n, spec.k);
    case Family::Gnp: return gnp(spec.n, spec.p, seed);
    case Family::BoundedDegree: return bounded_degree_connected(spec.n, spec.k, seed);
    case Family::Hypercube:
      if (spec.n > kMaxHypercubeDimension) throw std::invalid_argument("hypercube dimension too large");
      return Graph::hypercube(static_cast<unsigned>(spec.n));
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace ballsearch
