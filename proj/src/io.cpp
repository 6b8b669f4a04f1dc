#include "ballsearch/io.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ballsearch/errors.hpp"

namespace ballsearch {

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

// Non-empty lines with comments stripped.
std::vector<Line> content_lines(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  for (std::size_t number = 1; std::getline(in, raw); ++number) {
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back({number, raw});
  }
  return out;
}

template <class... T>
void parse_fields(const Line& line, T&... fields) {
  std::istringstream is(line.text);
  long long values[sizeof...(T)];
  for (auto& v : values)
    if (!(is >> v) || v < 0) throw ParseError("line " + std::to_string(line.number) + ": expected non-negative integers");
  std::string rest;
  if (is >> rest) throw ParseError("line " + std::to_string(line.number) + ": trailing characters");
  std::size_t i = 0;
  ((fields = static_cast<T>(values[i++])), ...);
}

}  // namespace

Graph read_graph(std::istream& in) {
  auto lines = content_lines(in);
  if (lines.empty()) throw ParseError("empty graph file");
  std::size_t n = 0, m = 0;
  parse_fields(lines[0], n, m);
  if (lines.size() - 1 != m)
    throw ParseError("header declares " + std::to_string(m) + " edges, found " + std::to_string(lines.size() - 1));
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::size_t u = 0, v = 0;
    parse_fields(lines[i], u, v);
    if (u >= n || v >= n) throw ParseError("line " + std::to_string(lines[i].number) + ": vertex out of range");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  try {
    return Graph::from_edges(n, edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Graph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file " + path.string());
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
}

QuerySet read_code(std::istream& in) {
  QuerySet q;
  for (const auto& line : content_lines(in)) {
    std::size_t c = 0, r = 0;
    parse_fields(line, c, r);
    q.push_back({static_cast<Vertex>(c), static_cast<Radius>(r)});
  }
  return q;
}

QuerySet read_code_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open code file " + path.string());
  return read_code(in);
}

void write_code(std::ostream& out, const QuerySet& q) {
  for (const auto& b : q) out << b.center << ' ' << b.radius << '\n';
}

}  // namespace ballsearch
