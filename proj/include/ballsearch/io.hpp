#pragma once

#include <filesystem>
#include <istream>
#include <ostream>

#include "ballsearch/graph.hpp"
#include "ballsearch/query.hpp"

namespace ballsearch {

// Graph files: first line "n m", then m lines "u v" (0-based). Blank lines and
// '#' comments are ignored. Code files: one "center radius" pair per line.
// Both readers throw ParseError with a line number.

Graph read_graph(std::istream& in);
Graph read_graph_file(const std::filesystem::path& path);
void write_graph(std::ostream& out, const Graph& g);

QuerySet read_code(std::istream& in);
QuerySet read_code_file(const std::filesystem::path& path);
void write_code(std::ostream& out, const QuerySet& q);

}  // namespace ballsearch
