#include "swapgame/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace swapgame {

namespace {

bool next_data_line(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") != std::string::npos) return true;
  }
  return false;
}

void read_pair(const std::string& line, int lineno, long long& x, long long& y) {
  std::istringstream ss(line);
  std::string extra;
  if (!(ss >> x >> y) || (ss >> extra))
    throw ParseError("line " + std::to_string(lineno) + ": expected two integers, got '" + line + "'");
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!next_data_line(in, line, lineno)) throw ParseError("empty edge list");
  long long n = 0, m = 0;
  read_pair(line, lineno, n, m);
  if (n < 0 || m < 0 || n > (1 << 24)) throw ParseError("invalid header '" + line + "'");
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_data_line(in, line, lineno))
      throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    long long u = 0, v = 0;
    read_pair(line, lineno, u, v);
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw GraphError(GraphError::Kind::EndpointOutOfRange, "line " + std::to_string(lineno) + ": endpoint out of range");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (next_data_line(in, line, lineno)) throw ParseError("trailing data at line " + std::to_string(lineno));
  return Graph::build(static_cast<int>(n), std::span<const std::pair<Vertex, Vertex>>(edges));
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.m() << '\n';
  for (const Edge& e : g.edges()) out << e.a << ' ' << e.b << '\n';
}

void write_dot(std::ostream& out, const Graph& g, const std::optional<DotHighlight>& last_swap) {
  out << "graph G {\n";
  for (Vertex v = 0; v < g.n(); ++v) out << "  " << v << " [label=\"" << v << "\"];\n";
  for (const Edge& e : g.edges()) {
    out << "  " << e.a << " -- " << e.b;
    if (last_swap && e == last_swap->added) out << " [style=bold, color=blue]";
    out << ";\n";
  }
  if (last_swap && !g.has_edge(last_swap->removed.a, last_swap->removed.b))
    out << "  " << last_swap->removed.a << " -- " << last_swap->removed.b << " [style=dashed, color=red];\n";
  out << "}\n";
}

}  // namespace swapgame
