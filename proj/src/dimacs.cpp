#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "qclique/errors.hpp"
#include "qclique/graph.hpp"

namespace qclique {

namespace {

bool blank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

}  // namespace

Graph parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  bool have_header = false;
  std::size_t n = 0, declared_edges = 0, edge_lines = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::set<std::pair<std::size_t, std::size_t>> distinct;

  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (blank(line)) continue;
    std::istringstream fields(line);
    std::string tag;
    fields >> tag;
    if (tag == "c") continue;

    if (tag == "p") {
      if (have_header) throw ParseError(line_no, "second problem line");
      std::string format;
      long long nv = -1, ne = -1;
      if (!(fields >> format >> nv >> ne) || (format != "edge" && format != "col") || nv < 0 ||
          ne < 0) {
        throw ParseError(line_no, "malformed header, expected `p edge <n> <m>`");
      }
      std::string extra;
      if (fields >> extra) throw ParseError(line_no, "trailing tokens in header");
      if (static_cast<std::size_t>(nv) > kMaxVertices) {
        throw ParseError(line_no, "vertex count " + std::to_string(nv) + " exceeds 64");
      }
      n = static_cast<std::size_t>(nv);
      declared_edges = static_cast<std::size_t>(ne);
      have_header = true;
      continue;
    }

    if (tag == "e") {
      if (!have_header) throw ParseError(line_no, "edge line before `p` header");
      long long a = 0, b = 0;
      if (!(fields >> a >> b)) throw ParseError(line_no, "malformed edge line");
      std::string extra;
      if (fields >> extra) throw ParseError(line_no, "trailing tokens in edge line");
      if (a < 1 || b < 1 || static_cast<std::size_t>(a) > n || static_cast<std::size_t>(b) > n) {
        throw ParseError(line_no, "vertex index out of range [1, " + std::to_string(n) + "]");
      }
      if (a == b) throw ParseError(line_no, "self-loop on vertex " + std::to_string(a));
      const auto u = static_cast<std::size_t>(std::min(a, b));
      const auto v = static_cast<std::size_t>(std::max(a, b));
      edges.emplace_back(u, v);
      distinct.emplace(u, v);
      ++edge_lines;
      continue;
    }

    throw ParseError(line_no, "unrecognised line type `" + tag + "`");
  }

  if (!have_header) throw ParseError(line_no, "missing `p edge <n> <m>` header");
  if (declared_edges != edge_lines && declared_edges != distinct.size()) {
    throw ParseError(line_no, "header declares " + std::to_string(declared_edges) +
                                  " edges but file lists " + std::to_string(edge_lines));
  }
  return Graph(n, edges);
}

Graph read_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_dimacs(buf.str());
}

std::string to_dimacs(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.first << ' ' << e.second << '\n';
  return out.str();
}

}  // namespace qclique
