#include "rpg/graph_io.hpp"

#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "rpg/errors.hpp"

namespace rpg {
namespace {

bool next_content_line(std::istream& in, std::string& line, std::size_t& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

[[noreturn]] void fail(std::size_t lineno, const std::string& msg) {
  throw InputError("graph file line " + std::to_string(lineno) + ": " + msg);
}

}  // namespace

void write_graph(std::ostream& out, const Graph& g) {
  write_colored_graph(out, ColoredGraph::uncolored(g));
}

void write_colored_graph(std::ostream& out, const ColoredGraph& cg) {
  const Graph& g = cg.graph();
  out << g.vertex_count() << ' ' << cg.palette_size() << '\n';
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[i];
    out << e.u << ' ' << e.v << ' ' << cg.color_of(i) << '\n';
  }
}

ColoredGraph read_colored_graph(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!next_content_line(in, line, lineno)) throw InputError("graph file is empty");
  long long n = -1, r = -1;
  {
    std::istringstream hdr(line);
    std::string extra;
    if (!(hdr >> n >> r) || (hdr >> extra)) fail(lineno, "expected header 'n r'");
    if (n < 0 || r < 0) fail(lineno, "negative n or r");
    if (n > std::numeric_limits<Vertex>::max()) fail(lineno, "n too large");
  }
  std::vector<Edge> edges;
  std::vector<std::pair<Edge, Color>> colored;
  std::unordered_set<std::uint64_t> seen;
  while (next_content_line(in, line, lineno)) {
    std::istringstream row(line);
    long long u = -1, v = -1, c = -1;
    std::string extra;
    if (!(row >> u >> v >> c) || (row >> extra)) fail(lineno, "expected 'u v color'");
    if (u < 0 || v < 0 || u >= n || v >= n) fail(lineno, "vertex out of range");
    if (u == v) fail(lineno, "self-loop");
    if (r == 0 ? c != 0 : (c < 1 || c > r)) fail(lineno, "color out of range");
    const Edge e = Edge::of(static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (!seen.insert((std::uint64_t{e.u} << 32) | e.v).second) fail(lineno, "duplicate edge");
    edges.push_back(e);
    colored.emplace_back(e, static_cast<Color>(c));
  }
  Graph g(static_cast<std::size_t>(n), edges);
  std::vector<Color> colors(g.edge_count());
  for (const auto& [e, c] : colored) colors[*g.edge_index(e.u, e.v)] = c;
  return ColoredGraph(std::move(g), std::move(colors), static_cast<Color>(r));
}

Graph read_graph(std::istream& in) { return read_colored_graph(in).graph(); }

ColoredGraph load_colored_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read_colored_graph(in);
}

void save_colored_graph(const std::string& path, const ColoredGraph& cg) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  write_colored_graph(out, cg);
}

}  // namespace rpg
