#include "longcycle/edge_list.hpp"

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "longcycle/error.hpp"

namespace longcycle {

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "# n " << g.order() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

Graph read_edge_list(std::istream& in) {
  std::optional<std::size_t> declared_n;
  std::vector<Edge> edges;
  std::size_t max_id_plus_one = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first[0] == '#') {
      std::string key;
      std::size_t n = 0;
      if (first == "#" && (ls >> key) && key == "n" && (ls >> n)) declared_n = n;
      continue;
    }
    long long u = 0;
    long long v = 0;
    std::string rest;
    std::istringstream pair(line);
    if (!(pair >> u >> v) || (pair >> rest) || u < 0 || v < 0 || u > 0xfffffffeLL || v > 0xfffffffeLL) {
      throw InvalidParameter("edge list line " + std::to_string(line_no) + ": expected \"u v\"");
    }
    if (u == v) throw InvalidParameter("edge list line " + std::to_string(line_no) + ": self-loop");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    max_id_plus_one = std::max<std::size_t>(max_id_plus_one, static_cast<std::size_t>(std::max(u, v)) + 1);
  }
  const std::size_t n = declared_n.value_or(max_id_plus_one);
  if (max_id_plus_one > n) throw InvalidParameter("edge list: vertex id exceeds declared n");
  return Graph(n, std::move(edges));
}

void save_edge_list(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw InvalidParameter("cannot open " + path + " for writing");
  write_edge_list(out, g);
  if (!out) throw Error("failed writing " + path);
}

Graph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidParameter("cannot open " + path);
  return read_edge_list(in);
}

}  // namespace longcycle
