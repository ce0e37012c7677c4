#include "dilink/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "dilink/error.hpp"

namespace dilink {

namespace {

[[noreturn]] void parse_error(int line, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

struct RawGraph {
  int n = 0;
  std::vector<Arc> arcs;
  std::map<Vertex, Vertex> map;
};

RawGraph read_raw(std::istream& in, bool allow_map) {
  RawGraph g;
  std::string line;
  int lineno = 0;
  bool header = false;
  long long expected = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first[0] == '#') continue;
    if (first == "map") {
      if (!allow_map) parse_error(lineno, "map lines are only allowed in pattern files");
      long long a = 0, v = 0;
      std::string extra;
      if (!(ls >> a >> v) || (ls >> extra)) parse_error(lineno, "expected \"map a v\"");
      if (!g.map.emplace(static_cast<Vertex>(a), static_cast<Vertex>(v)).second)
        parse_error(lineno, "pattern vertex " + std::to_string(a) + " mapped twice");
      continue;
    }
    std::istringstream full(line);
    long long a = 0, b = 0;
    std::string extra;
    if (!(full >> a >> b) || (full >> extra)) parse_error(lineno, "expected two integers");
    if (!header) {
      if (a < 0 || b < 0 || a > (1LL << 30)) parse_error(lineno, "bad header");
      g.n = static_cast<int>(a);
      expected = b;
      header = true;
    } else {
      if (static_cast<long long>(g.arcs.size()) == expected) parse_error(lineno, "more arcs than declared");
      if (a < 0 || b < 0 || a >= g.n || b >= g.n) parse_error(lineno, "vertex label out of range");
      g.arcs.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
    }
  }
  if (!header) parse_error(lineno, "missing \"n m\" header");
  if (static_cast<long long>(g.arcs.size()) != expected)
    parse_error(lineno, "declared " + std::to_string(expected) + " arcs, read " + std::to_string(g.arcs.size()));
  return g;
}

std::ifstream open(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::ParseError, "cannot open " + path);
  return f;
}

}  // namespace

Digraph read_edge_list(std::istream& in) {
  const RawGraph g = read_raw(in, false);
  return build_digraph(g.n, g.arcs);
}

Digraph read_edge_list_file(const std::string& path) {
  auto f = open(path);
  return read_edge_list(f);
}

std::string write_edge_list(const Digraph& d) {
  std::ostringstream out;
  out << d.order() << ' ' << d.arc_count() << '\n';
  for (const Arc& a : d.arcs()) out << a.tail << ' ' << a.head << '\n';
  return out.str();
}

PatternFile read_pattern(std::istream& in) {
  const RawGraph g = read_raw(in, true);
  PatternFile pf{make_pattern(build_digraph(g.n, g.arcs)), std::nullopt};
  for (const auto& [a, v] : g.map)
    if (a < 0 || a >= g.n) throw Error(ErrorCode::ParseError, "map names pattern vertex " + std::to_string(a));
  if (!g.map.empty() && static_cast<int>(g.map.size()) == g.n) {
    std::vector<Vertex> branch;
    for (const auto& [a, v] : g.map) branch.push_back(v);
    pf.branch = std::move(branch);
  }
  return pf;
}

PatternFile read_pattern_file(const std::string& path) {
  auto f = open(path);
  return read_pattern(f);
}

}  // namespace dilink
