#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "dilink/digraph.hpp"
#include "dilink/subdivision.hpp"

namespace dilink {

// "n m" header, then m lines "u v"; '#' starts a comment line, blank lines
// are skipped. Throws ParseError (with the line number), LoopArc,
// LabelOutOfRange.
Digraph read_edge_list(std::istream& in);
Digraph read_edge_list_file(const std::string& path);
std::string write_edge_list(const Digraph& d);

// Edge list of H plus optional "map a v" lines sending pattern vertex a to
// host vertex v. The branch map is present only when every pattern vertex
// is mapped.
struct PatternFile {
  PatternDigraph pattern;
  std::optional<std::vector<Vertex>> branch;
};

PatternFile read_pattern(std::istream& in);
PatternFile read_pattern_file(const std::string& path);

}  // namespace dilink
