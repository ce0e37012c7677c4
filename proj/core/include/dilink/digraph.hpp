#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace dilink {

using Vertex = std::int32_t;

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;
  auto operator<=>(const Arc&) const = default;
};

// Ordered vertex sequence. Validity (distinct vertices, arcs present) is
// always checked against a host digraph, see validate_path.
using Path = std::vector<Vertex>;

// Cyclic vertex sequence closed by the arc back to the first vertex.
struct Cycle {
  std::vector<Vertex> vertices;
  std::size_t length() const { return vertices.size(); }
};

// Loop-free digraph on vertices 0..n-1 with at most one arc per ordered
// pair. Immutable after construction.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);  // empty digraph

  int order() const { return n_; }
  std::size_t arc_count() const { return arc_count_; }

  bool has_arc(Vertex u, Vertex v) const {
    return (rows_[static_cast<std::size_t>(u) * words_ + (static_cast<std::size_t>(v) >> 6)] >> (v & 63)) & 1u;
  }
  bool has_arc(Arc a) const { return has_arc(a.tail, a.head); }

  // Sorted ascending.
  std::span<const Vertex> out(Vertex v) const { return out_[static_cast<std::size_t>(v)]; }
  std::span<const Vertex> in(Vertex v) const { return in_[static_cast<std::size_t>(v)]; }
  int out_degree(Vertex v) const { return static_cast<int>(out_[static_cast<std::size_t>(v)].size()); }
  int in_degree(Vertex v) const { return static_cast<int>(in_[static_cast<std::size_t>(v)].size()); }

  bool contains(Vertex v) const { return v >= 0 && v < n_; }

  // Lexicographically sorted.
  std::vector<Arc> arcs() const;
  Digraph reversed() const;

  bool operator==(const Digraph& other) const { return n_ == other.n_ && out_ == other.out_; }

  friend Digraph build_digraph(int n, std::span<const Arc> arcs);

 private:
  int n_ = 0;
  std::size_t words_ = 0;
  std::size_t arc_count_ = 0;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::vector<std::uint64_t> rows_;
};

// Throws LoopArc / LabelOutOfRange. Duplicate arcs collapse.
Digraph build_digraph(int n, std::span<const Arc> arcs);

Digraph complete_digraph(int n);
Digraph directed_cycle(int n);
Digraph directed_path(int n);

struct DegreeProfile {
  std::vector<int> out_sorted;
  std::vector<int> in_sorted;
  int delta_plus = 0;
  int delta_minus = 0;
  int delta_zero = 0;
  int delta_min_total = 0;
};

DegreeProfile degree_profile(const Digraph& d);

// Induced subdigraph D - removed. `original[new] = old`, `index[old] = new`
// or -1 for removed vertices. Relabelling preserves vertex order.
struct InducedSubdigraph {
  Digraph graph;
  std::vector<Vertex> original;
  std::vector<Vertex> index;
};

InducedSubdigraph remove_vertices(const Digraph& d, std::span<const Vertex> removed);
InducedSubdigraph induced_subdigraph(const Digraph& d, std::span<const Vertex> kept);

bool validate_path(const Digraph& d, std::span<const Vertex> p);
bool validate_cycle(const Digraph& d, const Cycle& c);

}  // namespace dilink
