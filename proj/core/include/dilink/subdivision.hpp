#pragma once

#include <optional>
#include <span>
#include <vector>

#include "dilink/digraph.hpp"

namespace dilink {

// The pattern H with a fixed arc enumeration a_1..a_h (lexicographic).
struct PatternDigraph {
  Digraph underlying;
  std::vector<Arc> arc_order;

  int vertex_count() const { return underlying.order(); }
  std::size_t arc_count() const { return arc_order.size(); }
  bool operator==(const PatternDigraph&) const = default;
};

// Throws BadParameter if h has no arcs or an isolated vertex.
PatternDigraph make_pattern(const Digraph& h);
PatternDigraph single_arc_pattern();
PatternDigraph directed_triangle_pattern();
PatternDigraph digon_pattern();

// Branch map f (indexed by pattern vertex) and path map g (aligned with
// pattern.arc_order).
struct HSubdivision {
  PatternDigraph pattern;
  std::vector<Vertex> branch;
  std::vector<Path> paths;

  bool operator==(const HSubdivision&) const = default;
};

// Prescribed lengths l_1..l_h, aligned with arc_order.
struct LengthPrescription {
  std::vector<int> lengths;
};

bool validate_subdivision(const Digraph& d, const HSubdivision& sub);

std::vector<int> path_lengths(const HSubdivision& sub);
// Sorted distinct vertices used by the subdivision.
std::vector<Vertex> subdivision_vertices(const HSubdivision& sub);
std::size_t subdivision_order(const HSubdivision& sub);

enum class OrderMatching { Strict, Multiset };

// Subdivisions valid, pairwise vertex-disjoint, covering V(D), with orders
// matched positionally (Strict) or as a multiset.
bool validate_tiling(const Digraph& d, std::span<const HSubdivision> subs, std::span<const int> orders,
                     OrderMatching matching = OrderMatching::Strict);

// Smallest prescribed length that fits a ladder of at most 12/nu^2 vertices
// plus two connectors of order at most 2/nu + 1: ceil(24/nu^2 + 4/nu + 2).
int c0_threshold(double nu);

inline constexpr int kDefaultOracleCap = 12;

// Exhaustive search for an H-subdivision with the given branch map and
// exact path lengths. Arcs are routed in arc_order, neighbours tried in
// ascending label order. Throws TooLargeForOracle above `cap`.
std::optional<HSubdivision> brute_force_subdivision(const Digraph& d, const PatternDigraph& h,
                                                    std::span<const Vertex> branch,
                                                    const LengthPrescription& lengths,
                                                    int cap = kDefaultOracleCap);

}  // namespace dilink
