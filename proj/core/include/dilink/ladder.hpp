#pragma once

#include <map>
#include <optional>
#include <vector>

#include "dilink/digraph.hpp"
#include "dilink/subdivision.hpp"

namespace dilink {

// A ladder from lower[0] to upper[0]: the alternating path
// v_0 v_1 ... v_2k v_2k* ... v_1* v_0* together with connector paths
// Q_i = v_i ... v_i* for odd i. Arcs of the alternating path run
// v_i -> v_{i+1} and v_{i+1}* -> v_i* for even i, v_{j+1} -> v_j and
// v_j* -> v_{j+1}* for odd j, and v_2k -> v_2k*.
struct Ladder {
  int k = 0;
  std::vector<Vertex> lower;       // v_0 .. v_2k
  std::vector<Vertex> upper;       // v_0* .. v_2k*
  std::map<int, Path> connectors;  // odd i -> Q_i

  Vertex start() const { return lower.front(); }
  Vertex finish() const { return upper.front(); }
  bool operator==(const Ladder&) const = default;
};

std::vector<Arc> alternating_path_arcs(const Ladder& l);
// Sorted.
std::vector<Vertex> ladder_vertices(const Ladder& l);

bool validate_ladder(const Digraph& d, const Ladder& l);

// R_0, R_2, ..., R_2k where R_i = v_i Q_{i+1} v_i* for i < 2k and
// R_2k = v_2k v_2k*.
std::vector<Path> rung_paths(const Ladder& l);

// R'_2, ..., R'_2k where R'_i = v_i Q_{i-1} v_i*. Throws DegenerateLadder
// for k = 0.
std::vector<Path> alternative_rung_paths(const Ladder& l);

// Index (into arc_order) of the subdivided path containing every rung as a
// contiguous forward subpath.
std::optional<std::size_t> is_embedded(const Ladder& l, const HSubdivision& sub);

struct EmbeddedLadder {
  Ladder ladder;
  std::size_t host_arc = 0;
};

struct AbsorbOptions {
  // Validate the intermediate subdivision after every rung swap.
  bool check_steps = false;
};

// Swaps R_0 for P and then R_i for R'_i (i = 2, 4, ..., 2k) inside the host
// path. The result keeps the branch map and has vertex set V(sub) ∪ V(P).
// Throws NotEmbedded, EndpointMismatch, PathNotDisjoint.
HSubdivision absorb_path(const Digraph& d, const HSubdivision& sub, const EmbeddedLadder& l, const Path& p,
                         AbsorbOptions opts = {});

// Single-path form: returns a path with host's endpoints and vertex set
// V(host) ∪ V(P).
Path absorb_into_path(const Digraph& d, const Path& host, const Ladder& l, const Path& p, AbsorbOptions opts = {});

}  // namespace dilink
