#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dilink/digraph.hpp"
#include "dilink/ladder.hpp"

namespace dilink {

struct OrderedPair {
  Vertex u = 0;
  Vertex v = 0;
  auto operator<=>(const OrderedPair&) const = default;
};

// Disjoint ordered pairs.
struct CoverPairSet {
  std::vector<OrderedPair> pairs;
};

bool is_disjoint_pair_set(const Digraph& d, const CoverPairSet& k);

// u, v, x, y distinct and u -> x, y -> v are arcs.
bool covers(const Digraph& d, OrderedPair pair, OrderedPair target);

// Every ordered pair of distinct vertices of U is covered by at least d
// elements of K.
bool verify_d_cover(const Digraph& d, const CoverPairSet& k, std::span<const Vertex> u, int min_cover);

// Number of elements of K covering (x, y).
int cover_count(const Digraph& d, const CoverPairSet& k, OrderedPair target);

// ceil(24 gamma^-2 (d ln(24 d gamma^-2) + 2 ln n)), before any cap.
double d_cover_formula(int n, int d, double gamma);

enum class PairSampling {
  Uniform,  // pairs of uniformly random distinct vertices
  Arcs,     // pairs (u, v) with u -> v an arc, so each admits a one-arc ladder
};

struct CoverOptions {
  std::optional<std::size_t> size;  // overrides the formula value
  PairSampling sampling = PairSampling::Uniform;
  int restarts = 50;
  std::vector<Vertex> excluded;  // never used in a pair
};

// Samples disjoint pairs (vertices outside U first), verifies the d-cover,
// and resamples on failure. Size is the formula value capped at n/2 unless
// overridden. Throws CoverConstructionFailed.
CoverPairSet build_d_cover(const Digraph& d, std::span<const Vertex> u, int min_cover, double gamma,
                           std::uint64_t seed, const CoverOptions& opts = {});

struct ConnectionRequest {
  std::vector<OrderedPair> terminals;  // (source, target), all distinct
  std::vector<Vertex> forbidden;
  int max_order = 2;
};

struct ConnectOptions {
  int restarts = 100;
  int exact_cap = 12;  // exhaustive fallback for n <= exact_cap
};

// Pairwise disjoint paths source_i -> target_i of order <= max_order whose
// interiors avoid the forbidden set and all other terminals. Sequential
// shortest paths with randomised restarts, then an exhaustive fallback on
// small digraphs. Throws ConnectionFailed(i).
std::vector<Path> connect_disjoint_paths(const Digraph& d, const ConnectionRequest& req, std::uint64_t seed,
                                         const ConnectOptions& opts = {});

struct LadderOptions {
  int k = 1;
  bool prefer_direct_arc = true;  // use the single-rung ladder u -> v when the arc exists
  int restarts = 50;
  std::vector<Vertex> forbidden;
};

int ladder_size_cap(double nu);           // floor(12 / nu^2)
int alternating_order_cap(double nu);     // floor(8 / nu)
int connector_order_cap(double nu);       // floor(2 / nu + 1)

// Pairwise disjoint ladders, ladder i from terminals[i].u to terminals[i].v,
// each with at most 12/nu^2 vertices and an alternating path of order at
// most 8/nu. Throws LadderConstructionFailed(i).
std::vector<Ladder> build_disjoint_ladders(const Digraph& d, std::span<const OrderedPair> terminals, double nu,
                                           std::uint64_t seed, const LadderOptions& opts = {});

}  // namespace dilink
