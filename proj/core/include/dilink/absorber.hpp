#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dilink/cover_connect.hpp"
#include "dilink/digraph.hpp"
#include "dilink/expansion.hpp"
#include "dilink/ladder.hpp"
#include "dilink/subdivision.hpp"

namespace dilink {

// Ladder i runs from cover.pairs[i].u to cover.pairs[i].v and is embedded in
// host.paths[embedding[i]].
struct AbsorberTypeI {
  CoverPairSet cover;
  std::vector<Ladder> ladders;
  HSubdivision host;
  std::vector<std::size_t> embedding;
  int d = 0;
};

struct LadderPlacement {
  std::size_t host = 0;
  std::size_t arc = 0;
  bool operator==(const LadderPlacement&) const = default;
};

struct AbsorberTypeII {
  CoverPairSet cover;
  std::vector<Ladder> ladders;
  std::vector<HSubdivision> hosts;
  std::vector<LadderPlacement> embedding;
  int d = 0;
};

struct AbsorberParams {
  double xi = 0.0;  // nu^2 / 32
  int d = 0;        // ceil(2 / xi)
};

AbsorberParams absorber_params(double nu);

// 1600 nu^-2 gamma^-2 (d ln(d gamma^-2) + ln n) + 3 nu^-2 d
double absorber_size_bound(double nu, double gamma, int d, int n);

struct AbsorberOptions {
  int restarts = 20;
  // Arc pairs give one-arc ladders, the most compact absorbers.
  PairSampling sampling = PairSampling::Arcs;
  int ladder_k = 1;
  // Fixed |K|. Unset: the smallest size (grown geometrically from
  // max(d, groups)) at which a sampled pair set verifies as a d-cover.
  std::optional<std::size_t> cover_size;
  // Vertices the absorber must not use (e.g. paths to be absorbed later).
  std::vector<Vertex> avoid;
};

// Branch map `branch` is kept verbatim; ladders are split into h groups
// whose vertex totals stay below l_i and threaded into subdivided path i.
// Throws AbsorberConstructionFailed.
AbsorberTypeI build_type1_absorber(const Digraph& d, const PatternDigraph& h, std::span<const Vertex> branch,
                                   const LengthPrescription& lengths, const ExpansionParams& p, int min_cover,
                                   std::uint64_t seed, const AbsorberOptions& opts = {});

// k = orders.size() disjoint H-subdivisions with random branch vertices;
// host i threads its ladder group through its first subdivided path and
// keeps |V(host i)| <= orders[i] - 2. Throws AbsorberConstructionFailed.
AbsorberTypeII build_type2_absorber(const Digraph& d, const PatternDigraph& h, std::span<const int> orders,
                                    const ExpansionParams& p, int min_cover, std::uint64_t seed,
                                    const AbsorberOptions& opts = {});

struct ValidationResult {
  bool ok = true;
  std::string reason;
  explicit operator bool() const { return ok; }
};

ValidationResult validate_absorber(const Digraph& d, const AbsorberTypeI& a);
ValidationResult validate_absorber(const Digraph& d, const AbsorberTypeII& a);

// Sorted.
std::vector<Vertex> absorber_vertices(const AbsorberTypeI& a);
std::vector<Vertex> absorber_vertices(const AbsorberTypeII& a);

// Each path x..y is extended to u x..y v through a distinct covering pair
// (u, v) of K (bipartite matching) and swapped in along that pair's ladder.
// `required_arcs[i]`, when given, restricts path i to ladders embedded in
// that subdivided path. Throws TooManyPaths, NotDisjoint, NoCoveringPair(i).
HSubdivision absorb_paths(const Digraph& d, const AbsorberTypeI& a, std::span<const Path> paths,
                          std::optional<std::span<const std::size_t>> required_arcs = std::nullopt);

// Path i is absorbed into host i; hosts beyond paths.size() are returned
// unchanged.
std::vector<HSubdivision> absorb_paths(const Digraph& d, const AbsorberTypeII& a, std::span<const Path> paths);

}  // namespace dilink
