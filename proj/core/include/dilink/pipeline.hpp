#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dilink/absorber.hpp"
#include "dilink/cycles.hpp"
#include "dilink/digraph.hpp"
#include "dilink/expansion.hpp"
#include "dilink/subdivision.hpp"

namespace dilink {

struct PipelineConfig {
  double gamma = 0.5;
  // Unset: derive_params_from_degrees.
  std::optional<double> nu;
  std::optional<double> tau;
  // Unset: absorber_params(nu).d.
  std::optional<int> d;
  // Unset: c0_threshold(nu). Lower values are a test-scale override, like d.
  std::optional<int> c0;
  std::uint64_t seed = 0;
  int restart_budget = 3;
  int cycle_exact_cap = 14;
  // Cycle offsets tried when cutting segments before giving up.
  int segment_offsets = 24;
  AbsorberOptions absorber;
};

// Parameters after defaults are applied; ordering is checked.
struct ResolvedParams {
  ExpansionParams expansion;
  int d = 0;
  int c0 = 0;
};

ResolvedParams resolve_params(int n, const PipelineConfig& cfg);

// Subdivision of H with branch map exactly f and path lengths exactly N:
// Type-I absorber around f, Hamilton cycle of the rest, segments of order
// l_i - |V(P_i)| + 1 absorbed into path i. Every stage failure restarts
// the whole pipeline with a fresh seed, up to restart_budget attempts.
// Throws PipelineError(stage).
HSubdivision nh_linked_embed(const Digraph& d, const PatternDigraph& h, std::span<const Vertex> f,
                             const LengthPrescription& lengths, const PipelineConfig& cfg);

// Vertex-disjoint H-subdivisions of orders n_1..n_k partitioning V(D).
// Throws OrdersDontSumToN, PipelineError(stage).
std::vector<HSubdivision> perfect_tiling(const Digraph& d, const PatternDigraph& h, std::span<const int> orders,
                                         const PipelineConfig& cfg);

}  // namespace dilink
