#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dilink/digraph.hpp"

namespace dilink {

struct CycleOptions {
  int attempts = 60;   // randomised attempts before the exact fallback
  int exact_cap = 14;  // bitmask search when n <= exact_cap
};

// A cycle of length exactly l through v. Random cycle factors patched
// together (long cycles) or randomised depth-first search (short ones),
// then an exhaustive search on small digraphs. Throws CycleNotFoundError,
// flagged exhaustive only when the exact search ran.
Cycle cycle_through_vertex(const Digraph& d, Vertex v, int l, std::uint64_t seed, const CycleOptions& opts = {});

Cycle hamilton_cycle(const Digraph& d, std::uint64_t seed, const CycleOptions& opts = {});

// Consecutive subpaths of orders sizes[0], sizes[1], ... starting at
// position `offset` of the cycle. Throws SizesExceedCycle.
std::vector<Path> cut_cycle_segments_at(const Cycle& c, std::span<const int> sizes, std::size_t offset);
// Offset drawn from the seed.
std::vector<Path> cut_cycle_segments(const Cycle& c, std::span<const int> sizes, std::uint64_t seed);

}  // namespace dilink
