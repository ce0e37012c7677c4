#pragma once

#include <cstdint>

#include "dilink/digraph.hpp"

namespace dilink {

// Each ordered pair u != v is an arc independently with probability p.
// Throws BadParameter unless p in [0,1] and n >= 0.
Digraph gen_random_digraph(int n, double p, std::uint64_t seed);

// Every vertex reaches and is reached from vertex 0. The empty digraph
// counts as strongly connected.
bool is_strongly_connected(const Digraph& d);

}  // namespace dilink
