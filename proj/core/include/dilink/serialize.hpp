#pragma once

#include <span>
#include <string>

#include "dilink/absorber.hpp"
#include "dilink/cover_connect.hpp"
#include "dilink/ladder.hpp"
#include "dilink/subdivision.hpp"

namespace dilink {

// {pattern: {n, arcs}, branch: {"a": v, ...}, paths, lengths, order}
std::string to_json(const HSubdivision& sub);
// {k, lower, upper, connectors: {"i": [...]}}
std::string to_json(const Ladder& l);
// [[u, v], ...]
std::string to_json(const CoverPairSet& k);
// {type: "I", K, ladders, hosts: [sub], embedding, d}
std::string to_json(const AbsorberTypeI& a);
// {type: "II", K, ladders, hosts, embedding: [[host, arc], ...], d}
std::string to_json(const AbsorberTypeII& a);
// {subdivisions: [...], orders: [...]}
std::string tiling_to_json(std::span<const HSubdivision> subs);

// Throw ParseError on malformed input.
HSubdivision subdivision_from_json(const std::string& text);
Ladder ladder_from_json(const std::string& text);

}  // namespace dilink
