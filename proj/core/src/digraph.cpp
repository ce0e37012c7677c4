#include "dilink/digraph.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "dilink/error.hpp"

namespace dilink {

Digraph::Digraph(int n)
    : n_(n),
      words_((static_cast<std::size_t>(n) + 63) / 64),
      out_(static_cast<std::size_t>(n)),
      in_(static_cast<std::size_t>(n)),
      rows_(static_cast<std::size_t>(n) * words_, 0) {
  if (n < 0) throw Error(ErrorCode::BadParameter, "negative vertex count");
}

Digraph build_digraph(int n, std::span<const Arc> arcs) {
  Digraph d(n);
  for (const Arc& a : arcs) {
    if (!d.contains(a.tail) || !d.contains(a.head)) {
      throw Error(ErrorCode::LabelOutOfRange,
                  "arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) + ") with n=" + std::to_string(n));
    }
    if (a.tail == a.head) throw Error(ErrorCode::LoopArc, "loop at vertex " + std::to_string(a.tail));
    auto& word = d.rows_[static_cast<std::size_t>(a.tail) * d.words_ + (static_cast<std::size_t>(a.head) >> 6)];
    const std::uint64_t bit = std::uint64_t{1} << (a.head & 63);
    if (word & bit) continue;
    word |= bit;
    d.out_[static_cast<std::size_t>(a.tail)].push_back(a.head);
    d.in_[static_cast<std::size_t>(a.head)].push_back(a.tail);
    ++d.arc_count_;
  }
  for (auto& l : d.out_) std::sort(l.begin(), l.end());
  for (auto& l : d.in_) std::sort(l.begin(), l.end());
  return d;
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> result;
  result.reserve(arc_count_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : out(u)) result.push_back({u, v});
  return result;
}

Digraph Digraph::reversed() const {
  std::vector<Arc> flipped;
  flipped.reserve(arc_count_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : out(u)) flipped.push_back({v, u});
  return build_digraph(n_, flipped);
}

Digraph complete_digraph(int n) {
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v) arcs.push_back({u, v});
  return build_digraph(n, arcs);
}

Digraph directed_cycle(int n) {
  std::vector<Arc> arcs;
  if (n >= 2)
    for (Vertex u = 0; u < n; ++u) arcs.push_back({u, (u + 1) % n});
  return build_digraph(n, arcs);
}

Digraph directed_path(int n) {
  std::vector<Arc> arcs;
  for (Vertex u = 0; u + 1 < n; ++u) arcs.push_back({u, u + 1});
  return build_digraph(n, arcs);
}

DegreeProfile degree_profile(const Digraph& d) {
  DegreeProfile p;
  const int n = d.order();
  p.out_sorted.reserve(static_cast<std::size_t>(n));
  p.in_sorted.reserve(static_cast<std::size_t>(n));
  int min_total = std::numeric_limits<int>::max();
  for (Vertex v = 0; v < n; ++v) {
    p.out_sorted.push_back(d.out_degree(v));
    p.in_sorted.push_back(d.in_degree(v));
    min_total = std::min(min_total, d.out_degree(v) + d.in_degree(v));
  }
  std::sort(p.out_sorted.begin(), p.out_sorted.end());
  std::sort(p.in_sorted.begin(), p.in_sorted.end());
  if (n > 0) {
    p.delta_plus = p.out_sorted.front();
    p.delta_minus = p.in_sorted.front();
    p.delta_zero = std::min(p.delta_plus, p.delta_minus);
    p.delta_min_total = min_total;
  }
  return p;
}

InducedSubdigraph induced_subdigraph(const Digraph& d, std::span<const Vertex> kept) {
  InducedSubdigraph result;
  result.index.assign(static_cast<std::size_t>(d.order()), -1);
  std::vector<char> keep(static_cast<std::size_t>(d.order()), 0);
  for (Vertex v : kept) {
    if (!d.contains(v)) throw Error(ErrorCode::LabelOutOfRange, "vertex " + std::to_string(v));
    keep[static_cast<std::size_t>(v)] = 1;
  }
  for (Vertex v = 0; v < d.order(); ++v) {
    if (!keep[static_cast<std::size_t>(v)]) continue;
    result.index[static_cast<std::size_t>(v)] = static_cast<Vertex>(result.original.size());
    result.original.push_back(v);
  }
  std::vector<Arc> arcs;
  for (Vertex u : result.original)
    for (Vertex v : d.out(u))
      if (keep[static_cast<std::size_t>(v)])
        arcs.push_back({result.index[static_cast<std::size_t>(u)], result.index[static_cast<std::size_t>(v)]});
  result.graph = build_digraph(static_cast<int>(result.original.size()), arcs);
  return result;
}

InducedSubdigraph remove_vertices(const Digraph& d, std::span<const Vertex> removed) {
  std::vector<char> drop(static_cast<std::size_t>(d.order()), 0);
  for (Vertex v : removed) {
    if (!d.contains(v)) throw Error(ErrorCode::LabelOutOfRange, "vertex " + std::to_string(v));
    drop[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<Vertex> kept;
  for (Vertex v = 0; v < d.order(); ++v)
    if (!drop[static_cast<std::size_t>(v)]) kept.push_back(v);
  return induced_subdigraph(d, kept);
}

bool validate_path(const Digraph& d, std::span<const Vertex> p) {
  if (p.empty()) return false;
  std::vector<char> seen(static_cast<std::size_t>(d.order()), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!d.contains(p[i]) || seen[static_cast<std::size_t>(p[i])]) return false;
    seen[static_cast<std::size_t>(p[i])] = 1;
    if (i + 1 < p.size() && (!d.contains(p[i + 1]) || !d.has_arc(p[i], p[i + 1]))) return false;
  }
  return true;
}

bool validate_cycle(const Digraph& d, const Cycle& c) {
  if (c.vertices.size() < 2) return false;
  if (!validate_path(d, c.vertices)) return false;
  return d.has_arc(c.vertices.back(), c.vertices.front());
}

}  // namespace dilink
