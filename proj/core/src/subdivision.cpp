#include "dilink/subdivision.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dilink/error.hpp"
#include "dilink/thresholds.hpp"

namespace dilink {

PatternDigraph make_pattern(const Digraph& h) {
  if (h.arc_count() == 0) throw Error(ErrorCode::BadParameter, "pattern has no arcs");
  for (Vertex v = 0; v < h.order(); ++v)
    if (h.out_degree(v) + h.in_degree(v) == 0)
      throw Error(ErrorCode::BadParameter, "pattern vertex " + std::to_string(v) + " is isolated");
  return {h, h.arcs()};
}

PatternDigraph single_arc_pattern() {
  const Arc arcs[] = {{0, 1}};
  return make_pattern(build_digraph(2, arcs));
}

PatternDigraph directed_triangle_pattern() { return make_pattern(directed_cycle(3)); }

PatternDigraph digon_pattern() {
  const Arc arcs[] = {{0, 1}, {1, 0}};
  return make_pattern(build_digraph(2, arcs));
}

bool validate_subdivision(const Digraph& d, const HSubdivision& sub) {
  const PatternDigraph& h = sub.pattern;
  if (sub.branch.size() != static_cast<std::size_t>(h.vertex_count())) return false;
  if (sub.paths.size() != h.arc_count()) return false;

  // 1 = branch vertex, 2 = interior vertex already claimed
  std::vector<char> state(static_cast<std::size_t>(d.order()), 0);
  for (Vertex b : sub.branch) {
    if (!d.contains(b) || state[static_cast<std::size_t>(b)]) return false;
    state[static_cast<std::size_t>(b)] = 1;
  }
  for (std::size_t i = 0; i < h.arc_count(); ++i) {
    const Path& p = sub.paths[i];
    const Arc a = h.arc_order[i];
    if (p.size() < 2 || !validate_path(d, p)) return false;
    if (p.front() != sub.branch[static_cast<std::size_t>(a.tail)]) return false;
    if (p.back() != sub.branch[static_cast<std::size_t>(a.head)]) return false;
    for (std::size_t j = 1; j + 1 < p.size(); ++j) {
      char& s = state[static_cast<std::size_t>(p[j])];
      if (s != 0) return false;
      s = 2;
    }
  }
  return true;
}

std::vector<int> path_lengths(const HSubdivision& sub) {
  std::vector<int> out;
  out.reserve(sub.paths.size());
  for (const Path& p : sub.paths) out.push_back(static_cast<int>(p.size()) - 1);
  return out;
}

std::vector<Vertex> subdivision_vertices(const HSubdivision& sub) {
  std::vector<Vertex> vs(sub.branch.begin(), sub.branch.end());
  for (const Path& p : sub.paths) vs.insert(vs.end(), p.begin(), p.end());
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

std::size_t subdivision_order(const HSubdivision& sub) { return subdivision_vertices(sub).size(); }

bool validate_tiling(const Digraph& d, std::span<const HSubdivision> subs, std::span<const int> orders,
                     OrderMatching matching) {
  if (subs.size() != orders.size()) return false;
  std::vector<char> covered(static_cast<std::size_t>(d.order()), 0);
  std::vector<int> actual;
  std::size_t total = 0;
  for (const HSubdivision& s : subs) {
    if (!validate_subdivision(d, s)) return false;
    const auto vs = subdivision_vertices(s);
    for (Vertex v : vs) {
      if (covered[static_cast<std::size_t>(v)]) return false;
      covered[static_cast<std::size_t>(v)] = 1;
    }
    total += vs.size();
    actual.push_back(static_cast<int>(vs.size()));
  }
  if (total != static_cast<std::size_t>(d.order())) return false;
  std::vector<int> expected(orders.begin(), orders.end());
  if (matching == OrderMatching::Multiset) {
    std::sort(actual.begin(), actual.end());
    std::sort(expected.begin(), expected.end());
  }
  return actual == expected;
}

int c0_threshold(double nu) {
  if (!(nu > 0.0 && nu <= 1.0)) throw Error(ErrorCode::BadParameter, "nu must lie in (0,1]");
  return static_cast<int>(ceil_threshold(24.0 / (nu * nu) + 4.0 / nu + 2.0));
}

namespace {

class SubdivisionSearch {
 public:
  SubdivisionSearch(const Digraph& d, const PatternDigraph& h, std::span<const Vertex> branch,
                    std::span<const int> lengths)
      : d_(d), h_(h), branch_(branch), lengths_(lengths), used_(static_cast<std::size_t>(d.order()), 0) {
    for (Vertex b : branch) used_[static_cast<std::size_t>(b)] = 1;
    free_count_ = d.order() - static_cast<int>(branch.size());
    paths_.resize(h.arc_count());
  }

  std::optional<std::vector<Path>> run() {
    if (route_arc(0)) return paths_;
    return std::nullopt;
  }

 private:
  bool route_arc(std::size_t i) {
    if (i == h_.arc_count()) return true;
    const Arc a = h_.arc_order[i];
    Path& p = paths_[i];
    p.assign(1, branch_[static_cast<std::size_t>(a.tail)]);
    return extend(i, branch_[static_cast<std::size_t>(a.head)], lengths_[i]);
  }

  // `remaining` arcs still to place on path i, ending at `target`.
  bool extend(std::size_t i, Vertex target, int remaining) {
    Path& p = paths_[i];
    const Vertex cur = p.back();
    if (remaining == 1) {
      if (!d_.has_arc(cur, target)) return false;
      p.push_back(target);
      if (route_arc(i + 1)) return true;
      p.pop_back();
      return false;
    }
    if (free_count_ < remaining - 1) return false;
    for (Vertex w : d_.out(cur)) {
      if (used_[static_cast<std::size_t>(w)]) continue;
      used_[static_cast<std::size_t>(w)] = 1;
      --free_count_;
      p.push_back(w);
      if (extend(i, target, remaining - 1)) return true;
      p.pop_back();
      ++free_count_;
      used_[static_cast<std::size_t>(w)] = 0;
    }
    return false;
  }

  const Digraph& d_;
  const PatternDigraph& h_;
  std::span<const Vertex> branch_;
  std::span<const int> lengths_;
  std::vector<char> used_;
  int free_count_ = 0;
  std::vector<Path> paths_;
};

}  // namespace

std::optional<HSubdivision> brute_force_subdivision(const Digraph& d, const PatternDigraph& h,
                                                    std::span<const Vertex> branch,
                                                    const LengthPrescription& lengths, int cap) {
  if (d.order() > cap)
    throw Error(ErrorCode::TooLargeForOracle, "n=" + std::to_string(d.order()) + " exceeds oracle cap");
  if (branch.size() != static_cast<std::size_t>(h.vertex_count()))
    throw Error(ErrorCode::BadParameter, "branch map size does not match pattern");
  if (lengths.lengths.size() != h.arc_count())
    throw Error(ErrorCode::BadParameter, "length prescription size does not match pattern");
  std::vector<char> seen(static_cast<std::size_t>(d.order()), 0);
  for (Vertex b : branch) {
    if (!d.contains(b)) throw Error(ErrorCode::LabelOutOfRange, "branch vertex " + std::to_string(b));
    if (seen[static_cast<std::size_t>(b)]) throw Error(ErrorCode::BadParameter, "branch map not injective");
    seen[static_cast<std::size_t>(b)] = 1;
  }
  for (int l : lengths.lengths)
    if (l < 1) throw Error(ErrorCode::BadParameter, "prescribed lengths must be >= 1");

  SubdivisionSearch search(d, h, branch, lengths.lengths);
  auto paths = search.run();
  if (!paths) return std::nullopt;
  return HSubdivision{h, std::vector<Vertex>(branch.begin(), branch.end()), std::move(*paths)};
}

}  // namespace dilink
