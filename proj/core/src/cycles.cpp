#include "dilink/cycles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>
#include <string>

#include "dilink/error.hpp"
#include "dilink/generators.hpp"
#include "dilink/random.hpp"

namespace dilink {

namespace {

std::size_t at(Vertex v) { return static_cast<std::size_t>(v); }

constexpr int kShortCycle = 12;
constexpr long long kDfsBudget = 20000;

// Random perfect matching of out-copies to in-copies (a cycle factor),
// then Karp-Steele patching: cycles C, C' merge through arcs a -> a+ in C
// and b -> b+ in C' whenever a -> b+ and b -> a+ are arcs.
std::optional<std::vector<Vertex>> patched_hamilton(const Digraph& g, Rng& rng) {
  const int n = g.order();
  if (n < 2) return std::nullopt;
  std::vector<std::vector<Vertex>> out(at(n));
  for (Vertex u = 0; u < n; ++u) {
    out[at(u)].assign(g.out(u).begin(), g.out(u).end());
    if (out[at(u)].empty()) return std::nullopt;
    shuffle(out[at(u)], rng);
  }
  std::vector<Vertex> owner(at(n), -1), succ(at(n), -1);
  std::vector<Vertex> order(at(n));
  std::iota(order.begin(), order.end(), 0);
  shuffle(order, rng);
  for (Vertex u : order)
    for (Vertex w : out[at(u)])
      if (owner[at(w)] < 0) {
        owner[at(w)] = u;
        succ[at(u)] = w;
        break;
      }
  std::vector<int> stamp(at(n), -1);
  int round = 0;
  auto augment = [&](auto&& self, Vertex u) -> bool {
    for (Vertex w : out[at(u)]) {
      if (stamp[at(w)] == round) continue;
      stamp[at(w)] = round;
      if (owner[at(w)] < 0 || self(self, owner[at(w)])) {
        owner[at(w)] = u;
        succ[at(u)] = w;
        return true;
      }
    }
    return false;
  };
  for (Vertex u : order) {
    if (succ[at(u)] >= 0) continue;
    ++round;
    if (!augment(augment, u)) return std::nullopt;
  }

  std::vector<int> comp(at(n), -1);
  auto label_cycles = [&] {
    std::fill(comp.begin(), comp.end(), -1);
    std::vector<int> sizes;
    for (Vertex s = 0; s < n; ++s) {
      if (comp[at(s)] >= 0) continue;
      int len = 0;
      for (Vertex x = s; comp[at(x)] < 0; x = succ[at(x)]) {
        comp[at(x)] = static_cast<int>(sizes.size());
        ++len;
      }
      sizes.push_back(len);
    }
    return sizes;
  };
  for (auto sizes = label_cycles(); sizes.size() > 1; sizes = label_cycles()) {
    const int smallest = static_cast<int>(std::min_element(sizes.begin(), sizes.end()) - sizes.begin());
    std::vector<Vertex> members;
    for (Vertex x = 0; x < n; ++x)
      if (comp[at(x)] == smallest) members.push_back(x);
    shuffle(members, rng);
    bool patched = false;
    for (Vertex a : members) {
      const Vertex a2 = succ[at(a)];
      for (Vertex b : g.in(a2)) {
        if (comp[at(b)] == smallest) continue;
        const Vertex b2 = succ[at(b)];
        if (!g.has_arc(a, b2)) continue;
        succ[at(a)] = b2;
        succ[at(b)] = a2;
        patched = true;
        break;
      }
      if (patched) break;
    }
    if (!patched) return std::nullopt;
  }
  std::vector<Vertex> cycle{0};
  for (Vertex x = succ[0]; x != 0; x = succ[at(x)]) cycle.push_back(x);
  return cycle;
}

// Randomised depth-first search for a cycle of length l through v.
std::optional<std::vector<Vertex>> dfs_cycle(const Digraph& d, Vertex v, int l, Rng& rng) {
  std::vector<Vertex> path{v};
  std::vector<char> on(at(d.order()), 0);
  on[at(v)] = 1;
  long long budget = kDfsBudget;
  auto go = [&](auto&& self) -> bool {
    if (--budget < 0) return false;
    const Vertex last = path.back();
    if (static_cast<int>(path.size()) == l) return d.has_arc(last, v);
    std::vector<Vertex> next(d.out(last).begin(), d.out(last).end());
    shuffle(next, rng);
    const bool closing = static_cast<int>(path.size()) == l - 1;
    for (Vertex w : next) {
      if (on[at(w)] || (closing && !d.has_arc(w, v))) continue;
      on[at(w)] = 1;
      path.push_back(w);
      if (self(self)) return true;
      path.pop_back();
      on[at(w)] = 0;
    }
    return false;
  };
  if (go(go)) return path;
  return std::nullopt;
}

// Random l-subset through v, Hamilton cycle of the induced subdigraph.
std::optional<std::vector<Vertex>> subset_cycle(const Digraph& d, Vertex v, int l, Rng& rng) {
  std::vector<Vertex> others;
  for (Vertex x = 0; x < d.order(); ++x)
    if (x != v && d.out_degree(x) > 0 && d.in_degree(x) > 0) others.push_back(x);
  if (static_cast<int>(others.size()) < l - 1) return std::nullopt;
  shuffle(others, rng);
  others.resize(at(l - 1));
  others.push_back(v);
  std::sort(others.begin(), others.end());
  const auto sub = induced_subdigraph(d, others);
  auto local = patched_hamilton(sub.graph, rng);
  if (!local) return std::nullopt;
  for (Vertex& x : *local) x = sub.original[at(x)];
  return local;
}

// Exhaustive search over vertex subsets: reach[mask] holds the possible
// endpoints of paths from v covering exactly `mask`.
std::optional<std::vector<Vertex>> exact_cycle(const Digraph& d, Vertex v, int l) {
  const int n = d.order();
  std::vector<Vertex> others;
  for (Vertex x = 0; x < n; ++x)
    if (x != v) others.push_back(x);
  const int m = static_cast<int>(others.size());
  std::vector<std::uint32_t> reach(std::size_t{1} << m, 0);
  for (int j = 0; j < m; ++j)
    if (d.has_arc(v, others[at(j)])) reach[std::size_t{1} << j] |= 1u << j;
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    const std::uint32_t ends = reach[mask];
    if (!ends || std::popcount(mask) >= l - 1) continue;
    for (int e = 0; e < m; ++e) {
      if (!(ends >> e & 1u)) continue;
      for (int w = 0; w < m; ++w)
        if (!(mask >> w & 1u) && d.has_arc(others[at(e)], others[at(w)])) reach[mask | (1u << w)] |= 1u << w;
    }
  }
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    if (std::popcount(mask) != l - 1) continue;
    for (int e = 0; e < m; ++e) {
      if (!(reach[mask] >> e & 1u) || !d.has_arc(others[at(e)], v)) continue;
      std::vector<Vertex> rev;
      std::uint32_t cur = mask;
      int end = e;
      while (true) {
        rev.push_back(others[at(end)]);
        const std::uint32_t prev = cur & ~(1u << end);
        if (!prev) break;
        int p = 0;
        while (!((reach[prev] >> p & 1u) && d.has_arc(others[at(p)], others[at(end)]))) ++p;
        cur = prev;
        end = p;
      }
      std::vector<Vertex> cycle{v};
      cycle.insert(cycle.end(), rev.rbegin(), rev.rend());
      return cycle;
    }
  }
  return std::nullopt;
}

// Rotate so the cycle starts at v.
Cycle starting_at(std::vector<Vertex> vs, Vertex v) {
  std::rotate(vs.begin(), std::find(vs.begin(), vs.end(), v), vs.end());
  return Cycle{std::move(vs)};
}

}  // namespace

Cycle cycle_through_vertex(const Digraph& d, Vertex v, int l, std::uint64_t seed, const CycleOptions& opts) {
  const int n = d.order();
  if (!d.contains(v)) throw Error(ErrorCode::LabelOutOfRange, "vertex " + std::to_string(v));
  if (l < 2 || l > n) throw Error(ErrorCode::BadParameter, "cycle length must lie in [2, n]");
  const bool exact_possible = n <= opts.exact_cap && n <= 25;
  if (l == n && !is_strongly_connected(d))
    throw CycleNotFoundError("no Hamilton cycle: digraph is not strongly connected", true);
  if (d.out_degree(v) == 0 || d.in_degree(v) == 0)
    throw CycleNotFoundError("vertex " + std::to_string(v) + " lies on no cycle", true);

  Rng rng(seed);
  for (int attempt = 0; attempt < opts.attempts; ++attempt) {
    std::optional<std::vector<Vertex>> found;
    if (l == n) {
      found = patched_hamilton(d, rng);
    } else if (l <= kShortCycle) {
      found = dfs_cycle(d, v, l, rng);
    } else {
      found = subset_cycle(d, v, l, rng);
    }
    if (found) return starting_at(std::move(*found), v);
  }
  if (exact_possible) {
    if (auto found = exact_cycle(d, v, l)) return starting_at(std::move(*found), v);
    throw CycleNotFoundError("no cycle of length " + std::to_string(l) + " through " + std::to_string(v), true);
  }
  throw CycleNotFoundError("no cycle of length " + std::to_string(l) + " through " + std::to_string(v) +
                               " found within the attempt budget",
                           false);
}

Cycle hamilton_cycle(const Digraph& d, std::uint64_t seed, const CycleOptions& opts) {
  if (d.order() < 2) throw CycleNotFoundError("fewer than two vertices", true);
  return cycle_through_vertex(d, 0, d.order(), seed, opts);
}

std::vector<Path> cut_cycle_segments_at(const Cycle& c, std::span<const int> sizes, std::size_t offset) {
  long long total = 0;
  for (int s : sizes) {
    if (s < 1) throw Error(ErrorCode::BadParameter, "segment sizes must be >= 1");
    total += s;
  }
  const std::size_t len = c.length();
  if (total > static_cast<long long>(len))
    throw Error(ErrorCode::SizesExceedCycle,
                "segments need " + std::to_string(total) + " vertices, cycle has " + std::to_string(len));
  std::vector<Path> out;
  std::size_t pos = len ? offset % len : 0;
  for (int s : sizes) {
    Path p;
    for (int j = 0; j < s; ++j) {
      p.push_back(c.vertices[pos]);
      pos = (pos + 1) % len;
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Path> cut_cycle_segments(const Cycle& c, std::span<const int> sizes, std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t offset = c.length() ? uniform_index(rng, c.length()) : 0;
  return cut_cycle_segments_at(c, sizes, offset);
}

}  // namespace dilink
