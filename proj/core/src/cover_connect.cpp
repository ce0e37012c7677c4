#include "dilink/cover_connect.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "dilink/error.hpp"
#include "dilink/random.hpp"
#include "dilink/thresholds.hpp"

namespace dilink {

namespace {

std::size_t at(Vertex v) { return static_cast<std::size_t>(v); }

void require_vertex(const Digraph& d, Vertex v) {
  if (!d.contains(v)) throw Error(ErrorCode::LabelOutOfRange, "vertex " + std::to_string(v));
}

}  // namespace

bool is_disjoint_pair_set(const Digraph& d, const CoverPairSet& k) {
  std::vector<char> seen(at(d.order()), 0);
  for (const OrderedPair& p : k.pairs) {
    if (!d.contains(p.u) || !d.contains(p.v) || p.u == p.v) return false;
    if (seen[at(p.u)] || seen[at(p.v)]) return false;
    seen[at(p.u)] = seen[at(p.v)] = 1;
  }
  return true;
}

bool covers(const Digraph& d, OrderedPair pair, OrderedPair target) {
  const Vertex u = pair.u, v = pair.v, x = target.u, y = target.v;
  for (Vertex a : {u, v, x, y})
    if (!d.contains(a)) return false;
  if (u == v || u == x || u == y || v == x || v == y || x == y) return false;
  return d.has_arc(u, x) && d.has_arc(y, v);
}

int cover_count(const Digraph& d, const CoverPairSet& k, OrderedPair target) {
  return static_cast<int>(
      std::count_if(k.pairs.begin(), k.pairs.end(), [&](const OrderedPair& p) { return covers(d, p, target); }));
}

bool verify_d_cover(const Digraph& d, const CoverPairSet& k, std::span<const Vertex> u, int min_cover) {
  if (min_cover < 1) throw Error(ErrorCode::BadParameter, "d must be >= 1");
  for (Vertex x : u) require_vertex(d, x);
  const std::size_t m = k.pairs.size();
  const std::size_t words = (m + 63) / 64;
  const auto n = at(d.order());
  // into[x]: pairs (a, b) with a -> x; outof[y]: pairs (a, b) with y -> b.
  std::vector<std::uint64_t> into(n * words, 0), outof(n * words, 0);
  std::vector<std::vector<std::size_t>> member(n);
  for (std::size_t p = 0; p < m; ++p) {
    const OrderedPair& pr = k.pairs[p];
    require_vertex(d, pr.u);
    require_vertex(d, pr.v);
    for (Vertex x : d.out(pr.u)) into[at(x) * words + p / 64] |= std::uint64_t{1} << (p % 64);
    for (Vertex y : d.in(pr.v)) outof[at(y) * words + p / 64] |= std::uint64_t{1} << (p % 64);
    member[at(pr.u)].push_back(p);
    member[at(pr.v)].push_back(p);
  }
  auto bit = [&](const std::vector<std::uint64_t>& rows, Vertex x, std::size_t p) {
    return (rows[at(x) * words + p / 64] >> (p % 64)) & 1u;
  };
  for (Vertex x : u) {
    for (Vertex y : u) {
      if (x == y) continue;
      long long c = 0;
      for (std::size_t w = 0; w < words; ++w) c += std::popcount(into[at(x) * words + w] & outof[at(y) * words + w]);
      // Pairs that contain x or y can satisfy both arc tests but never cover.
      const auto& mx = member[at(x)];
      for (std::size_t p : mx) c -= bit(into, x, p) & bit(outof, y, p);
      for (std::size_t p : member[at(y)])
        if (std::find(mx.begin(), mx.end(), p) == mx.end()) c -= bit(into, x, p) & bit(outof, y, p);
      if (c < min_cover) return false;
    }
  }
  return true;
}

double d_cover_formula(int n, int d, double gamma) {
  const double g2 = 1.0 / (gamma * gamma);
  return std::ceil(24.0 * g2 * (d * std::log(24.0 * d * g2) + 2.0 * std::log(static_cast<double>(n))) - kSnap);
}

CoverPairSet build_d_cover(const Digraph& d, std::span<const Vertex> u, int min_cover, double gamma,
                           std::uint64_t seed, const CoverOptions& opts) {
  if (min_cover < 1) throw Error(ErrorCode::BadParameter, "d must be >= 1");
  if (!(gamma > 0.0 && gamma < 1.0)) throw Error(ErrorCode::BadParameter, "gamma must lie in (0,1)");
  const int n = d.order();
  std::vector<char> in_u(at(n), 0), excluded(at(n), 0);
  for (Vertex x : u) {
    require_vertex(d, x);
    in_u[at(x)] = 1;
  }
  for (Vertex x : opts.excluded) {
    require_vertex(d, x);
    excluded[at(x)] = 1;
  }
  const auto available = static_cast<std::size_t>(std::count(excluded.begin(), excluded.end(), 0));
  std::size_t m;
  if (opts.size) {
    m = *opts.size;
  } else {
    const double formula = d_cover_formula(n, min_cover, gamma);
    m = formula >= static_cast<double>(n) ? static_cast<std::size_t>(n) : static_cast<std::size_t>(formula);
    m = std::min(m, static_cast<std::size_t>(n / 2));
  }
  if (m > available / 2)
    throw Error(ErrorCode::CoverConstructionFailed, "not enough vertices for " + std::to_string(m) + " disjoint pairs");

  for (int attempt = 0; attempt < std::max(1, opts.restarts); ++attempt) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
    std::vector<Vertex> outside, inside;
    for (Vertex x = 0; x < n; ++x) {
      if (excluded[at(x)]) continue;
      (in_u[at(x)] ? inside : outside).push_back(x);
    }
    shuffle(outside, rng);
    shuffle(inside, rng);
    std::vector<Vertex> order = outside;
    order.insert(order.end(), inside.begin(), inside.end());

    CoverPairSet k;
    if (opts.sampling == PairSampling::Uniform) {
      for (std::size_t i = 0; i < m; ++i) k.pairs.push_back({order[2 * i], order[2 * i + 1]});
    } else {
      std::vector<char> taken = excluded;
      for (Vertex a : order) {
        if (k.pairs.size() == m) break;
        if (taken[at(a)]) continue;
        const auto outs = d.out(a);
        if (outs.empty()) continue;
        const std::size_t start = uniform_index(rng, outs.size());
        for (std::size_t j = 0; j < outs.size(); ++j) {
          const Vertex b = outs[(start + j) % outs.size()];
          if (taken[at(b)]) continue;
          taken[at(a)] = taken[at(b)] = 1;
          k.pairs.push_back({a, b});
          break;
        }
      }
      if (k.pairs.size() < m) continue;
    }
    if (verify_d_cover(d, k, u, min_cover)) return k;
  }
  throw Error(ErrorCode::CoverConstructionFailed,
              "no " + std::to_string(min_cover) + "-cover with " + std::to_string(m) + " pairs found after " +
                  std::to_string(opts.restarts) + " attempts");
}

namespace {

// Shortest path s -> t of order <= max_order through unblocked vertices.
Path bounded_bfs(const Digraph& d, Vertex s, Vertex t, const std::vector<char>& blocked, int max_order, Rng* rng,
                 std::vector<Vertex>& parent) {
  std::fill(parent.begin(), parent.end(), -1);
  std::vector<Vertex> frontier{s}, next;
  parent[at(s)] = s;
  std::vector<Vertex> nbrs;
  for (int level = 0; level + 1 <= max_order - 1 && !frontier.empty(); ++level) {
    next.clear();
    for (Vertex w : frontier) {
      nbrs.assign(d.out(w).begin(), d.out(w).end());
      if (rng) shuffle(nbrs, *rng);
      for (Vertex x : nbrs) {
        if (x == t) {
          Path p{t};
          for (Vertex c = w; c != s; c = parent[at(c)]) p.push_back(c);
          p.push_back(s);
          std::reverse(p.begin(), p.end());
          return p;
        }
        if (blocked[at(x)] || parent[at(x)] != -1) continue;
        parent[at(x)] = w;
        next.push_back(x);
      }
    }
    frontier.swap(next);
  }
  return {};
}

class ExactRouter {
 public:
  ExactRouter(const Digraph& d, const std::vector<OrderedPair>& terminals, std::vector<char> blocked, int max_order)
      : d_(d), terminals_(terminals), blocked_(std::move(blocked)), max_order_(max_order), paths_(terminals.size()) {}

  std::optional<std::vector<Path>> run() {
    if (route(0)) return paths_;
    return std::nullopt;
  }

 private:
  bool route(std::size_t i) {
    if (i == terminals_.size()) return true;
    paths_[i].assign(1, terminals_[i].u);
    return extend(i);
  }

  bool extend(std::size_t i) {
    Path& p = paths_[i];
    const Vertex cur = p.back();
    const Vertex t = terminals_[i].v;
    if (d_.has_arc(cur, t) && static_cast<int>(p.size()) + 1 <= max_order_) {
      p.push_back(t);
      if (route(i + 1)) return true;
      p.pop_back();
    }
    if (static_cast<int>(p.size()) + 2 > max_order_) return false;
    for (Vertex w : d_.out(cur)) {
      if (blocked_[at(w)]) continue;
      blocked_[at(w)] = 1;
      p.push_back(w);
      if (extend(i)) return true;
      p.pop_back();
      blocked_[at(w)] = 0;
    }
    return false;
  }

  const Digraph& d_;
  const std::vector<OrderedPair>& terminals_;
  std::vector<char> blocked_;
  int max_order_;
  std::vector<Path> paths_;
};

}  // namespace

std::vector<Path> connect_disjoint_paths(const Digraph& d, const ConnectionRequest& req, std::uint64_t seed,
                                         const ConnectOptions& opts) {
  if (req.max_order < 2) throw Error(ErrorCode::BadParameter, "max_order must be >= 2");
  const int n = d.order();
  std::vector<char> base(at(n), 0);
  for (const OrderedPair& t : req.terminals) {
    require_vertex(d, t.u);
    require_vertex(d, t.v);
    if (base[at(t.u)] || base[at(t.v)] || t.u == t.v)
      throw Error(ErrorCode::BadParameter, "connection terminals must be distinct");
    base[at(t.u)] = base[at(t.v)] = 1;
  }
  for (Vertex f : req.forbidden) {
    require_vertex(d, f);
    if (base[at(f)] == 1) throw Error(ErrorCode::BadParameter, "forbidden set meets the terminals");
    base[at(f)] = 2;
  }
  const std::size_t r = req.terminals.size();
  if (r == 0) return {};

  std::vector<Vertex> parent(at(n));
  std::optional<std::size_t> first_failure;
  std::vector<std::size_t> order(r);
  for (std::size_t i = 0; i < r; ++i) order[i] = i;

  for (int attempt = 0; attempt <= opts.restarts; ++attempt) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
    if (attempt > 0) shuffle(order, rng);
    std::vector<char> blocked = base;
    std::vector<Path> paths(r);
    bool ok = true;
    for (std::size_t i : order) {
      Path p = bounded_bfs(d, req.terminals[i].u, req.terminals[i].v, blocked, req.max_order,
                           attempt > 0 ? &rng : nullptr, parent);
      if (p.empty()) {
        if (!first_failure) first_failure = i;
        ok = false;
        break;
      }
      for (std::size_t j = 1; j + 1 < p.size(); ++j) blocked[at(p[j])] = 1;
      paths[i] = std::move(p);
    }
    if (ok) return paths;
  }

  if (n <= opts.exact_cap) {
    ExactRouter exact(d, req.terminals, base, req.max_order);
    if (auto paths = exact.run()) return *paths;
  }
  throw Error(ErrorCode::ConnectionFailed, "request " + std::to_string(*first_failure) + " could not be routed",
              first_failure);
}

int ladder_size_cap(double nu) { return static_cast<int>(std::floor(12.0 / (nu * nu) + kSnap)); }
int alternating_order_cap(double nu) { return static_cast<int>(std::floor(8.0 / nu + kSnap)); }
int connector_order_cap(double nu) { return std::max(2, static_cast<int>(std::floor(2.0 / nu + 1.0 + kSnap))); }

namespace {

// Random unused vertex of `candidates` satisfying `ok`, or -1.
template <typename Pred>
Vertex pick(std::span<const Vertex> candidates, const std::vector<char>& used, Rng& rng, Pred ok) {
  if (candidates.empty()) return -1;
  const std::size_t start = uniform_index(rng, candidates.size());
  for (std::size_t j = 0; j < candidates.size(); ++j) {
    const Vertex c = candidates[(start + j) % candidates.size()];
    if (!used[at(c)] && ok(c)) return c;
  }
  return -1;
}

std::optional<Ladder> try_ladder(const Digraph& d, OrderedPair terminal, int k, double nu, std::vector<char>& used,
                                 Rng& rng) {
  Ladder l;
  l.k = k;
  l.lower.assign(static_cast<std::size_t>(2 * k + 1), -1);
  l.upper.assign(static_cast<std::size_t>(2 * k + 1), -1);
  l.lower[0] = terminal.u;
  l.upper[0] = terminal.v;
  std::vector<Vertex> mine;
  auto take = [&](Vertex v) {
    used[at(v)] = 1;
    mine.push_back(v);
  };
  auto release = [&] {
    for (Vertex v : mine) used[at(v)] = 0;
  };
  auto any = [](Vertex) { return true; };

  for (int t = 1; t <= 2 * k; ++t) {
    const Vertex prev_lo = l.lower[static_cast<std::size_t>(t - 1)];
    const Vertex prev_up = l.upper[static_cast<std::size_t>(t - 1)];
    Vertex lo, up;
    if (t % 2 == 1) {
      lo = pick(d.out(prev_lo), used, rng, any);
      if (lo < 0) return release(), std::nullopt;
      take(lo);
      up = pick(d.in(prev_up), used, rng, any);
    } else {
      lo = pick(d.in(prev_lo), used, rng, any);
      if (lo < 0) return release(), std::nullopt;
      take(lo);
      if (t == 2 * k)
        up = pick(d.out(prev_up), used, rng, [&](Vertex c) { return d.has_arc(lo, c); });
      else
        up = pick(d.out(prev_up), used, rng, any);
    }
    if (up < 0) return release(), std::nullopt;
    take(up);
    l.lower[static_cast<std::size_t>(t)] = lo;
    l.upper[static_cast<std::size_t>(t)] = up;
  }

  if (k > 0) {
    ConnectionRequest req;
    for (int j = 1; j < 2 * k; j += 2)
      req.terminals.push_back({l.lower[static_cast<std::size_t>(j)], l.upper[static_cast<std::size_t>(j)]});
    std::vector<char> is_terminal(used.size(), 0);
    for (const auto& t : req.terminals) is_terminal[at(t.u)] = is_terminal[at(t.v)] = 1;
    for (Vertex v = 0; v < d.order(); ++v)
      if (used[at(v)] && !is_terminal[at(v)]) req.forbidden.push_back(v);
    const int budget = ladder_size_cap(nu) - (4 * k + 2);
    req.max_order = std::min(connector_order_cap(nu), std::max(2, budget / k + 2));
    try {
      const auto paths = connect_disjoint_paths(d, req, rng(), {.restarts = 8, .exact_cap = 0});
      for (std::size_t j = 0; j < paths.size(); ++j) {
        for (std::size_t q = 1; q + 1 < paths[j].size(); ++q) take(paths[j][q]);
        l.connectors[static_cast<int>(2 * j + 1)] = paths[j];
      }
    } catch (const Error&) {
      release();
      return std::nullopt;
    }
  }
  if (static_cast<int>(ladder_vertices(l).size()) > ladder_size_cap(nu) || !validate_ladder(d, l)) {
    release();
    return std::nullopt;
  }
  return l;
}

}  // namespace

std::vector<Ladder> build_disjoint_ladders(const Digraph& d, std::span<const OrderedPair> terminals, double nu,
                                           std::uint64_t seed, const LadderOptions& opts) {
  if (!(nu > 0.0 && nu <= 1.0)) throw Error(ErrorCode::BadParameter, "nu must lie in (0,1]");
  if (opts.k < 0) throw Error(ErrorCode::BadParameter, "k must be >= 0");
  const int n = d.order();
  std::vector<char> base(at(n), 0);
  for (const OrderedPair& t : terminals) {
    require_vertex(d, t.u);
    require_vertex(d, t.v);
    if (t.u == t.v || base[at(t.u)] || base[at(t.v)])
      throw Error(ErrorCode::BadParameter, "ladder terminals must be 2l distinct vertices");
    base[at(t.u)] = base[at(t.v)] = 1;
  }
  for (Vertex f : opts.forbidden) {
    require_vertex(d, f);
    base[at(f)] = 1;
  }
  // Largest k whose alternating path (4k + 2 vertices) respects the cap.
  const int k_max = std::max(0, (alternating_order_cap(nu) - 2) / 4);
  const int k = std::min(opts.k, k_max);

  std::size_t failed = 0;
  std::vector<std::size_t> order(terminals.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  for (int attempt = 0; attempt <= opts.restarts; ++attempt) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
    if (attempt > 0) shuffle(order, rng);
    std::vector<char> used = base;
    std::vector<Ladder> ladders(terminals.size());
    bool ok = true;
    for (std::size_t i : order) {
      const OrderedPair t = terminals[i];
      if (opts.prefer_direct_arc && d.has_arc(t.u, t.v)) {
        ladders[i] = Ladder{0, {t.u}, {t.v}, {}};
        continue;
      }
      std::optional<Ladder> l;
      for (int local = 0; local < 16 && !l && k > 0; ++local) l = try_ladder(d, t, k, nu, used, rng);
      if (!l && !opts.prefer_direct_arc && d.has_arc(t.u, t.v)) l = Ladder{0, {t.u}, {t.v}, {}};
      if (!l) {
        failed = i;
        ok = false;
        break;
      }
      ladders[i] = std::move(*l);
    }
    if (ok) return ladders;
  }
  throw Error(ErrorCode::LadderConstructionFailed, "no ladder for terminal pair " + std::to_string(failed), failed);
}

}  // namespace dilink
