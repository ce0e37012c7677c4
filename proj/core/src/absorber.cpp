#include "dilink/absorber.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "dilink/error.hpp"
#include "dilink/random.hpp"
#include "dilink/thresholds.hpp"

namespace dilink {

namespace {

std::size_t at(Vertex v) { return static_cast<std::size_t>(v); }

[[noreturn]] void construction_failed(const std::string& what) {
  throw Error(ErrorCode::AbsorberConstructionFailed, what);
}

// Smallest |K| (grown geometrically from m_lo) whose sampled pair set
// verifies as a d-cover of V(D).
CoverPairSet sized_cover(const Digraph& d, int min_cover, double gamma, std::span<const Vertex> excluded,
                         std::size_t m_lo, std::size_t m_hi, std::uint64_t seed, const AbsorberOptions& opts) {
  std::vector<Vertex> all(at(d.order()));
  std::iota(all.begin(), all.end(), 0);
  CoverOptions co;
  co.sampling = opts.sampling;
  co.excluded.assign(excluded.begin(), excluded.end());
  if (opts.cover_size) {
    co.size = *opts.cover_size;
    co.restarts = 50;
    try {
      return build_d_cover(d, all, min_cover, gamma, seed, co);
    } catch (const Error& e) {
      construction_failed(std::string("covering pairs: ") + e.what());
    }
  }
  co.restarts = 3;
  std::uint64_t stream = 0;
  for (std::size_t m = m_lo; m <= m_hi;) {
    co.size = m;
    try {
      return build_d_cover(d, all, min_cover, gamma, derive_seed(seed, stream++), co);
    } catch (const Error&) {
    }
    if (m == m_hi) break;
    // the last step lands exactly on m_hi
    m = std::min(m_hi, std::max(m + 1, static_cast<std::size_t>(std::ceil(m * 1.15))));
  }
  construction_failed("no " + std::to_string(min_cover) + "-cover of V(D) with at most " + std::to_string(m_hi) +
                      " pairs (need at least " + std::to_string(m_lo) + ")");
}

// Ladders in ascending size; first one per group (ascending budget), then
// each into the group with most remaining budget. Group totals stay within
// budget.
std::optional<std::vector<std::vector<std::size_t>>> partition_ladders(const std::vector<Ladder>& ladders,
                                                                       std::vector<long long> budgets) {
  const std::size_t groups = budgets.size();
  if (ladders.size() < groups) return std::nullopt;
  std::vector<long long> cost(ladders.size());
  for (std::size_t j = 0; j < ladders.size(); ++j) cost[j] = static_cast<long long>(ladder_vertices(ladders[j]).size());
  std::vector<std::size_t> by_size(ladders.size());
  std::iota(by_size.begin(), by_size.end(), 0);
  std::stable_sort(by_size.begin(), by_size.end(), [&](auto a, auto b) { return cost[a] < cost[b]; });
  std::vector<std::size_t> by_budget(groups);
  std::iota(by_budget.begin(), by_budget.end(), 0);
  std::stable_sort(by_budget.begin(), by_budget.end(), [&](auto a, auto b) { return budgets[a] < budgets[b]; });

  std::vector<std::vector<std::size_t>> out(groups);
  std::size_t next = 0;
  for (std::size_t g : by_budget) {
    const std::size_t j = by_size[next++];
    if (cost[j] > budgets[g]) return std::nullopt;
    budgets[g] -= cost[j];
    out[g].push_back(j);
  }
  for (; next < by_size.size(); ++next) {
    const std::size_t j = by_size[next];
    const auto g = static_cast<std::size_t>(std::max_element(budgets.begin(), budgets.end()) - budgets.begin());
    if (cost[j] > budgets[g]) return std::nullopt;
    budgets[g] -= cost[j];
    out[g].push_back(j);
  }
  return out;
}

// Path from `from` to `to` through every rung of the given ladders in
// order, joined by short connectors avoiding `used`. Marks the result used.
std::optional<Path> thread_ladders(const Digraph& d, Vertex from, Vertex to, const std::vector<const Ladder*>& group,
                                   std::vector<char>& used, int max_order, std::uint64_t seed) {
  std::vector<Path> rungs;
  for (const Ladder* l : group)
    for (Path& r : rung_paths(*l)) rungs.push_back(std::move(r));

  ConnectionRequest req;
  req.max_order = max_order;
  Vertex prev = from;
  for (const Path& r : rungs) {
    req.terminals.push_back({prev, r.front()});
    prev = r.back();
  }
  req.terminals.push_back({prev, to});
  std::vector<char> terminal(used.size(), 0);
  for (const auto& t : req.terminals) terminal[at(t.u)] = terminal[at(t.v)] = 1;
  for (Vertex v = 0; v < d.order(); ++v)
    if (used[at(v)] && !terminal[at(v)]) req.forbidden.push_back(v);

  std::vector<Path> connectors;
  try {
    connectors = connect_disjoint_paths(d, req, seed, {.restarts = 20, .exact_cap = 0});
  } catch (const Error&) {
    return std::nullopt;
  }
  Path out{from};
  for (std::size_t j = 0; j < connectors.size(); ++j) {
    out.insert(out.end(), connectors[j].begin() + 1, connectors[j].end());
    if (j < rungs.size()) out.insert(out.end(), rungs[j].begin() + 1, rungs[j].end());
  }
  for (Vertex v : out) used[at(v)] = 1;
  return out;
}

void mark_ladders(const std::vector<Ladder>& ladders, std::vector<char>& used) {
  for (const Ladder& l : ladders)
    for (Vertex v : ladder_vertices(l)) used[at(v)] = 1;
}

// Sorted union of branch vertices and avoided vertices.
std::vector<Vertex> blocked_vertices(const Digraph& d, std::span<const Vertex> branch, std::span<const Vertex> avoid) {
  std::vector<Vertex> out(branch.begin(), branch.end());
  for (Vertex v : avoid) {
    if (!d.contains(v)) throw Error(ErrorCode::LabelOutOfRange, "avoided vertex " + std::to_string(v));
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ValidationResult invalid(std::string why) { return {false, std::move(why)}; }

// Checks shared by both absorber types: the cover, ladder endpoints,
// validity and disjointness.
ValidationResult check_cover_and_ladders(const Digraph& d, const CoverPairSet& cover,
                                         const std::vector<Ladder>& ladders, int min_cover) {
  if (!is_disjoint_pair_set(d, cover)) return invalid("K is not a set of disjoint ordered pairs");
  std::vector<Vertex> all(at(d.order()));
  std::iota(all.begin(), all.end(), 0);
  if (min_cover < 1 || !verify_d_cover(d, cover, all, min_cover)) return invalid("K does not d-cover V(D)");
  if (ladders.size() != cover.pairs.size()) return invalid("ladder count differs from |K|");
  std::vector<char> seen(at(d.order()), 0);
  for (std::size_t i = 0; i < ladders.size(); ++i) {
    const Ladder& l = ladders[i];
    if (!validate_ladder(d, l)) return invalid("ladder " + std::to_string(i) + " is invalid");
    if (l.start() != cover.pairs[i].u || l.finish() != cover.pairs[i].v)
      return invalid("ladder " + std::to_string(i) + " does not join its covering pair");
    for (Vertex v : ladder_vertices(l)) {
      if (seen[at(v)]) return invalid("ladders are not disjoint");
      seen[at(v)] = 1;
    }
  }
  return {};
}

bool rungs_in(const Ladder& l, const Path& host) {
  HSubdivision probe{single_arc_pattern(), {host.front(), host.back()}, {host}};
  return is_embedded(l, probe).has_value();
}

// Maximum bipartite matching of paths to eligible pairs (Kuhn).
std::vector<std::size_t> match_paths(const std::vector<std::vector<std::size_t>>& eligible, std::size_t pair_count) {
  const std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> pair_owner(pair_count, none), path_pair(eligible.size(), none);
  std::vector<char> visited;
  auto augment = [&](auto&& self, std::size_t i) -> bool {
    for (std::size_t p : eligible[i]) {
      if (visited[p]) continue;
      visited[p] = 1;
      if (pair_owner[p] == none || self(self, pair_owner[p])) {
        pair_owner[p] = i;
        path_pair[i] = p;
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < eligible.size(); ++i) {
    visited.assign(pair_count, 0);
    augment(augment, i);
  }
  return path_pair;
}

// (u, v) can absorb P = x..y: u -> x, y -> v, and u, v off P.
bool can_absorb(const Digraph& d, OrderedPair pair, const Path& p) {
  if (!d.has_arc(pair.u, p.front()) || !d.has_arc(p.back(), pair.v)) return false;
  return std::find(p.begin(), p.end(), pair.u) == p.end() && std::find(p.begin(), p.end(), pair.v) == p.end();
}

void check_external_paths(const Digraph& d, std::span<const Path> paths, const std::vector<Vertex>& absorber) {
  std::vector<char> seen(at(d.order()), 0);
  for (Vertex v : absorber) seen[at(v)] = 1;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (!validate_path(d, paths[i])) throw Error(ErrorCode::BadParameter, "path " + std::to_string(i) + " is invalid");
    for (Vertex v : paths[i]) {
      if (seen[at(v)])
        throw Error(ErrorCode::NotDisjoint, "path " + std::to_string(i) + " meets the absorber or another path", i);
      seen[at(v)] = 1;
    }
  }
}

// Pair index chosen for each path; throws NoCoveringPair for the first
// unmatched path.
std::vector<std::size_t> choose_pairs(const Digraph& d, const CoverPairSet& cover, std::span<const Path> paths,
                                      const std::function<bool(std::size_t, std::size_t)>& allowed) {
  std::vector<std::vector<std::size_t>> eligible(paths.size());
  for (std::size_t i = 0; i < paths.size(); ++i)
    for (std::size_t p = 0; p < cover.pairs.size(); ++p)
      if (allowed(i, p) && can_absorb(d, cover.pairs[p], paths[i])) eligible[i].push_back(p);
  const auto chosen = match_paths(eligible, cover.pairs.size());
  for (std::size_t i = 0; i < chosen.size(); ++i)
    if (chosen[i] == static_cast<std::size_t>(-1))
      throw Error(ErrorCode::NoCoveringPair, "no unused covering pair for path " + std::to_string(i), i);
  return chosen;
}

Path extend_through(const OrderedPair& pair, const Path& p) {
  Path q{pair.u};
  q.insert(q.end(), p.begin(), p.end());
  q.push_back(pair.v);
  return q;
}

}  // namespace

AbsorberParams absorber_params(double nu) {
  if (!(nu > 0.0 && nu < 1.0 + kSnap)) throw Error(ErrorCode::BadParameter, "nu must lie in (0,1]");
  const double xi = nu * nu / 32.0;
  return {xi, static_cast<int>(ceil_threshold(2.0 / xi))};
}

double absorber_size_bound(double nu, double gamma, int d, int n) {
  const double nu2 = 1.0 / (nu * nu), g2 = 1.0 / (gamma * gamma);
  return 1600.0 * nu2 * g2 * (d * std::log(d * g2) + std::log(static_cast<double>(n))) + 3.0 * nu2 * d;
}

AbsorberTypeI build_type1_absorber(const Digraph& d, const PatternDigraph& h, std::span<const Vertex> branch,
                                   const LengthPrescription& lengths, const ExpansionParams& p, int min_cover,
                                   std::uint64_t seed, const AbsorberOptions& opts) {
  check_params(p);
  if (min_cover < 1) throw Error(ErrorCode::BadParameter, "d must be >= 1");
  if (branch.size() != static_cast<std::size_t>(h.vertex_count()))
    throw Error(ErrorCode::BadParameter, "branch map size does not match pattern");
  if (lengths.lengths.size() != h.arc_count())
    throw Error(ErrorCode::BadParameter, "length prescription size does not match pattern");
  std::vector<char> base(at(d.order()), 0);
  for (Vertex b : branch) {
    if (!d.contains(b)) throw Error(ErrorCode::LabelOutOfRange, "branch vertex " + std::to_string(b));
    if (base[at(b)]) throw Error(ErrorCode::BadParameter, "branch map not injective");
    base[at(b)] = 1;
  }
  const std::vector<Vertex> blocked = blocked_vertices(d, branch, opts.avoid);
  for (Vertex v : opts.avoid) base[at(v)] = 1;
  const std::size_t groups = h.arc_count();
  // Path i holds 2 branch vertices, its ladders and connector interiors,
  // and must leave room for an absorbed path of order >= 2.
  std::vector<long long> budgets;
  std::size_t m_hi = 0;
  for (int l : lengths.lengths) {
    budgets.push_back(l - 3);
    m_hi += static_cast<std::size_t>(std::max(0, (l - 3) / 2));
  }
  m_hi = std::min(m_hi, (static_cast<std::size_t>(d.order()) - blocked.size()) / 2);
  const std::size_t m_lo = std::max(groups, static_cast<std::size_t>(min_cover));
  if (m_hi < groups) construction_failed("fewer covering pairs fit than there are subdivided paths");

  std::string last_failure = "no attempt made";
  for (int attempt = 0; attempt < std::max(1, opts.restarts); ++attempt) {
    const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(attempt));
    AbsorberTypeI a;
    a.d = min_cover;
    a.cover = sized_cover(d, min_cover, p.gamma, blocked, std::min(m_lo, m_hi), m_hi, derive_seed(s, 0), opts);
    try {
      LadderOptions lo;
      lo.k = opts.ladder_k;
      lo.forbidden = blocked;
      a.ladders = build_disjoint_ladders(d, a.cover.pairs, p.nu, derive_seed(s, 1), lo);
    } catch (const Error& e) {
      last_failure = std::string("ladders: ") + e.what();
      continue;
    }
    const auto groups_of = partition_ladders(a.ladders, budgets);
    if (!groups_of) {
      last_failure = "ladders do not fit the length budgets";
      continue;
    }

    std::vector<char> used = base;
    mark_ladders(a.ladders, used);
    a.host.pattern = h;
    a.host.branch.assign(branch.begin(), branch.end());
    a.host.paths.resize(groups);
    a.embedding.assign(a.ladders.size(), 0);
    bool ok = true;
    for (std::size_t i = 0; i < groups && ok; ++i) {
      std::vector<const Ladder*> group;
      for (std::size_t j : (*groups_of)[i]) {
        group.push_back(&a.ladders[j]);
        a.embedding[j] = i;
      }
      const Arc arc = h.arc_order[i];
      auto path = thread_ladders(d, branch[at(arc.tail)], branch[at(arc.head)], group, used,
                                 connector_order_cap(p.nu), derive_seed(s, 2 + i));
      if (!path) {
        last_failure = "could not thread the ladders of subdivided path " + std::to_string(i);
        ok = false;
      } else if (static_cast<long long>(path->size()) > lengths.lengths[i] - 1) {
        last_failure = "subdivided path " + std::to_string(i) + " exceeds its length budget";
        ok = false;
      } else {
        a.host.paths[i] = std::move(*path);
      }
    }
    if (!ok) continue;
    if (auto v = validate_absorber(d, a); !v) {
      last_failure = "validation: " + v.reason;
      continue;
    }
    return a;
  }
  construction_failed(last_failure);
}

AbsorberTypeII build_type2_absorber(const Digraph& d, const PatternDigraph& h, std::span<const int> orders,
                                    const ExpansionParams& p, int min_cover, std::uint64_t seed,
                                    const AbsorberOptions& opts) {
  check_params(p);
  const std::size_t k = orders.size();
  if (k == 0) throw Error(ErrorCode::BadParameter, "need at least one subdivision order");
  if (min_cover < 1 || k > static_cast<std::size_t>(min_cover))
    throw Error(ErrorCode::BadParameter, "need 1 <= k <= d");
  const long long branch_count = h.vertex_count();
  std::vector<long long> budgets;
  std::size_t m_hi = 0;
  for (int o : orders) {
    const long long b = o - 2 - branch_count;
    budgets.push_back(b);
    m_hi += static_cast<std::size_t>(std::max<long long>(0, b / 2));
  }
  const std::vector<Vertex> blocked = blocked_vertices(d, {}, opts.avoid);
  m_hi = std::min(m_hi, (static_cast<std::size_t>(d.order()) - blocked.size()) / 2);
  const std::size_t m_lo = std::max(k, static_cast<std::size_t>(min_cover));
  if (m_hi < k) construction_failed("fewer covering pairs fit than there are subdivisions");

  std::string last_failure = "no attempt made";
  for (int attempt = 0; attempt < std::max(1, opts.restarts); ++attempt) {
    const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(attempt));
    Rng rng(derive_seed(s, 7));
    AbsorberTypeII a;
    a.d = min_cover;
    a.cover = sized_cover(d, min_cover, p.gamma, blocked, std::min(m_lo, m_hi), m_hi, derive_seed(s, 0), opts);
    try {
      LadderOptions lo;
      lo.k = opts.ladder_k;
      lo.forbidden = blocked;
      a.ladders = build_disjoint_ladders(d, a.cover.pairs, p.nu, derive_seed(s, 1), lo);
    } catch (const Error& e) {
      last_failure = std::string("ladders: ") + e.what();
      continue;
    }
    const auto groups_of = partition_ladders(a.ladders, budgets);
    if (!groups_of) {
      last_failure = "ladders do not fit the order budgets";
      continue;
    }

    std::vector<char> used(at(d.order()), 0);
    for (Vertex v : blocked) used[at(v)] = 1;
    mark_ladders(a.ladders, used);
    // Branch vertices for every host, drawn from the untouched vertices.
    std::vector<Vertex> free;
    for (Vertex v = 0; v < d.order(); ++v)
      if (!used[at(v)]) free.push_back(v);
    if (free.size() < k * static_cast<std::size_t>(branch_count)) {
      last_failure = "not enough vertices left for branch vertices";
      continue;
    }
    shuffle(free, rng);
    a.hosts.resize(k);
    a.embedding.assign(a.ladders.size(), {});
    for (std::size_t i = 0; i < k; ++i) {
      a.hosts[i].pattern = h;
      for (long long b = 0; b < branch_count; ++b) {
        const Vertex v = free[i * static_cast<std::size_t>(branch_count) + static_cast<std::size_t>(b)];
        a.hosts[i].branch.push_back(v);
        used[at(v)] = 1;
      }
      a.hosts[i].paths.resize(h.arc_count());
    }

    bool ok = true;
    std::uint64_t stream = 2;
    for (std::size_t i = 0; i < k && ok; ++i) {
      HSubdivision& host = a.hosts[i];
      for (std::size_t arc = 0; arc < h.arc_count() && ok; ++arc) {
        std::vector<const Ladder*> group;
        if (arc == 0) {
          for (std::size_t j : (*groups_of)[i]) {
            group.push_back(&a.ladders[j]);
            a.embedding[j] = {i, 0};
          }
        }
        const Arc pa = h.arc_order[arc];
        auto path = thread_ladders(d, host.branch[at(pa.tail)], host.branch[at(pa.head)], group, used,
                                   connector_order_cap(p.nu), derive_seed(s, stream++));
        if (!path) {
          last_failure = "could not route subdivided path " + std::to_string(arc) + " of host " + std::to_string(i);
          ok = false;
        } else {
          host.paths[arc] = std::move(*path);
        }
      }
      if (ok && static_cast<long long>(subdivision_order(host)) > orders[i] - 2) {
        last_failure = "host " + std::to_string(i) + " exceeds its order budget";
        ok = false;
      }
    }
    if (!ok) continue;
    if (auto v = validate_absorber(d, a); !v) {
      last_failure = "validation: " + v.reason;
      continue;
    }
    return a;
  }
  construction_failed(last_failure);
}

ValidationResult validate_absorber(const Digraph& d, const AbsorberTypeI& a) {
  if (auto r = check_cover_and_ladders(d, a.cover, a.ladders, a.d); !r) return r;
  if (!validate_subdivision(d, a.host)) return invalid("host is not a valid H-subdivision");
  if (a.embedding.size() != a.ladders.size()) return invalid("embedding size differs from ladder count");
  std::vector<char> has_ladder(a.host.paths.size(), 0);
  for (std::size_t i = 0; i < a.ladders.size(); ++i) {
    const std::size_t arc = a.embedding[i];
    if (arc >= a.host.paths.size() || !rungs_in(a.ladders[i], a.host.paths[arc]))
      return invalid("ladder " + std::to_string(i) + " is not embedded where recorded");
    has_ladder[arc] = 1;
  }
  for (std::size_t arc = 0; arc < has_ladder.size(); ++arc)
    if (!has_ladder[arc]) return invalid("subdivided path " + std::to_string(arc) + " has no embedded ladder");
  return {};
}

ValidationResult validate_absorber(const Digraph& d, const AbsorberTypeII& a) {
  if (auto r = check_cover_and_ladders(d, a.cover, a.ladders, a.d); !r) return r;
  if (a.hosts.empty()) return invalid("no host subdivisions");
  std::vector<char> seen(at(d.order()), 0);
  for (std::size_t i = 0; i < a.hosts.size(); ++i) {
    if (!validate_subdivision(d, a.hosts[i])) return invalid("host " + std::to_string(i) + " is invalid");
    for (Vertex v : subdivision_vertices(a.hosts[i])) {
      if (seen[at(v)]) return invalid("hosts are not disjoint");
      seen[at(v)] = 1;
    }
  }
  if (a.embedding.size() != a.ladders.size()) return invalid("embedding size differs from ladder count");
  std::vector<char> has_ladder(a.hosts.size(), 0);
  for (std::size_t i = 0; i < a.ladders.size(); ++i) {
    const LadderPlacement e = a.embedding[i];
    if (e.host >= a.hosts.size() || e.arc >= a.hosts[e.host].paths.size() ||
        !rungs_in(a.ladders[i], a.hosts[e.host].paths[e.arc]))
      return invalid("ladder " + std::to_string(i) + " is not embedded where recorded");
    has_ladder[e.host] = 1;
  }
  for (std::size_t i = 0; i < has_ladder.size(); ++i)
    if (!has_ladder[i]) return invalid("host " + std::to_string(i) + " has no embedded ladder");
  return {};
}

std::vector<Vertex> absorber_vertices(const AbsorberTypeI& a) {
  std::vector<Vertex> vs = subdivision_vertices(a.host);
  for (const Ladder& l : a.ladders)
    for (Vertex v : ladder_vertices(l)) vs.push_back(v);
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

std::vector<Vertex> absorber_vertices(const AbsorberTypeII& a) {
  std::vector<Vertex> vs;
  for (const HSubdivision& h : a.hosts)
    for (Vertex v : subdivision_vertices(h)) vs.push_back(v);
  for (const Ladder& l : a.ladders)
    for (Vertex v : ladder_vertices(l)) vs.push_back(v);
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

HSubdivision absorb_paths(const Digraph& d, const AbsorberTypeI& a, std::span<const Path> paths,
                          std::optional<std::span<const std::size_t>> required_arcs) {
  if (paths.size() > static_cast<std::size_t>(a.d))
    throw Error(ErrorCode::TooManyPaths, std::to_string(paths.size()) + " paths exceed d=" + std::to_string(a.d));
  if (required_arcs && required_arcs->size() != paths.size())
    throw Error(ErrorCode::BadParameter, "required_arcs must align with paths");
  check_external_paths(d, paths, absorber_vertices(a));
  const auto chosen = choose_pairs(d, a.cover, paths, [&](std::size_t i, std::size_t p) {
    return !required_arcs || a.embedding[p] == (*required_arcs)[i];
  });
  HSubdivision sub = a.host;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const std::size_t pair = chosen[i];
    sub = absorb_path(d, sub, {a.ladders[pair], a.embedding[pair]}, extend_through(a.cover.pairs[pair], paths[i]));
  }
  return sub;
}

std::vector<HSubdivision> absorb_paths(const Digraph& d, const AbsorberTypeII& a, std::span<const Path> paths) {
  if (paths.size() > static_cast<std::size_t>(a.d) || paths.size() > a.hosts.size())
    throw Error(ErrorCode::TooManyPaths, std::to_string(paths.size()) + " paths for " +
                                             std::to_string(a.hosts.size()) + " hosts and d=" + std::to_string(a.d));
  check_external_paths(d, paths, absorber_vertices(a));
  const auto chosen =
      choose_pairs(d, a.cover, paths, [&](std::size_t i, std::size_t p) { return a.embedding[p].host == i; });
  std::vector<HSubdivision> out = a.hosts;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const std::size_t pair = chosen[i];
    out[i] = absorb_path(d, out[i], {a.ladders[pair], a.embedding[pair].arc},
                         extend_through(a.cover.pairs[pair], paths[i]));
  }
  return out;
}

}  // namespace dilink
