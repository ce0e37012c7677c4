#include "dilink/ladder.hpp"

#include <algorithm>
#include <string>

#include "dilink/error.hpp"

namespace dilink {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

bool well_formed(const Ladder& l) {
  if (l.k < 0) return false;
  const std::size_t len = idx(2 * l.k + 1);
  if (l.lower.size() != len || l.upper.size() != len) return false;
  if (l.connectors.size() != idx(l.k)) return false;
  for (const auto& [i, q] : l.connectors) {
    if (i < 1 || i > 2 * l.k - 1 || i % 2 == 0) return false;
    if (q.size() < 2 || q.front() != l.lower[idx(i)] || q.back() != l.upper[idx(i)]) return false;
  }
  return true;
}

// Position of `segment` as a contiguous run of `host`, if any.
std::optional<std::size_t> find_segment(const Path& host, const Path& segment) {
  auto it = std::find(host.begin(), host.end(), segment.front());
  if (it == host.end()) return std::nullopt;
  const auto pos = static_cast<std::size_t>(it - host.begin());
  if (pos + segment.size() > host.size()) return std::nullopt;
  if (!std::equal(segment.begin(), segment.end(), host.begin() + static_cast<std::ptrdiff_t>(pos))) return std::nullopt;
  return pos;
}

void splice(Path& host, const Path& old_segment, const Path& replacement) {
  const auto pos = find_segment(host, old_segment);
  if (!pos) throw Error(ErrorCode::NotEmbedded, "rung is not a contiguous subpath of the host path");
  const auto first = host.begin() + static_cast<std::ptrdiff_t>(*pos);
  host.erase(first, first + static_cast<std::ptrdiff_t>(old_segment.size()));
  host.insert(host.begin() + static_cast<std::ptrdiff_t>(*pos), replacement.begin(), replacement.end());
}

}  // namespace

std::vector<Arc> alternating_path_arcs(const Ladder& l) {
  std::vector<Arc> arcs;
  const auto& v = l.lower;
  const auto& w = l.upper;
  for (int i = 0; i < 2 * l.k; ++i) {
    if (i % 2 == 0) {
      arcs.push_back({v[idx(i)], v[idx(i + 1)]});
      arcs.push_back({w[idx(i + 1)], w[idx(i)]});
    } else {
      arcs.push_back({v[idx(i + 1)], v[idx(i)]});
      arcs.push_back({w[idx(i)], w[idx(i + 1)]});
    }
  }
  arcs.push_back({v[idx(2 * l.k)], w[idx(2 * l.k)]});
  return arcs;
}

std::vector<Vertex> ladder_vertices(const Ladder& l) {
  std::vector<Vertex> vs(l.lower.begin(), l.lower.end());
  vs.insert(vs.end(), l.upper.begin(), l.upper.end());
  for (const auto& [i, q] : l.connectors) vs.insert(vs.end(), q.begin(), q.end());
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

bool validate_ladder(const Digraph& d, const Ladder& l) {
  if (!well_formed(l)) return false;
  std::vector<char> seen(static_cast<std::size_t>(d.order()), 0);
  auto claim = [&](Vertex v) {
    if (!d.contains(v) || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
    return true;
  };
  for (Vertex v : l.lower)
    if (!claim(v)) return false;
  for (Vertex v : l.upper)
    if (!claim(v)) return false;
  for (const auto& [i, q] : l.connectors) {
    if (!validate_path(d, q)) return false;
    for (std::size_t j = 1; j + 1 < q.size(); ++j)
      if (!claim(q[j])) return false;
  }
  for (const Arc& a : alternating_path_arcs(l))
    if (!d.has_arc(a)) return false;
  return true;
}

std::vector<Path> rung_paths(const Ladder& l) {
  if (!well_formed(l)) throw Error(ErrorCode::BadParameter, "malformed ladder");
  std::vector<Path> rungs;
  for (int i = 0; i < 2 * l.k; i += 2) {
    Path r{l.lower[idx(i)]};
    const Path& q = l.connectors.at(i + 1);
    r.insert(r.end(), q.begin(), q.end());
    r.push_back(l.upper[idx(i)]);
    rungs.push_back(std::move(r));
  }
  rungs.push_back({l.lower[idx(2 * l.k)], l.upper[idx(2 * l.k)]});
  return rungs;
}

std::vector<Path> alternative_rung_paths(const Ladder& l) {
  if (!well_formed(l)) throw Error(ErrorCode::BadParameter, "malformed ladder");
  if (l.k == 0) throw Error(ErrorCode::DegenerateLadder, "a ladder with k = 0 has no alternative rungs");
  std::vector<Path> rungs;
  for (int i = 2; i <= 2 * l.k; i += 2) {
    Path r{l.lower[idx(i)]};
    const Path& q = l.connectors.at(i - 1);
    r.insert(r.end(), q.begin(), q.end());
    r.push_back(l.upper[idx(i)]);
    rungs.push_back(std::move(r));
  }
  return rungs;
}

std::optional<std::size_t> is_embedded(const Ladder& l, const HSubdivision& sub) {
  if (!well_formed(l)) return std::nullopt;
  const auto rungs = rung_paths(l);
  for (std::size_t a = 0; a < sub.paths.size(); ++a) {
    const bool all = std::all_of(rungs.begin(), rungs.end(),
                                 [&](const Path& r) { return find_segment(sub.paths[a], r).has_value(); });
    if (all) return a;
  }
  return std::nullopt;
}

HSubdivision absorb_path(const Digraph& d, const HSubdivision& sub, const EmbeddedLadder& el, const Path& p,
                         AbsorbOptions opts) {
  const Ladder& l = el.ladder;
  if (!well_formed(l)) throw Error(ErrorCode::BadParameter, "malformed ladder");
  if (el.host_arc >= sub.paths.size()) throw Error(ErrorCode::NotEmbedded, "host arc out of range");
  if (p.size() < 2 || p.front() != l.start() || p.back() != l.finish())
    throw Error(ErrorCode::EndpointMismatch, "absorbed path must run from the ladder's start to its finish");
  if (!validate_path(d, p)) throw Error(ErrorCode::BadParameter, "absorbed path is not a path of the digraph");

  const auto rungs = rung_paths(l);
  const Path& host = sub.paths[el.host_arc];
  for (const Path& r : rungs)
    if (!find_segment(host, r)) throw Error(ErrorCode::NotEmbedded, "ladder rungs are not subpaths of the host path");

  const auto used = subdivision_vertices(sub);
  for (std::size_t j = 1; j + 1 < p.size(); ++j)
    if (std::binary_search(used.begin(), used.end(), p[j]))
      throw Error(ErrorCode::PathNotDisjoint, "vertex " + std::to_string(p[j]) + " of the absorbed path is in use");

  HSubdivision out = sub;
  Path& path = out.paths[el.host_arc];
  splice(path, rungs[0], p);
  if (opts.check_steps && !validate_subdivision(d, out))
    throw Error(ErrorCode::NotEmbedded, "invalid subdivision after replacing rung 0");
  if (l.k > 0) {
    const auto alternatives = alternative_rung_paths(l);
    for (std::size_t s = 1; s < rungs.size(); ++s) {
      splice(path, rungs[s], alternatives[s - 1]);
      if (opts.check_steps && !validate_subdivision(d, out))
        throw Error(ErrorCode::NotEmbedded, "invalid subdivision after replacing rung " + std::to_string(2 * s));
    }
  }
  return out;
}

Path absorb_into_path(const Digraph& d, const Path& host, const Ladder& l, const Path& p, AbsorbOptions opts) {
  if (host.size() < 2) throw Error(ErrorCode::NotEmbedded, "host path has no arcs");
  HSubdivision sub{single_arc_pattern(), {host.front(), host.back()}, {host}};
  return absorb_path(d, sub, {l, 0}, p, opts).paths.front();
}

}  // namespace dilink
