// One PASS/FAIL line per acceptance criterion. Exit status is non-zero if
// any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "dilink/absorber.hpp"
#include "dilink/cover_connect.hpp"
#include "dilink/cycles.hpp"
#include "dilink/degree_conditions.hpp"
#include "dilink/error.hpp"
#include "dilink/expansion.hpp"
#include "dilink/generators.hpp"
#include "dilink/ladder.hpp"
#include "dilink/pipeline.hpp"
#include "dilink/subdivision.hpp"
#include "support/instances.hpp"
#include "support/oracles.hpp"

using namespace dilink;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void run(int id, const std::string& name, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("uncaught exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!o.ok) ++failures;
  std::printf("[%s] criterion %d: %s (%s; %.1fs)\n", o.ok ? "PASS" : "FAIL", id, name.c_str(), o.detail.c_str(), secs);
  std::fflush(stdout);
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::vector<int> as_int(const std::vector<Vertex>& v) { return {v.begin(), v.end()}; }

std::vector<Vertex> all_vertices(int n) {
  std::vector<Vertex> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
  return v;
}

Outcome ladder_swap() {
  inst::Rng rng(1001);
  int good = 0;
  const int trials = 1000;
  for (int t = 0; t < trials; ++t) {
    const auto li = inst::random_ladder_instance(rng);
    try {
      const HSubdivision out = absorb_path(li.d, li.sub, {li.ladder, li.host_arc}, li.p);
      std::set<Vertex> want = inst::vertex_set(li.sub);
      want.insert(li.p.begin(), li.p.end());
      const bool ok = validate_subdivision(li.d, out) &&
                      oracle::subdivision_ok(oracle::matrix(li.d), inst::pattern_arcs(out.pattern), out.branch,
                                             out.paths) &&
                      out.branch == li.sub.branch && inst::vertex_set(out) == want;
      good += ok;
    } catch (const Error&) {
    }
  }
  return {good == trials, fmt("%d/%d instances", good, trials)};
}

Outcome exact_certification() {
  inst::Rng rng(1002);
  const std::vector<std::pair<oracle::Ratio, oracle::Ratio>> params{{{1, 6}, {1, 6}}, {{1, 3}, {1, 3}}};
  int agree = 0, refuted = 0, reverified = 0, checks = 0;
  for (int t = 0; t < 10000; ++t) {
    const int n = inst::uniform(rng, 1, 6);
    const Digraph d = inst::random_digraph(n, std::uniform_real_distribution<double>(0.0, 1.0)(rng), rng);
    const auto m = oracle::matrix(d);
    for (const auto& [nu, tau] : params) {
      ++checks;
      const ExpansionParams p{static_cast<double>(nu.p) / static_cast<double>(nu.q),
                              static_cast<double>(tau.p) / static_cast<double>(tau.q), 0.5};
      const ExpansionReport r = certify_outexpander_exact(d, p);
      const auto violators = oracle::all_violators(m, nu, tau);
      agree += (r.verdict == Verdict::CertifiedExact) == violators.empty();
      if (r.verdict == Verdict::Refuted) {
        ++refuted;
        std::size_t min_size = 99;
        for (const auto& v : violators) min_size = std::min(min_size, v.size());
        reverified += r.counterexample && oracle::violates(m, as_int(*r.counterexample), nu, tau) &&
                      r.counterexample->size() == min_size;
      }
    }
  }
  return {agree == checks && reverified == refuted,
          fmt("verdicts agree %d/%d, counterexamples re-verified %d/%d", agree, checks, reverified, refuted)};
}

struct Certified {
  Digraph d;
  ExpansionParams p;
};

// 200 certified robust outexpanders on n <= 14 vertices.
const std::vector<Certified>& certified_instances() {
  static const std::vector<Certified> out = [] {
    std::vector<Certified> v;
    inst::Rng rng(1003);
    const std::vector<ExpansionParams> params{{0.3, 0.3, 0.9}, {0.2, 0.25, 0.9}, {1.0 / 7, 1.0 / 7, 0.9}, {0.3, 0.4, 0.9}};
    while (v.size() < 200) {
      const int n = inst::uniform(rng, 8, 14);
      const Digraph d = inst::random_digraph(n, std::uniform_real_distribution<double>(0.6, 0.95)(rng), rng);
      const ExpansionParams p = params[v.size() % params.size()];
      if (certify_outexpander_exact(d, p).verdict == Verdict::CertifiedExact) v.push_back({d, p});
    }
    return v;
  }();
  return out;
}

Outcome resilience() {
  inst::Rng rng(1004);
  int checks = 0, passed = 0, nonempty = 0, nonvacuous = 0;
  auto check = [&](const Digraph& d, const ExpansionParams& p, int samples) {
    const int n = d.order();
    const int cap = static_cast<int>(std::floor(p.nu * n / 4 + 1e-9));
    for (int s = 0; s < samples; ++s) {
      const int size = inst::uniform(rng, 0, cap);
      inst::Labels labels(n, rng);
      const auto v0 = labels.take(size);
      const auto sub = remove_vertices(d, v0);
      const ExpansionParams q{p.nu / 2, 2 * p.tau, p.gamma};
      ++checks;
      nonempty += size > 0;
      nonvacuous += size > 0 && !expansion_range(sub.graph.order(), q.tau).empty();
      passed += certify_outexpander_exact(sub.graph, q).verdict == Verdict::CertifiedExact;
    }
  };
  for (const Certified& c : certified_instances()) check(c.d, c.p, 50);
  // n <= 14 forces floor(nu n / 4) <= 1 and 2 tau >= 1/2 whenever V0 can be
  // nonempty, so a few n = 20 instances add removals with a nonempty range.
  int extra = 0;
  while (extra < 10) {
    const Digraph d = inst::random_digraph(20, 0.9, rng);
    const ExpansionParams p{0.2, 0.2, 0.9};
    if (certify_outexpander_exact(d, p).verdict != Verdict::CertifiedExact) continue;
    ++extra;
    check(d, p, 20);
  }
  return {passed == checks, fmt("%d/%d removals certified; %d with V0 nonempty, %d of those with a nonempty size range",
                                passed, checks, nonempty, nonvacuous)};
}

Outcome out_implies_in() {
  int checks = 0, passed = 0, nonvacuous = 0;
  for (const Certified& c : certified_instances()) {
    const ExpansionParams& p = c.p;
    if (!(2 * p.tau < p.gamma && p.nu * p.nu / 2 < p.tau * p.gamma && p.nu < 0.5)) continue;
    const ExpansionParams q{p.nu * p.nu, 2 * p.tau, p.gamma};
    ++checks;
    nonvacuous += !expansion_range(c.d.order(), q.tau).empty();
    passed += certify_inexpander_exact(c.d, q).verdict == Verdict::CertifiedExact;
  }
  return {checks > 0 && passed == checks,
          fmt("%d/%d inexpander certifications, %d with a nonempty size range", passed, checks, nonvacuous)};
}

Outcome d_cover() {
  const int n = 500, dd = 8;
  const double gamma = 0.4;
  const double formula = d_cover_formula(n, dd, gamma);
  const double indep = std::ceil(24.0 / (gamma * gamma) * (dd * std::log(24.0 * dd / (gamma * gamma)) + 2.0 * std::log(n)));
  const std::size_t want = static_cast<std::size_t>(std::min(indep, static_cast<double>(n / 2)));
  int ok = 0, verified = 0, sized = 0;
  const auto u = all_vertices(n);
  for (std::uint64_t s = 0; s < 100; ++s) {
    const Digraph d = gen_random_digraph(n, 0.5, 5000 + s);
    try {
      const CoverPairSet k = build_d_cover(d, u, dd, gamma, s);
      ++ok;
      verified += verify_d_cover(d, k, u, dd) && is_disjoint_pair_set(d, k);
      sized += k.pairs.size() == want;
    } catch (const Error&) {
    }
  }
  return {ok >= 99 && verified == ok && sized == ok && formula == indep,
          fmt("%d/100 built, %d verified, |K| = %zu in %d (formula %.0f capped at n/2)", ok, verified, want, sized,
              indep)};
}

bool connection_ok(const Digraph& d, const ConnectionRequest& req, const std::vector<Path>& paths) {
  if (paths.size() != req.terminals.size()) return false;
  std::set<Vertex> terms, used, forbidden(req.forbidden.begin(), req.forbidden.end());
  for (const auto& t : req.terminals) terms.insert({t.u, t.v});
  const auto m = oracle::matrix(d);
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const Path& p = paths[i];
    if (!oracle::path_ok(m, p) || static_cast<int>(p.size()) > req.max_order) return false;
    if (p.front() != req.terminals[i].u || p.back() != req.terminals[i].v) return false;
    for (std::size_t j = 1; j + 1 < p.size(); ++j)
      if (terms.count(p[j]) || forbidden.count(p[j])) return false;
    for (Vertex v : p)
      if (!used.insert(v).second) return false;
  }
  return true;
}

Outcome connectors() {
  inst::Rng rng(1006);
  int ok = 0, valid = 0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    const Digraph d = gen_random_digraph(100, 0.5, 6000 + s);
    inst::Labels labels(100, rng);
    ConnectionRequest req;
    for (int i = 0; i < 5; ++i) {
      const Vertex a = labels.take();
      req.terminals.push_back({a, labels.take()});
    }
    req.max_order = 5;
    try {
      const auto paths = connect_disjoint_paths(d, req, s);
      ++ok;
      valid += connection_ok(d, req, paths);
    } catch (const Error&) {
    }
  }
  int positives = 0, agreed = 0, false_success = 0;
  while (positives < 500) {
    const int n = inst::uniform(rng, 4, 9);
    const Digraph d = inst::random_digraph(n, std::uniform_real_distribution<double>(0.5, 0.8)(rng), rng);
    inst::Labels labels(n, rng);
    ConnectionRequest req;
    const int r = n >= 6 ? inst::uniform(rng, 1, 2) : 1;
    for (int i = 0; i < r; ++i) {
      const Vertex a = labels.take();
      req.terminals.push_back({a, labels.take()});
    }
    if (labels.next < labels.pool.size() && inst::uniform(rng, 0, 1)) req.forbidden.push_back(labels.take());
    req.max_order = inst::uniform(rng, 2, 5);
    std::vector<std::pair<int, int>> terms;
    for (const auto& t : req.terminals) terms.emplace_back(t.u, t.v);
    const bool exists = oracle::disjoint_paths_exist(oracle::matrix(d), terms, as_int(req.forbidden), req.max_order);
    std::optional<std::vector<Path>> got;
    try {
      got = connect_disjoint_paths(d, req, static_cast<std::uint64_t>(positives));
    } catch (const Error&) {
    }
    if (!exists) {
      false_success += got.has_value();
      continue;
    }
    ++positives;
    agreed += got && connection_ok(d, req, *got);
  }
  return {ok >= 99 && valid == ok && agreed == 500 && false_success == 0,
          fmt("D(100,0.5): %d/100 routed, %d valid; oracle agreement %d/500, %d spurious successes", ok, valid, agreed,
              false_success)};
}

Outcome absorbers() {
  const double nu = 0.8, tau = 0.8, gamma = 0.5;
  const int dd = 8, n = 400;
  const ExpansionParams p{nu, tau, gamma};
  const double bound = absorber_size_bound(nu, gamma, dd, n);
  int one = 0, two = 0;
  std::size_t largest = 0;
  inst::Rng rng(1007);
  for (std::uint64_t s = 0; s < 50; ++s) {
    const Digraph d = gen_random_digraph(n, 0.6, 7000 + s);
    inst::Labels labels(n, rng);
    const auto f = labels.take(3);
    try {
      const AbsorberTypeI a = build_type1_absorber(d, directed_triangle_pattern(), f, {{100, 100, 100}}, p, dd, s);
      const std::size_t size = absorber_vertices(a).size();
      largest = std::max(largest, size);
      one += validate_absorber(d, a).ok && static_cast<double>(size) <= bound;
    } catch (const Error&) {
    }
    const std::vector<int> orders{200, 200};
    try {
      const AbsorberTypeII a = build_type2_absorber(d, single_arc_pattern(), orders, p, dd, s);
      const std::size_t size = absorber_vertices(a).size();
      largest = std::max(largest, size);
      two += validate_absorber(d, a).ok && static_cast<double>(size) <= bound;
    } catch (const Error&) {
    }
  }
  return {one == 50 && two == 50,
          fmt("Type-I %d/50, Type-II %d/50 valid within the bound; largest |V(A)| = %zu, bound = %.0f", one, two,
              largest, bound)};
}

PipelineConfig desk_config(std::uint64_t seed) {
  PipelineConfig cfg;
  cfg.gamma = 0.5;
  cfg.nu = 0.8;
  cfg.tau = 0.8;
  cfg.d = 8;
  cfg.seed = seed;
  cfg.restart_budget = 3;
  return cfg;
}

Outcome linkage() {
  inst::Rng rng(1008);
  const int n = 300, c0 = c0_threshold(0.8);
  int ok = 0;
  for (std::uint64_t s = 0; s < 50; ++s) {
    const Digraph d = gen_random_digraph(n, 0.7, 8000 + s);
    inst::Labels labels(n, rng);
    const auto f = labels.take(3);
    std::vector<int> ls;
    for (int i = 0; i < 3; ++i) ls.push_back(inst::uniform(rng, c0, 60));
    try {
      const HSubdivision sub = nh_linked_embed(d, directed_triangle_pattern(), f, {ls}, desk_config(s));
      ok += validate_subdivision(d, sub) &&
            oracle::subdivision_ok(oracle::matrix(d), {{0, 1}, {1, 2}, {2, 0}}, f, sub.paths) &&
            path_lengths(sub) == ls && sub.branch == f;
    } catch (const Error&) {
    }
  }
  return {ok >= 48, fmt("%d/50 seeds, lengths in [%d, 60]", ok, c0)};
}

Outcome tiling() {
  std::string detail;
  bool all = true;
  for (int n1 : {150, 200}) {
    int ok = 0;
    for (std::uint64_t s = 0; s < 50; ++s) {
      const Digraph d = gen_random_digraph(400, 0.7, 9000 + s + static_cast<std::uint64_t>(n1));
      const std::vector<int> orders{n1, 400 - n1};
      try {
        const auto subs = perfect_tiling(d, single_arc_pattern(), orders, desk_config(s));
        bool good = validate_tiling(d, subs, orders);
        std::set<Vertex> cover;
        for (const auto& sub : subs) {
          good = good && oracle::subdivision_ok(oracle::matrix(d), {{0, 1}}, sub.branch, sub.paths);
          const auto vs = subdivision_vertices(sub);
          cover.insert(vs.begin(), vs.end());
        }
        ok += good && cover.size() == 400;
      } catch (const Error&) {
      }
    }
    all = all && ok >= 48;
    detail += fmt("%s(%d,%d): %d/50", detail.empty() ? "" : ", ", n1, 400 - n1, ok);
  }
  return {all, detail};
}

Outcome oracle_equivalence() {
  inst::Rng rng(1010);
  int found = 0, accepted = 0, none = 0, contradictions = 0, probes = 0;
  for (int t = 0; t < 300; ++t) {
    const int n = inst::uniform(rng, 3, 9);
    const Digraph d = inst::random_digraph(n, std::uniform_real_distribution<double>(0.5, 0.9)(rng), rng);
    const auto m = oracle::matrix(d);
    inst::Labels labels(n, rng);
    const Vertex a = labels.take(), b = labels.take();
    const std::vector<Vertex> f{a, b};
    const int l = inst::uniform(rng, 1, std::min(6, n - 1));
    const auto w = brute_force_subdivision(d, single_arc_pattern(), f, {{l}});
    if (w) {
      ++found;
      accepted += validate_subdivision(d, *w) && path_lengths(*w) == std::vector<int>{l} && w->branch == f &&
                  oracle::path_of_length_exists(m, a, b, l);
      continue;
    }
    ++none;
    // Any constructive witness of a path a -> b with exactly l arcs
    // contradicts the oracle.
    auto witness = [&](const Path& p) {
      return oracle::path_ok(m, p) && p.front() == a && p.back() == b && static_cast<int>(p.size()) == l + 1;
    };
    ++probes;
    try {
      const auto ps = connect_disjoint_paths(d, {{{a, b}}, {}, l + 1}, static_cast<std::uint64_t>(t));
      contradictions += witness(ps[0]);
    } catch (const Error&) {
    }
    if (l + 1 <= n) {
      ++probes;
      try {
        const Cycle c = cycle_through_vertex(d, a, l + 1, static_cast<std::uint64_t>(t));
        contradictions += c.vertices.back() == b && witness(c.vertices);
      } catch (const Error&) {
      }
    }
    PipelineConfig cfg = desk_config(static_cast<std::uint64_t>(t));
    cfg.d = 1;
    cfg.c0 = 1;
    cfg.restart_budget = 1;
    ++probes;
    try {
      const HSubdivision s = nh_linked_embed(d, single_arc_pattern(), f, {{l}}, cfg);
      contradictions += witness(s.paths[0]);
    } catch (const Error&) {
    }
  }
  return {accepted == found && contradictions == 0,
          fmt("%d witnesses, %d accepted; %d none-cases, %d constructive probes, %d contradictions", found, accepted,
              none, probes, contradictions)};
}

Outcome degree_checkers() {
  bool base = true;
  for (int n = 3; n <= 12; ++n) base = base && nash_williams(complete_digraph(n)).satisfied;
  for (int n = 4; n <= 12; ++n) base = base && !nash_williams(directed_cycle(n)).satisfied;
  inst::Rng rng(1011);
  int violations = 0, oriented_trials = 0;
  const int trials = 10000;
  for (int t = 0; t < trials; ++t) {
    const int n = inst::uniform(rng, 3, 14);
    const Digraph d = inst::random_digraph(n, std::uniform_real_distribution<double>(0.3, 0.9)(rng), rng);
    const Vertex u = inst::uniform(rng, 0, n - 1);
    Vertex v = inst::uniform(rng, 0, n - 2);
    if (v >= u) ++v;
    std::vector<Arc> arcs = d.arcs();
    arcs.push_back({u, v});
    const Digraph e = build_digraph(n, arcs);
    const double g = std::uniform_real_distribution<double>(0.01, 0.3)(rng);
    violations += nash_williams(d).satisfied && !nash_williams(e).satisfied;
    violations += asymptotic_nash_williams(d, g).satisfied && !asymptotic_nash_williams(e, g).satisfied;
    violations += posa_type(d, g).satisfied && !posa_type(e, g).satisfied;

    // Oriented graphs: random orientation of a random graph, plus an arc
    // between a non-adjacent pair.
    std::vector<Arc> oriented;
    std::vector<std::pair<Vertex, Vertex>> gaps;
    const double keep = std::uniform_real_distribution<double>(0.6, 0.95)(rng);
    for (Vertex x = 0; x < n; ++x)
      for (Vertex y = x + 1; y < n; ++y) {
        if (std::bernoulli_distribution(keep)(rng))
          oriented.push_back(inst::uniform(rng, 0, 1) ? Arc{x, y} : Arc{y, x});
        else
          gaps.emplace_back(x, y);
      }
    if (gaps.empty()) continue;
    ++oriented_trials;
    const Digraph o = build_digraph(n, oriented);
    const auto [x, y] = gaps[static_cast<std::size_t>(inst::uniform(rng, 0, static_cast<int>(gaps.size()) - 1))];
    oriented.push_back(inst::uniform(rng, 0, 1) ? Arc{x, y} : Arc{y, x});
    const Digraph o2 = build_digraph(n, oriented);
    const double eps = std::uniform_real_distribution<double>(0.0, 0.1)(rng);
    const OrientedReport r1 = oriented_semidegree(o, eps), r2 = oriented_semidegree(o2, eps);
    violations += (r1.semidegree_ok && !r2.semidegree_ok) + (r1.degree_sum_ok && !r2.degree_sum_ok);
  }
  return {base && violations == 0,
          fmt("K_n/C_n sweep %s; %d monotonicity trials (%d oriented), %d violations", base ? "ok" : "WRONG", trials,
              oriented_trials, violations)};
}

}  // namespace

int main() {
  run(1, "ladder-swap correctness", ladder_swap);
  run(2, "exact expander certification soundness", exact_certification);
  run(3, "vertex-removal resilience", resilience);
  run(4, "outexpander implies inexpander", out_implies_in);
  run(5, "d-cover construction", d_cover);
  run(6, "disjoint connectors", connectors);
  run(7, "absorber validity and size", absorbers);
  run(8, "end-to-end linkage with prescribed lengths", linkage);
  run(9, "end-to-end perfect tiling", tiling);
  run(10, "oracle equivalence at tiny scale", oracle_equivalence);
  run(11, "degree-checker cross-validation", degree_checkers);
  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
