#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dilink/absorber.hpp"
#include "dilink/cover_connect.hpp"
#include "dilink/degree_conditions.hpp"
#include "dilink/error.hpp"
#include "dilink/expansion.hpp"
#include "dilink/generators.hpp"
#include "dilink/io.hpp"
#include "dilink/pipeline.hpp"
#include "dilink/random.hpp"
#include "dilink/serialize.hpp"

using namespace dilink;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kConstruction = 3;

Digraph load_graph(const std::string& path) {
  if (path == "-") return read_edge_list(std::cin);
  return read_edge_list_file(path);
}

std::string report_line(const ConditionReport& r) {
  if (r.satisfied) return "satisfied";
  std::string s = "violated";
  if (r.failing_index) s += " at i=" + std::to_string(*r.failing_index);
  if (r.failing_clause) s += " clause " + std::string(to_string(*r.failing_clause));
  return s;
}

std::string vertex_list(const std::vector<Vertex>& vs) {
  std::string s = "[";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i]);
  return s + "]";
}

// "1,2,3;4,5" -> {{1,2,3},{4,5}}
std::vector<Path> parse_paths(const std::string& text) {
  std::vector<Path> out;
  std::stringstream all(text);
  std::string chunk;
  while (std::getline(all, chunk, ';')) {
    Path p;
    std::stringstream one(chunk);
    std::string tok;
    while (std::getline(one, tok, ','))
      if (!tok.empty()) p.push_back(static_cast<Vertex>(std::stol(tok)));
    if (!p.empty()) out.push_back(std::move(p));
  }
  return out;
}

struct PipelineFlags {
  double gamma = 0.5;
  double nu = 0.8;
  double tau = 0.8;
  int d = 8;
  std::optional<int> c0;
  int restarts = 3;
  std::uint64_t seed = 0;

  void add(CLI::App* app) {
    app->add_option("--gamma", gamma, "degree slack gamma")->capture_default_str();
    app->add_option("--nu", nu, "expansion parameter nu")->capture_default_str();
    app->add_option("--tau", tau, "expansion parameter tau")->capture_default_str();
    app->add_option("--d", d, "absorber covering multiplicity")->capture_default_str();
    app->add_option("--c0", c0, "minimum length/order (default: C0(nu))");
    app->add_option("--restarts", restarts, "pipeline restart budget")->capture_default_str();
    app->add_option("--seed", seed, "random seed")->capture_default_str();
  }

  PipelineConfig config() const {
    PipelineConfig cfg;
    cfg.gamma = gamma;
    cfg.nu = nu;
    cfg.tau = tau;
    cfg.d = d;
    cfg.c0 = c0;
    cfg.seed = seed;
    cfg.restart_budget = restarts;
    return cfg;
  }
};

int check_degrees(const std::string& graph, double gamma, double eps) {
  const Digraph d = load_graph(graph);
  bool all = true;
  auto show = [&](const char* name, auto&& run) {
    try {
      const ConditionReport r = run();
      all = all && r.satisfied;
      std::cout << name << ": " << report_line(r) << '\n';
    } catch (const Error& e) {
      all = false;
      std::cout << name << ": not applicable (" << e.what() << ")\n";
    }
  };
  show("nash-williams", [&] { return nash_williams(d); });
  show("asymptotic-nash-williams", [&] { return asymptotic_nash_williams(d, gamma); });
  show("posa-type", [&] { return posa_type(d, gamma); });
  if (is_oriented(d)) {
    const OrientedReport r = oriented_semidegree(d, eps);
    all = all && r.semidegree_ok && r.degree_sum_ok;
    std::cout << "oriented-semidegree: " << (r.semidegree_ok ? "satisfied" : "violated") << '\n';
    std::cout << "oriented-degree-sum: " << (r.degree_sum_ok ? "satisfied" : "violated") << '\n';
  } else {
    std::cout << "oriented: not applicable (digraph has a digon)\n";
  }
  const bool strong = is_strongly_connected(d);
  std::cout << "strongly-connected: " << (strong ? "yes" : "no") << '\n';
  return all && strong ? kOk : kNegative;
}

int certify(const std::string& graph, ExpansionParams p, bool exact, std::int64_t trials, std::uint64_t seed) {
  const Digraph d = load_graph(graph);
  const ExpansionReport r = exact ? certify_outexpander_exact(d, p) : falsify_outexpander_sampled(d, p, trials, seed);
  std::cout << "verdict: " << to_string(r.verdict) << '\n';
  if (!exact) std::cout << "trials: " << r.sampled_trials << '\n';
  if (r.counterexample) std::cout << "counterexample: " << vertex_list(*r.counterexample) << '\n';
  return r.verdict == Verdict::Refuted ? kNegative : kOk;
}

int find_subdivision(const std::string& graph, const std::string& pattern, const std::string& branches,
                     const std::vector<int>& lengths, const PipelineFlags& flags) {
  const Digraph d = load_graph(graph);
  const PatternFile pf = read_pattern_file(pattern);
  std::vector<Vertex> f;
  if (branches == "any") {
    std::vector<Vertex> all(static_cast<std::size_t>(d.order()));
    for (Vertex v = 0; v < d.order(); ++v) all[static_cast<std::size_t>(v)] = v;
    Rng rng(derive_seed(flags.seed, 99));
    shuffle(all, rng);
    if (all.size() < static_cast<std::size_t>(pf.pattern.vertex_count()))
      throw Error(ErrorCode::BadParameter, "digraph smaller than pattern");
    f.assign(all.begin(), all.begin() + pf.pattern.vertex_count());
  } else if (branches == "map") {
    if (!pf.branch) throw Error(ErrorCode::BadParameter, "pattern file has no complete \"map\" block");
    f = *pf.branch;
  } else {
    f = parse_paths(branches).empty() ? std::vector<Vertex>{} : parse_paths(branches).front();
  }
  const HSubdivision sub = nh_linked_embed(d, pf.pattern, f, {lengths}, flags.config());
  std::cout << to_json(sub) << '\n';
  return kOk;
}

int tile(const std::string& graph, const std::string& pattern, const std::vector<int>& orders,
         const PipelineFlags& flags) {
  const Digraph d = load_graph(graph);
  const PatternFile pf = read_pattern_file(pattern);
  const auto subs = perfect_tiling(d, pf.pattern, orders, flags.config());
  std::cout << tiling_to_json(subs) << '\n';
  return kOk;
}

// `count` disjoint paths of order `order` grown by random walks.
std::vector<Path> random_paths(const Digraph& d, int count, int order, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<char> used(static_cast<std::size_t>(d.order()), 0);
  std::vector<Path> out;
  for (int tries = 0; tries < 1000 && static_cast<int>(out.size()) < count; ++tries) {
    Path q{static_cast<Vertex>(uniform_index(rng, static_cast<std::size_t>(d.order())))};
    if (used[static_cast<std::size_t>(q[0])]) continue;
    while (static_cast<int>(q.size()) < order) {
      std::vector<Vertex> next;
      for (Vertex w : d.out(q.back()))
        if (!used[static_cast<std::size_t>(w)] && std::find(q.begin(), q.end(), w) == q.end()) next.push_back(w);
      if (next.empty()) break;
      q.push_back(next[uniform_index(rng, next.size())]);
    }
    if (static_cast<int>(q.size()) < order) continue;
    for (Vertex v : q) used[static_cast<std::size_t>(v)] = 1;
    out.push_back(std::move(q));
  }
  return out;
}

int absorb_demo(int n, double p, const std::string& paths_text, int length, bool json, const PipelineFlags& flags) {
  const Digraph d = gen_random_digraph(n, p, flags.seed);
  std::vector<Path> paths = parse_paths(paths_text);
  if (paths_text.empty()) paths = random_paths(d, 3, 3, derive_seed(flags.seed, 3));
  AbsorberOptions opts;
  for (const Path& q : paths) opts.avoid.insert(opts.avoid.end(), q.begin(), q.end());
  Rng rng(derive_seed(flags.seed, 1));
  std::vector<Vertex> pool;
  for (Vertex v = 0; v < n; ++v)
    if (std::find(opts.avoid.begin(), opts.avoid.end(), v) == opts.avoid.end()) pool.push_back(v);
  shuffle(pool, rng);
  if (pool.size() < 2) throw Error(ErrorCode::BadParameter, "digraph too small");
  const std::vector<Vertex> branch{pool[0], pool[1]};
  const ExpansionParams ep{flags.nu, flags.tau, flags.gamma};
  const AbsorberTypeI a = build_type1_absorber(d, single_arc_pattern(), branch, {{length}}, ep, flags.d,
                                               derive_seed(flags.seed, 2), opts);
  const ValidationResult v = validate_absorber(d, a);
  std::cout << "absorber: " << (v ? "valid" : "invalid (" + v.reason + ")") << ", |K| = " << a.cover.pairs.size()
            << ", |V(A)| = " << absorber_vertices(a).size() << '\n';
  if (json) std::cout << to_json(a) << '\n';
  if (!v) return kConstruction;
  const HSubdivision out = absorb_paths(d, a, paths);
  const bool ok = validate_subdivision(d, out) && out.branch == a.host.branch;
  for (const Path& q : paths) std::cout << "path: " << vertex_list(q) << '\n';
  std::cout << "absorbed " << paths.size() << " path(s): " << (ok ? "valid" : "invalid")
            << ", order " << subdivision_order(a.host) << " -> " << subdivision_order(out) << '\n';
  if (json) std::cout << to_json(out) << '\n';
  return ok ? kOk : kNegative;
}

int build_cover(const std::string& graph, int dval, double gamma, std::uint64_t seed,
                const std::optional<std::size_t>& size, const std::string& sampling) {
  const Digraph d = load_graph(graph);
  std::vector<Vertex> all(static_cast<std::size_t>(d.order()));
  for (Vertex v = 0; v < d.order(); ++v) all[static_cast<std::size_t>(v)] = v;
  CoverOptions opts;
  opts.size = size;
  opts.sampling = sampling == "arcs" ? PairSampling::Arcs : PairSampling::Uniform;
  const double formula = d_cover_formula(d.order(), dval, gamma);
  std::cout << "formula m: " << static_cast<long long>(formula) << " (capped at n/2: "
            << std::min<long long>(static_cast<long long>(formula), d.order() / 2) << ")\n";
  const CoverPairSet k = build_d_cover(d, all, dval, gamma, seed, opts);
  std::cout << "pairs: " << to_json(k) << '\n';
  std::cout << "verified: " << (verify_d_cover(d, k, all, dval) ? "yes" : "no") << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dilink: robust expanders, ladders, absorbers and linked subdivisions in digraphs"};
  app.require_subcommand(1);

  std::string graph;
  double gamma = 0.1, eps = 0.1;
  auto* cd = app.add_subcommand("check-degrees", "Degree-condition reports and strong connectivity");
  cd->add_option("graph", graph, "edge-list file or - for stdin")->required();
  cd->add_option("--gamma", gamma)->capture_default_str();
  cd->add_option("--epsilon", eps)->capture_default_str();

  ExpansionParams ep{0.0, 0.0, 0.5};
  bool exact = false;
  std::int64_t trials = 10000;
  std::uint64_t seed = 0;
  auto* ce = app.add_subcommand("certify-expander", "Certify or falsify robust outexpansion");
  ce->add_option("graph", graph)->required();
  ce->add_option("--nu", ep.nu)->required();
  ce->add_option("--tau", ep.tau)->required();
  ce->add_option("--gamma", ep.gamma)->capture_default_str();
  auto* exact_flag = ce->add_flag("--exact", exact, "exhaustive subset enumeration (n <= 20)");
  ce->add_option("--trials", trials)->capture_default_str()->excludes(exact_flag);
  ce->add_option("--seed", seed)->capture_default_str();

  std::string pattern, branches = "any";
  std::vector<int> lengths, orders;
  PipelineFlags fs_flags, tile_flags, demo_flags;
  auto* fs = app.add_subcommand("find-subdivision", "Embed an H-subdivision with prescribed branch vertices and lengths");
  fs->add_option("graph", graph)->required();
  fs->add_option("--pattern", pattern)->required();
  fs->add_option("--branches", branches, "map | any | v1,v2,...")->capture_default_str();
  fs->add_option("--lengths", lengths)->required()->delimiter(',');
  fs_flags.add(fs);

  auto* tl = app.add_subcommand("tile", "Perfect H-subdivision tiling with prescribed orders");
  tl->add_option("graph", graph)->required();
  tl->add_option("--pattern", pattern)->required();
  tl->add_option("--orders", orders)->required()->delimiter(',');
  tile_flags.add(tl);

  int n = 200, length = 150;
  double p = 0.6;
  std::string paths_text;
  bool json = false;
  auto* ad = app.add_subcommand("absorb-demo", "Build an absorber on D(n, p) and absorb the given paths");
  ad->add_option("--n", n)->capture_default_str();
  ad->add_option("--p", p)->capture_default_str();
  ad->add_option("--paths", paths_text, "paths as \"1,2,3;4,5\" (default: three random paths of order 3)");
  ad->add_option("--length", length, "prescribed length of the host path")->capture_default_str();
  ad->add_flag("--json", json, "print the absorber and result as JSON");
  demo_flags.add(ad);

  int dval = 8;
  std::optional<std::size_t> size;
  std::string sampling = "uniform";
  double cover_gamma = 0.4;
  auto* bc = app.add_subcommand("build-cover", "Build and verify a d-cover of V(D)");
  bc->add_option("graph", graph)->required();
  bc->add_option("--d", dval)->capture_default_str();
  bc->add_option("--gamma", cover_gamma)->capture_default_str();
  bc->add_option("--seed", seed)->capture_default_str();
  bc->add_option("--size", size, "number of pairs (default: capped formula)");
  bc->add_option("--sampling", sampling)->check(CLI::IsMember({"uniform", "arcs"}))->capture_default_str();

  double gp = 0.5;
  int gn = 100;
  auto* gr = app.add_subcommand("gen-random", "Print a random digraph D(n, p) as an edge list");
  gr->add_option("--n", gn)->required();
  gr->add_option("--p", gp)->required();
  gr->add_option("--seed", seed)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*cd) return check_degrees(graph, gamma, eps);
    if (*ce) return certify(graph, ep, exact, trials, seed);
    if (*fs) return find_subdivision(graph, pattern, branches, lengths, fs_flags);
    if (*tl) return tile(graph, pattern, orders, tile_flags);
    if (*ad) return absorb_demo(n, p, paths_text, length, json, demo_flags);
    if (*bc) return build_cover(graph, dval, cover_gamma, seed, size, sampling);
    if (*gr) {
      std::cout << write_edge_list(gen_random_digraph(gn, gp, seed));
      return kOk;
    }
  } catch (const PipelineError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConstruction;
  } catch (const CycleNotFoundError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNegative;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::AbsorberConstructionFailed:
      case ErrorCode::CoverConstructionFailed:
      case ErrorCode::ConnectionFailed:
      case ErrorCode::LadderConstructionFailed:
      case ErrorCode::NoCoveringPair:
        return kConstruction;
      default:
        return kUsage;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
