#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "dilink/cover_connect.hpp"
#include "dilink/error.hpp"
#include "dilink/generators.hpp"
#include "support/instances.hpp"
#include "support/oracles.hpp"

using namespace dilink;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::BadParameter;
}

std::vector<Vertex> range(int lo, int hi) {
  std::vector<Vertex> v;
  for (int i = lo; i < hi; ++i) v.push_back(i);
  return v;
}

// Coverage counted straight from the definition.
bool is_d_cover(const oracle::Matrix& m, const CoverPairSet& k, const std::vector<Vertex>& u, int d) {
  for (Vertex x : u)
    for (Vertex y : u) {
      if (x == y) continue;
      int c = 0;
      for (const auto& p : k.pairs) {
        const std::set<Vertex> four{p.u, p.v, x, y};
        if (four.size() == 4 && m.arc(p.u, x) && m.arc(y, p.v)) ++c;
      }
      if (c < d) return false;
    }
  return true;
}

void expect_connection(const Digraph& d, const ConnectionRequest& req, const std::vector<Path>& paths) {
  ASSERT_EQ(paths.size(), req.terminals.size());
  std::set<Vertex> terminals, forbidden(req.forbidden.begin(), req.forbidden.end()), used;
  for (const auto& t : req.terminals) terminals.insert({t.u, t.v});
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const Path& p = paths[i];
    EXPECT_TRUE(validate_path(d, p));
    EXPECT_LE(static_cast<int>(p.size()), req.max_order);
    EXPECT_EQ(p.front(), req.terminals[i].u);
    EXPECT_EQ(p.back(), req.terminals[i].v);
    for (std::size_t j = 1; j + 1 < p.size(); ++j) {
      EXPECT_FALSE(terminals.count(p[j]));
      EXPECT_FALSE(forbidden.count(p[j]));
    }
    for (Vertex v : p) EXPECT_TRUE(used.insert(v).second);
  }
}

}  // namespace

TEST(Covers, Examples) {
  const std::vector<Arc> a{{0, 2}, {3, 1}};
  EXPECT_TRUE(covers(build_digraph(4, a), {0, 1}, {2, 3}));
  const std::vector<Arc> b{{2, 0}, {3, 1}};
  EXPECT_FALSE(covers(build_digraph(4, b), {0, 1}, {2, 3}));
  EXPECT_FALSE(covers(complete_digraph(4), {0, 1}, {1, 0}));
}

TEST(VerifyDCover, Examples) {
  const Digraph k4 = complete_digraph(4);
  const CoverPairSet k{{{0, 1}}};
  const std::vector<Vertex> u{2, 3};
  EXPECT_TRUE(verify_d_cover(k4, k, u, 1));
  EXPECT_FALSE(verify_d_cover(k4, k, u, 2));
  const std::vector<Vertex> u0{0, 2, 3};
  EXPECT_FALSE(verify_d_cover(k4, k, u0, 1));
  EXPECT_EQ(cover_count(k4, k, {2, 3}), 1);
  EXPECT_EQ(cover_count(k4, k, {0, 3}), 0);
}

TEST(DCoverFormula, K200Value) {
  const double want = std::ceil(96.0 * (8.0 * std::log(768.0) + 2.0 * std::log(200.0)));
  EXPECT_EQ(d_cover_formula(200, 8, 0.5), want);
  EXPECT_EQ(want, 6120.0);
}

TEST(BuildDCover, CompleteK200) {
  const Digraph k200 = complete_digraph(200);
  const auto u = range(0, 200);
  const CoverPairSet k = build_d_cover(k200, u, 8, 0.5, 1);
  EXPECT_EQ(k.pairs.size(), 100u);  // formula value capped at n/2
  EXPECT_TRUE(is_disjoint_pair_set(k200, k));
  EXPECT_TRUE(verify_d_cover(k200, k, u, 8));
}

TEST(BuildDCover, CycleFails) {
  const auto u = range(0, 200);
  EXPECT_EQ(code_of([&] { build_d_cover(directed_cycle(200), u, 8, 0.005, 1); }),
            ErrorCode::CoverConstructionFailed);
}

TEST(BuildDCover, K6SinglePair) {
  const Digraph k6 = complete_digraph(6);
  const std::vector<Vertex> u{0, 1, 2, 3};
  const CoverPairSet k = build_d_cover(k6, u, 1, 0.5, 3, {.size = 1});
  ASSERT_EQ(k.pairs.size(), 1u);
  EXPECT_EQ(std::set<Vertex>({k.pairs[0].u, k.pairs[0].v}), std::set<Vertex>({4, 5}));
  EXPECT_TRUE(verify_d_cover(k6, k, u, 1));
}

TEST(BuildDCover, BadParameters) {
  const auto u = range(0, 10);
  EXPECT_EQ(code_of([&] { build_d_cover(complete_digraph(10), u, 0, 0.5, 1); }), ErrorCode::BadParameter);
  EXPECT_EQ(code_of([&] { build_d_cover(complete_digraph(10), u, 1, 0.0, 1); }), ErrorCode::BadParameter);
}

TEST(CoverProperty, VerifiedAndWithinFormula) {
  inst::Rng rng(51);
  for (int t = 0; t < 40; ++t) {
    const int n = inst::uniform(rng, 60, 120);
    const Digraph d = inst::random_digraph(n, 0.8, rng);
    std::vector<Vertex> u;
    for (Vertex v = 0; v < n; ++v)
      if (inst::uniform(rng, 0, 2) == 0) u.push_back(v);
    const int dd = inst::uniform(rng, 1, 4);
    CoverOptions opts;
    opts.sampling = t % 2 ? PairSampling::Arcs : PairSampling::Uniform;
    try {
      const CoverPairSet k = build_d_cover(d, u, dd, 0.5, static_cast<std::uint64_t>(t), opts);
      EXPECT_TRUE(verify_d_cover(d, k, u, dd));
      EXPECT_TRUE(is_d_cover(oracle::matrix(d), k, u, dd));
      EXPECT_TRUE(is_disjoint_pair_set(d, k));
      EXPECT_LE(static_cast<double>(k.pairs.size()), std::min(d_cover_formula(n, dd, 0.5), n / 2.0));
      if (opts.sampling == PairSampling::Arcs)
        for (const auto& p : k.pairs) EXPECT_TRUE(d.has_arc(p.u, p.v));
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::CoverConstructionFailed);
    }
  }
}

TEST(CoverProperty, VerifyAgreesWithDefinition) {
  inst::Rng rng(52);
  for (int t = 0; t < 300; ++t) {
    const int n = inst::uniform(rng, 5, 14);
    const Digraph d = inst::random_digraph(n, 0.7, rng);
    inst::Labels labels(n, rng);
    CoverPairSet k;
    const int pairs = inst::uniform(rng, 1, n / 2);
    for (int i = 0; i < pairs; ++i) {
      const Vertex a = labels.take();
      k.pairs.push_back({a, labels.take()});
    }
    std::vector<Vertex> u;
    for (Vertex v = 0; v < n; ++v)
      if (inst::uniform(rng, 0, 1)) u.push_back(v);
    const int dd = inst::uniform(rng, 1, 2);
    EXPECT_EQ(verify_d_cover(d, k, u, dd), is_d_cover(oracle::matrix(d), k, u, dd));
  }
}

TEST(Connect, DirectArcs) {
  const ConnectionRequest req{{{0, 1}, {2, 3}}, {}, 2};
  EXPECT_EQ(connect_disjoint_paths(complete_digraph(10), req, 1), (std::vector<Path>{{0, 1}, {2, 3}}));
}

TEST(Connect, NoPathAcrossComponents) {
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < 10; ++u)
    for (Vertex v = 0; v < 10; ++v)
      if (u != v && (u < 5) == (v < 5)) arcs.push_back({u, v});
  const ConnectionRequest req{{{0, 7}}, {}, 6};
  try {
    connect_disjoint_paths(build_digraph(10, arcs), req, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ConnectionFailed);
    EXPECT_EQ(e.index(), std::optional<std::size_t>{0});
  }
}

TEST(Connect, Preconditions) {
  const Digraph k5 = complete_digraph(5);
  EXPECT_EQ(code_of([&] { connect_disjoint_paths(k5, {{{0, 1}, {1, 2}}, {}, 3}, 1); }), ErrorCode::BadParameter);
  EXPECT_EQ(code_of([&] { connect_disjoint_paths(k5, {{{0, 1}}, {}, 1}, 1); }), ErrorCode::BadParameter);
  EXPECT_EQ(code_of([&] { connect_disjoint_paths(k5, {{{0, 1}}, {1}, 3}, 1); }), ErrorCode::BadParameter);
}

TEST(Connect, DenseRandomSucceeds) {
  inst::Rng rng(53);
  int ok = 0;
  for (int seed = 0; seed < 100; ++seed) {
    const Digraph d = gen_random_digraph(100, 0.5, static_cast<std::uint64_t>(seed));
    inst::Labels labels(100, rng);
    ConnectionRequest req;
    for (int i = 0; i < 5; ++i) {
      const Vertex a = labels.take();
      req.terminals.push_back({a, labels.take()});
    }
    req.max_order = 5;
    try {
      expect_connection(d, req, connect_disjoint_paths(d, req, static_cast<std::uint64_t>(seed)));
      ++ok;
    } catch (const Error&) {
    }
  }
  EXPECT_GE(ok, 99);
}

TEST(Connect, AgreesWithExhaustiveOracle) {
  inst::Rng rng(54);
  for (int t = 0; t < 500; ++t) {
    const int n = inst::uniform(rng, 4, 9);
    const Digraph d = inst::random_digraph(n, std::uniform_real_distribution<double>(0.5, 0.8)(rng), rng);
    inst::Labels labels(n, rng);
    ConnectionRequest req;
    const int r = n >= 6 ? inst::uniform(rng, 1, 2) : 1;
    for (int i = 0; i < r; ++i) {
      const Vertex a = labels.take();
      req.terminals.push_back({a, labels.take()});
    }
    if (inst::uniform(rng, 0, 1) && labels.next < labels.pool.size()) req.forbidden.push_back(labels.take());
    req.max_order = inst::uniform(rng, 2, 5);
    std::vector<std::pair<int, int>> terms;
    for (const auto& p : req.terminals) terms.emplace_back(p.u, p.v);
    const bool exists = oracle::disjoint_paths_exist(oracle::matrix(d), terms,
                                                     {req.forbidden.begin(), req.forbidden.end()}, req.max_order);
    try {
      const auto paths = connect_disjoint_paths(d, req, static_cast<std::uint64_t>(t));
      EXPECT_TRUE(exists);
      expect_connection(d, req, paths);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ConnectionFailed);
      EXPECT_FALSE(exists) << "t=" << t;
    }
  }
}

TEST(Ladders, Examples) {
  const Digraph k50 = complete_digraph(50);
  const std::vector<OrderedPair> t{{0, 1}};
  const auto direct = build_disjoint_ladders(k50, t, 0.5, 1);
  ASSERT_EQ(direct.size(), 1u);
  EXPECT_EQ(direct[0], (Ladder{0, {0}, {1}, {}}));

  const auto l = build_disjoint_ladders(k50, t, 0.5, 1, {.k = 1, .prefer_direct_arc = false});
  EXPECT_TRUE(validate_ladder(k50, l[0]));
  EXPECT_LE(ladder_vertices(l[0]).size(), 48u);
  EXPECT_EQ(l[0].start(), 0);
  EXPECT_EQ(l[0].finish(), 1);

  const std::vector<OrderedPair> shared{{0, 1}, {1, 2}};
  EXPECT_EQ(code_of([&] { build_disjoint_ladders(k50, shared, 0.5, 1); }), ErrorCode::BadParameter);
}

TEST(Ladders, Caps) {
  EXPECT_EQ(ladder_size_cap(0.5), 48);
  EXPECT_EQ(alternating_order_cap(0.5), 16);
  EXPECT_EQ(connector_order_cap(0.5), 5);
  EXPECT_EQ(connector_order_cap(0.8), 3);
}

TEST(LadderProperty, ValidDisjointAndBounded) {
  inst::Rng rng(55);
  for (int t = 0; t < 30; ++t) {
    const int n = inst::uniform(rng, 60, 120);
    const Digraph d = inst::random_digraph(n, 0.5, rng);
    inst::Labels labels(n, rng);
    std::vector<OrderedPair> terms;
    const int count = inst::uniform(rng, 1, 4);
    for (int i = 0; i < count; ++i) {
      const Vertex a = labels.take();
      terms.push_back({a, labels.take()});
    }
    const double nu = t % 2 ? 0.5 : 0.4;
    LadderOptions opts;
    opts.k = inst::uniform(rng, 0, 2);
    opts.prefer_direct_arc = t % 3 == 0;
    std::vector<Ladder> ls;
    try {
      ls = build_disjoint_ladders(d, terms, nu, static_cast<std::uint64_t>(t), opts);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::LadderConstructionFailed);
      continue;
    }
    std::set<Vertex> used;
    for (std::size_t i = 0; i < ls.size(); ++i) {
      EXPECT_TRUE(validate_ladder(d, ls[i]));
      EXPECT_EQ(ls[i].start(), terms[i].u);
      EXPECT_EQ(ls[i].finish(), terms[i].v);
      const auto vs = ladder_vertices(ls[i]);
      EXPECT_LE(static_cast<double>(vs.size()), 12.0 / (nu * nu));
      EXPECT_LE(static_cast<double>(4 * ls[i].k + 2), 8.0 / nu);
      for (Vertex v : vs) EXPECT_TRUE(used.insert(v).second);
    }
  }
}
