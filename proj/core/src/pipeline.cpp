#include "dilink/pipeline.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "dilink/error.hpp"
#include "dilink/random.hpp"

namespace dilink {

namespace {

std::size_t at(Vertex v) { return static_cast<std::size_t>(v); }

[[noreturn]] void fail(PipelineStage stage, const std::string& what) { throw PipelineError(stage, what); }

// Segments of the Hamilton cycle of D - V(A), relabelled into D, for each
// tried offset until `absorb` accepts one. Returns absorb's result.
template <typename Absorb>
auto absorb_segments(const Digraph& d, std::span<const Vertex> absorber_vs, std::span<const int> sizes,
                     const PipelineConfig& cfg, std::uint64_t seed, PipelineStage& stage, std::string& why,
                     Absorb&& absorb) -> std::optional<decltype(absorb(std::vector<Path>{}))> {
  stage = PipelineStage::Cycle;
  const auto rest = remove_vertices(d, absorber_vs);
  Cycle c;
  try {
    c = hamilton_cycle(rest.graph, derive_seed(seed, 1), {.exact_cap = cfg.cycle_exact_cap});
  } catch (const Error& e) {
    why = e.what();
    return std::nullopt;
  }
  stage = PipelineStage::Segments;
  Rng rng(derive_seed(seed, 2));
  for (int t = 0; t < std::max(1, cfg.segment_offsets); ++t) {
    std::vector<Path> segs;
    try {
      segs = cut_cycle_segments_at(c, sizes, uniform_index(rng, c.length()));
    } catch (const Error& e) {
      why = e.what();
      return std::nullopt;
    }
    for (Path& p : segs)
      for (Vertex& v : p) v = rest.original[at(v)];
    stage = PipelineStage::Absorption;
    try {
      return absorb(segs);
    } catch (const Error& e) {
      why = e.what();
    }
  }
  return std::nullopt;
}

}  // namespace

ResolvedParams resolve_params(int n, const PipelineConfig& cfg) {
  ResolvedParams r;
  try {
    if (!cfg.nu && !cfg.tau) {
      r.expansion = derive_params_from_degrees(n, cfg.gamma);
    } else {
      r.expansion.gamma = cfg.gamma;
      r.expansion.nu = cfg.nu ? *cfg.nu : *cfg.tau * *cfg.tau;
      r.expansion.tau = cfg.tau ? *cfg.tau : *cfg.nu;
    }
    check_params(r.expansion);
    r.d = cfg.d ? *cfg.d : absorber_params(r.expansion.nu).d;
    r.c0 = cfg.c0 ? *cfg.c0 : c0_threshold(r.expansion.nu);
  } catch (const Error& e) {
    fail(PipelineStage::Precondition, e.what());
  }
  if (r.d < 1) fail(PipelineStage::Precondition, "d must be >= 1");
  return r;
}

HSubdivision nh_linked_embed(const Digraph& d, const PatternDigraph& h, std::span<const Vertex> f,
                             const LengthPrescription& lengths, const PipelineConfig& cfg) {
  const int n = d.order();
  if (f.size() != static_cast<std::size_t>(h.vertex_count()))
    fail(PipelineStage::Precondition, "branch map size does not match pattern");
  if (lengths.lengths.size() != h.arc_count())
    fail(PipelineStage::Precondition, "length prescription size does not match pattern");
  std::vector<char> seen(at(n), 0);
  for (Vertex v : f) {
    if (!d.contains(v)) fail(PipelineStage::Precondition, "branch vertex " + std::to_string(v) + " out of range");
    if (seen[at(v)]) fail(PipelineStage::Precondition, "branch map is not injective");
    seen[at(v)] = 1;
  }
  long long need = 0;
  for (int l : lengths.lengths) need += static_cast<long long>(l) + 1;
  if (need > n)
    fail(PipelineStage::Feasibility, "sum of (l_i + 1) is " + std::to_string(need) + " > n = " + std::to_string(n));
  const ResolvedParams rp = resolve_params(n, cfg);
  const int c0 = rp.c0;
  for (int l : lengths.lengths)
    if (l < c0) fail(PipelineStage::Precondition, "length " + std::to_string(l) + " below C0 = " + std::to_string(c0));

  PipelineStage stage = PipelineStage::Absorber;
  std::string why;
  for (int attempt = 0; attempt < std::max(1, cfg.restart_budget); ++attempt) {
    const std::uint64_t seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(attempt));
    stage = PipelineStage::Absorber;
    AbsorberTypeI a;
    try {
      a = build_type1_absorber(d, h, f, lengths, rp.expansion, rp.d, derive_seed(seed, 0), cfg.absorber);
    } catch (const Error& e) {
      why = e.what();
      continue;
    }
    std::vector<int> sizes;
    for (std::size_t i = 0; i < h.arc_count(); ++i)
      sizes.push_back(lengths.lengths[i] - static_cast<int>(a.host.paths[i].size()) + 1);
    std::vector<std::size_t> arcs(h.arc_count());
    std::iota(arcs.begin(), arcs.end(), 0);
    const auto vs = absorber_vertices(a);
    auto out = absorb_segments(d, vs, sizes, cfg, seed, stage, why, [&](const std::vector<Path>& segs) {
      return absorb_paths(d, a, segs, std::span<const std::size_t>(arcs));
    });
    if (!out) continue;
    stage = PipelineStage::Validation;
    if (!validate_subdivision(d, *out)) {
      why = "output is not a valid H-subdivision";
      continue;
    }
    if (path_lengths(*out) != lengths.lengths) {
      why = "output path lengths differ from the prescription";
      continue;
    }
    if (!std::equal(f.begin(), f.end(), out->branch.begin(), out->branch.end())) {
      why = "output branch map differs from f";
      continue;
    }
    return *out;
  }
  fail(stage, why);
}

std::vector<HSubdivision> perfect_tiling(const Digraph& d, const PatternDigraph& h, std::span<const int> orders,
                                         const PipelineConfig& cfg) {
  const int n = d.order();
  if (orders.empty()) fail(PipelineStage::Precondition, "need at least one order");
  const long long total = std::accumulate(orders.begin(), orders.end(), 0LL);
  if (total != n)
    throw Error(ErrorCode::OrdersDontSumToN,
                "orders sum to " + std::to_string(total) + ", digraph has " + std::to_string(n) + " vertices");
  const ResolvedParams rp = resolve_params(n, cfg);
  const int c0 = rp.c0;
  for (int o : orders)
    if (o < c0) fail(PipelineStage::Precondition, "order " + std::to_string(o) + " below C0 = " + std::to_string(c0));
  if (orders.size() > static_cast<std::size_t>(rp.d))
    fail(PipelineStage::Precondition, "k = " + std::to_string(orders.size()) + " exceeds d = " + std::to_string(rp.d));

  PipelineStage stage = PipelineStage::Absorber;
  std::string why;
  for (int attempt = 0; attempt < std::max(1, cfg.restart_budget); ++attempt) {
    const std::uint64_t seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(attempt));
    stage = PipelineStage::Absorber;
    AbsorberTypeII a;
    try {
      a = build_type2_absorber(d, h, orders, rp.expansion, rp.d, derive_seed(seed, 0), cfg.absorber);
    } catch (const Error& e) {
      why = e.what();
      continue;
    }
    std::vector<int> sizes;
    for (std::size_t i = 0; i < orders.size(); ++i)
      sizes.push_back(orders[i] - static_cast<int>(subdivision_order(a.hosts[i])));
    const auto vs = absorber_vertices(a);
    auto out = absorb_segments(d, vs, sizes, cfg, seed, stage, why,
                               [&](const std::vector<Path>& segs) { return absorb_paths(d, a, segs); });
    if (!out) continue;
    stage = PipelineStage::Validation;
    if (!validate_tiling(d, *out, orders, OrderMatching::Strict)) {
      why = "output is not a perfect tiling with the prescribed orders";
      continue;
    }
    return *out;
  }
  fail(stage, why);
}

}  // namespace dilink
