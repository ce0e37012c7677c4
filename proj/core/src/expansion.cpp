#include "dilink/expansion.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "dilink/error.hpp"
#include "dilink/random.hpp"
#include "dilink/thresholds.hpp"

namespace dilink {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::CertifiedExact: return "CertifiedExact";
    case Verdict::NoCounterexampleFound: return "NoCounterexampleFound";
    case Verdict::Refuted: return "Refuted";
  }
  return "?";
}

namespace {

void check_nu_tau(const ExpansionParams& p) {
  if (!(p.nu > 0.0 && p.nu <= p.tau && p.tau < 1.0))
    throw Error(ErrorCode::BadParameter, "need 0 < nu <= tau < 1");
}

void check_nu(double nu) {
  if (!(nu > 0.0 && nu <= 1.0)) throw Error(ErrorCode::BadParameter, "nu must lie in (0,1]");
}

std::vector<Vertex> robust_neighbourhood(const Digraph& d, std::span<const Vertex> s, double nu, bool out_side) {
  check_nu(nu);
  const long long need = ceil_threshold(nu * d.order());
  std::vector<char> member(static_cast<std::size_t>(d.order()), 0);
  for (Vertex v : s) {
    if (!d.contains(v)) throw Error(ErrorCode::LabelOutOfRange, "vertex " + std::to_string(v));
    member[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<Vertex> result;
  for (Vertex x = 0; x < d.order(); ++x) {
    long long c = 0;
    for (Vertex y : out_side ? d.in(x) : d.out(x)) c += member[static_cast<std::size_t>(y)];
    if (c >= need) result.push_back(x);
  }
  return result;
}

std::vector<Vertex> mask_to_set(std::uint32_t mask) {
  std::vector<Vertex> s;
  for (Vertex v = 0; mask != 0; ++v, mask >>= 1)
    if (mask & 1u) s.push_back(v);
  return s;
}

// Next integer with the same popcount (Gosper).
std::uint64_t next_same_popcount(std::uint64_t x) {
  const std::uint64_t c = x & (~x + 1);
  const std::uint64_t r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

}  // namespace

void check_params(const ExpansionParams& p) {
  check_nu_tau(p);
  if (!(p.gamma > 0.0 && p.gamma < 1.0)) throw Error(ErrorCode::BadParameter, "gamma must lie in (0,1)");
}

std::vector<Vertex> robust_out_neighbourhood(const Digraph& d, std::span<const Vertex> s, double nu) {
  return robust_neighbourhood(d, s, nu, true);
}

std::vector<Vertex> robust_in_neighbourhood(const Digraph& d, std::span<const Vertex> s, double nu) {
  return robust_neighbourhood(d, s, nu, false);
}

SizeRange expansion_range(int n, double tau) {
  return {strictly_above(tau * n), strictly_below((1.0 - tau) * n)};
}

bool violates_outexpansion(const Digraph& d, std::span<const Vertex> s, const ExpansionParams& p) {
  const SizeRange range = expansion_range(d.order(), p.tau);
  const auto size = static_cast<long long>(s.size());
  if (size < range.lo || size > range.hi) return false;
  const auto rn = robust_out_neighbourhood(d, s, p.nu);
  return static_cast<long long>(rn.size()) < size + ceil_threshold(p.nu * d.order());
}

ExpansionReport certify_outexpander_exact(const Digraph& d, const ExpansionParams& p, int cap) {
  check_nu_tau(p);
  const int n = d.order();
  if (n > cap || n > 30)
    throw Error(ErrorCode::TooLargeForExact, "n=" + std::to_string(n) + " exceeds exact cap " + std::to_string(cap));
  const SizeRange range = expansion_range(n, p.tau);
  const long long need = ceil_threshold(p.nu * n);
  std::vector<std::uint32_t> in_mask(static_cast<std::size_t>(n), 0);
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y : d.in(x)) in_mask[static_cast<std::size_t>(x)] |= std::uint32_t{1} << y;

  for (long long size = std::max<long long>(range.lo, 0); size <= range.hi && size <= n; ++size) {
    if (size == 0) continue;  // the empty set never lies strictly above tau n >= 0
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t s = (std::uint64_t{1} << size) - 1; s < limit; s = next_same_popcount(s)) {
      const auto mask = static_cast<std::uint32_t>(s);
      long long rn = 0;
      for (int x = 0; x < n; ++x) rn += std::popcount(in_mask[static_cast<std::size_t>(x)] & mask) >= need;
      if (rn < size + need) return {Verdict::Refuted, mask_to_set(mask), 0};
    }
  }
  return {Verdict::CertifiedExact, std::nullopt, 0};
}

ExpansionReport certify_inexpander_exact(const Digraph& d, const ExpansionParams& p, int cap) {
  return certify_outexpander_exact(d.reversed(), p, cap);
}

ExpansionReport falsify_outexpander_sampled(const Digraph& d, const ExpansionParams& p, std::int64_t trials,
                                            std::uint64_t seed) {
  check_nu_tau(p);
  if (trials < 1) throw Error(ErrorCode::BadParameter, "trials must be >= 1");
  const int n = d.order();
  const SizeRange range = expansion_range(n, p.tau);
  if (range.empty() || range.hi < 1) return {Verdict::CertifiedExact, std::nullopt, 0};
  const long long lo = std::max<long long>(range.lo, 1);
  const long long need = ceil_threshold(p.nu * n);

  std::vector<Vertex> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  std::vector<int> count(static_cast<std::size_t>(n));
  std::vector<char> member(static_cast<std::size_t>(n));

  for (std::int64_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
    const auto size = static_cast<std::size_t>(std::uniform_int_distribution<long long>(lo, range.hi)(rng));
    std::vector<Vertex> s;
    s.reserve(size);
    std::fill(member.begin(), member.end(), 0);
    auto add = [&](Vertex v) {
      member[static_cast<std::size_t>(v)] = 1;
      s.push_back(v);
    };

    switch (t % 3) {
      case 0: {  // uniform subset
        std::vector<Vertex> perm = all;
        for (std::size_t i = 0; i < size; ++i) {
          std::swap(perm[i], perm[i + uniform_index(rng, perm.size() - i)]);
          add(perm[i]);
        }
        break;
      }
      case 1: {  // out-BFS ball from random roots
        std::vector<Vertex> queue;
        while (s.size() < size) {
          if (queue.empty()) {
            Vertex root;
            do root = static_cast<Vertex>(uniform_index(rng, static_cast<std::size_t>(n)));
            while (member[static_cast<std::size_t>(root)]);
            add(root);
            queue.push_back(root);
            continue;
          }
          const Vertex u = queue.front();
          queue.erase(queue.begin());
          std::vector<Vertex> next(d.out(u).begin(), d.out(u).end());
          shuffle(next, rng);
          for (Vertex w : next) {
            if (s.size() >= size) break;
            if (member[static_cast<std::size_t>(w)]) continue;
            add(w);
            queue.push_back(w);
          }
        }
        break;
      }
      default: {  // greedy: grow by the sampled candidate adding fewest robust out-neighbours
        std::fill(count.begin(), count.end(), 0);
        auto insert = [&](Vertex v) {
          add(v);
          for (Vertex y : d.out(v)) ++count[static_cast<std::size_t>(y)];
        };
        insert(static_cast<Vertex>(uniform_index(rng, static_cast<std::size_t>(n))));
        while (s.size() < size) {
          Vertex best = -1;
          long long best_gain = 0;
          for (int c = 0; c < 8; ++c) {
            Vertex w;
            do w = static_cast<Vertex>(uniform_index(rng, static_cast<std::size_t>(n)));
            while (member[static_cast<std::size_t>(w)]);
            long long gain = 0;
            for (Vertex y : d.out(w)) gain += count[static_cast<std::size_t>(y)] + 1 == need;
            if (best < 0 || gain < best_gain) best = w, best_gain = gain;
          }
          insert(best);
        }
        break;
      }
    }

    std::sort(s.begin(), s.end());
    if (violates_outexpansion(d, s, p)) return {Verdict::Refuted, std::move(s), t + 1};
  }
  return {Verdict::NoCounterexampleFound, std::nullopt, trials};
}

ExpansionParams derive_params_from_degrees(int n, double gamma) {
  if (n < 1) throw Error(ErrorCode::BadParameter, "n must be >= 1");
  if (!(gamma > 0.0 && gamma < 1.0)) throw Error(ErrorCode::BadParameter, "gamma must lie in (0,1)");
  const double tau = gamma / 16.0;
  return {tau * tau, tau, gamma};
}

}  // namespace dilink
