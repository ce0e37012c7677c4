#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "dilink/digraph.hpp"

namespace dilink {

struct ExpansionParams {
  double nu = 0.0;
  double tau = 0.0;
  double gamma = 0.0;
};

// Throws BadParameter unless 0 < nu <= tau < 1 and gamma in (0,1).
void check_params(const ExpansionParams& p);

enum class Verdict { CertifiedExact, NoCounterexampleFound, Refuted };

std::string_view to_string(Verdict v);

struct ExpansionReport {
  Verdict verdict = Verdict::CertifiedExact;
  std::optional<std::vector<Vertex>> counterexample;  // sorted
  std::int64_t sampled_trials = 0;
};

// { x : |N^-(x) ∩ S| >= ceil(nu n) }, sorted.
std::vector<Vertex> robust_out_neighbourhood(const Digraph& d, std::span<const Vertex> s, double nu);
// { x : |N^+(x) ∩ S| >= ceil(nu n) }, sorted.
std::vector<Vertex> robust_in_neighbourhood(const Digraph& d, std::span<const Vertex> s, double nu);

// Integer bounds of the quantified range tau n < |S| < (1 - tau) n.
struct SizeRange {
  long long lo = 0;  // smallest admissible |S|
  long long hi = -1;  // largest admissible |S|
  bool empty() const { return lo > hi; }
};
SizeRange expansion_range(int n, double tau);

// True iff S is in range and |RN^+_nu(S)| < |S| + nu n.
bool violates_outexpansion(const Digraph& d, std::span<const Vertex> s, const ExpansionParams& p);

inline constexpr int kDefaultExactCap = 20;

// Full subset enumeration. On failure the counterexample has minimum size
// and is lexicographically first among those. Throws TooLargeForExact.
ExpansionReport certify_outexpander_exact(const Digraph& d, const ExpansionParams& p, int cap = kDefaultExactCap);
// Same check on the reversed digraph.
ExpansionReport certify_inexpander_exact(const Digraph& d, const ExpansionParams& p, int cap = kDefaultExactCap);

// Randomised counterexample search mixing uniform subsets, out-BFS balls
// and greedy low-expansion growth. Deterministic given (seed, trials).
ExpansionReport falsify_outexpander_sampled(const Digraph& d, const ExpansionParams& p, std::int64_t trials,
                                            std::uint64_t seed);

// tau = gamma/16, nu = tau^2.
ExpansionParams derive_params_from_degrees(int n, double gamma);

}  // namespace dilink
