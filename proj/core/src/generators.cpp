#include "dilink/generators.hpp"

#include <random>
#include <vector>

#include "dilink/error.hpp"
#include "dilink/random.hpp"

namespace dilink {

Digraph gen_random_digraph(int n, double p, std::uint64_t seed) {
  if (n < 0) throw Error(ErrorCode::BadParameter, "n must be >= 0");
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::BadParameter, "p must lie in [0,1]");
  Rng rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && coin(rng)) arcs.push_back({u, v});
  return build_digraph(n, arcs);
}

namespace {

std::size_t reached_from_zero(const Digraph& d, bool forward) {
  std::vector<char> seen(static_cast<std::size_t>(d.order()), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : forward ? d.out(u) : d.in(u))
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count;
}

}  // namespace

bool is_strongly_connected(const Digraph& d) {
  if (d.order() == 0) return true;
  const auto n = static_cast<std::size_t>(d.order());
  return reached_from_zero(d, true) == n && reached_from_zero(d, false) == n;
}

}  // namespace dilink
