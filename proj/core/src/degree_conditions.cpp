#include "dilink/degree_conditions.hpp"

#include <algorithm>
#include <string>

#include "dilink/error.hpp"
#include "dilink/thresholds.hpp"

namespace dilink {

std::string_view to_string(Clause c) {
  switch (c) {
    case Clause::OutFirst: return "(i)";
    case Clause::InFirst: return "(ii)";
    case Clause::MiddleOut: return "middle-out";
    case Clause::MiddleIn: return "middle-in";
  }
  return "?";
}

namespace {

void require_fraction(double x, const char* name) {
  if (!(x > 0.0 && x < 1.0)) throw Error(ErrorCode::BadParameter, std::string(name) + " must lie in (0,1)");
}

// 1-based access into a sorted degree sequence.
int at(const std::vector<int>& seq, long long i) { return seq[static_cast<std::size_t>(i - 1)]; }

ConditionReport fail(int i, Clause c) { return {false, i, c}; }

// Shared body of the two Nash-Williams variants: for each i in [1, ceil(n/2)-1]
// require d_i^a >= i + slack or d_{n-i-shift}^b >= n-i.
ConditionReport paired_condition(const Digraph& d, long long slack, long long shift) {
  const DegreeProfile p = degree_profile(d);
  const long long n = d.order();
  const long long last = (n + 1) / 2 - 1;
  auto clause = [&](const std::vector<int>& lead, const std::vector<int>& partner, long long i) {
    if (at(lead, i) >= i + slack) return true;
    const long long j = n - i - shift;
    return j >= 1 && j <= n && at(partner, j) >= n - i;
  };
  for (long long i = 1; i <= last; ++i) {
    if (!clause(p.out_sorted, p.in_sorted, i)) return fail(static_cast<int>(i), Clause::OutFirst);
    if (!clause(p.in_sorted, p.out_sorted, i)) return fail(static_cast<int>(i), Clause::InFirst);
  }
  return {};
}

}  // namespace

ConditionReport nash_williams(const Digraph& d) {
  if (d.order() < 3) throw Error(ErrorCode::TooSmall, "Nash-Williams condition needs n >= 3");
  return paired_condition(d, 1, 0);
}

ConditionReport asymptotic_nash_williams(const Digraph& d, double gamma) {
  require_fraction(gamma, "gamma");
  if (d.order() < 1) throw Error(ErrorCode::TooSmall, "empty digraph");
  const long long slack = ceil_threshold(gamma * d.order());
  return paired_condition(d, slack, slack);
}

ConditionReport posa_type(const Digraph& d, double gamma) {
  require_fraction(gamma, "gamma");
  if (d.order() < 1) throw Error(ErrorCode::TooSmall, "empty digraph");
  const DegreeProfile p = degree_profile(d);
  const long long n = d.order();
  const long long slack = ceil_threshold(gamma * static_cast<double>(n));
  for (long long i = 1; 2 * i < n - 1; ++i) {
    if (at(p.out_sorted, i) < i + slack) return fail(static_cast<int>(i), Clause::OutFirst);
    if (at(p.in_sorted, i) < i + slack) return fail(static_cast<int>(i), Clause::InFirst);
  }
  if (n % 2 == 1) {
    const long long mid = (n + 1) / 2;
    const long long need = ceil_threshold((0.5 + gamma) * static_cast<double>(n));
    if (at(p.out_sorted, mid) < need) return fail(static_cast<int>(mid), Clause::MiddleOut);
    if (at(p.in_sorted, mid) < need) return fail(static_cast<int>(mid), Clause::MiddleIn);
  }
  return {};
}

bool is_oriented(const Digraph& d) {
  for (Vertex u = 0; u < d.order(); ++u)
    for (Vertex v : d.out(u))
      if (d.has_arc(v, u)) return false;
  return true;
}

OrientedReport oriented_semidegree(const Digraph& d, double epsilon) {
  require_fraction(epsilon, "epsilon");
  if (!is_oriented(d)) throw Error(ErrorCode::NotOriented, "digraph contains a digon");
  const DegreeProfile p = degree_profile(d);
  const double n = d.order();
  OrientedReport r;
  r.semidegree_ok = p.delta_zero >= ceil_threshold((3.0 / 8.0 + epsilon) * n);
  r.degree_sum_ok = p.delta_plus + p.delta_minus + p.delta_min_total >= ceil_threshold(1.5 * n + epsilon * n);
  return r;
}

}  // namespace dilink
