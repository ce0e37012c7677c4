#pragma once

#include <optional>
#include <string_view>

#include "dilink/digraph.hpp"

namespace dilink {

// Which inequality of a paired degree condition failed. `OutFirst` is the
// clause led by d_i^+, `InFirst` the one led by d_i^-. The `Middle*` tags
// are the extra n-odd requirement of the Posa-type condition.
enum class Clause { OutFirst, InFirst, MiddleOut, MiddleIn };

std::string_view to_string(Clause c);

struct ConditionReport {
  bool satisfied = true;
  std::optional<int> failing_index;  // 1-based into the sorted sequences
  std::optional<Clause> failing_clause;
};

// For 1 <= i < n/2: (d_i^+ >= i+1 or d_{n-i}^- >= n-i) and
// (d_i^- >= i+1 or d_{n-i}^+ >= n-i). Strong connectivity is not checked.
// Throws TooSmall for n < 3.
ConditionReport nash_williams(const Digraph& d);

// The gamma-slack variant: d_i^+ >= i + ceil(gamma n) or
// d_{n-i-ceil(gamma n)}^- >= n-i (and the mirrored clause). An index below 1
// makes the second alternative unavailable.
ConditionReport asymptotic_nash_williams(const Digraph& d, double gamma);

// d_i^+, d_i^- >= i + gamma n for 1 <= i < (n-1)/2, plus
// d_{ceil(n/2)}^{+,-} >= (1/2 + gamma) n when n is odd.
ConditionReport posa_type(const Digraph& d, double gamma);

struct OrientedReport {
  bool semidegree_ok = false;  // delta^0 >= (3/8 + eps) n
  bool degree_sum_ok = false;  // delta^+ + delta^- + delta >= 3n/2 + eps n
};

// Throws NotOriented if the digraph has a digon.
OrientedReport oriented_semidegree(const Digraph& d, double epsilon);

bool is_oriented(const Digraph& d);

}  // namespace dilink
