#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lawless/dyadic.hpp"
#include "lawless/pl_map.hpp"

namespace lawless::thompson {

/// The 8-periodic map T, evaluated exactly at any dyadic point. T preserves
/// every interval [8n, 8n+8].
Dyadic T_value(const Dyadic& x);

/// T on [8 lo, 8 hi], the identity elsewhere. T itself has infinitely many
/// breakpoints, so it is only available through such truncations.
PLMap make_T(std::int64_t lo, std::int64_t hi);

/// U_n = T^2 on [0, 8(n+1)], the identity elsewhere.
PLMap make_U(int n);
/// V_n = A^2 U_n A^-2, i.e. x -> U_n(x - 2) + 2.
PLMap make_V(int n);

/// Exact check of U_{n+1} = A^8 U_n A^-8 U_0.
bool check_recursion(int n);

struct BrinSquierReport {
  int n = 0;
  std::size_t words = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// w(U_n, V_n) != id for every nontrivial reduced w in F_2 with |w| <= n.
BrinSquierReport brin_squier_check(int n);

struct LengthProbe {
  /// |U_0|_S if the budgeted BFS reached it.
  std::optional<int> length;
  int radius_searched = 0;
  std::size_t elements = 0;
};

/// Budgeted BFS in the Cayley graph of F over {A, B} looking for U_0.
LengthProbe probe_u0_length(int max_radius, std::size_t max_elements);

}  // namespace lawless::thompson
