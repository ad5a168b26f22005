#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace lawless::slow {

/// Minimal solution of p(n+1) = p(n) + q(n) + 1, q(n+1) = p(n+1) + q(n) + 1
/// with p(1) = q(1) = 0, p(2) = 1, q(2) = 2. Indices are 1-based.
class SparsePair {
 public:
  /// Throws InvalidArgument for N < 2 or N beyond the int64 range (N > 40).
  explicit SparsePair(int N);

  int size() const { return static_cast<int>(p_.size()) - 1; }
  std::int64_t p(int n) const { return p_.at(static_cast<std::size_t>(n)); }
  std::int64_t q(int n) const { return q_.at(static_cast<std::size_t>(n)); }

  /// Index n with p(n) = value, if any. Index 1 is reported for value 0.
  std::optional<int> p_index(std::int64_t value) const;
  std::optional<int> q_index(std::int64_t value) const;

 private:
  std::vector<std::int64_t> p_;
  std::vector<std::int64_t> q_;
};

/// Exhaustive scan over index quadruples <= size(). Return the first
/// violating quadruple (i, j, k, l), if any.
struct Quadruple {
  int i, j, k, l;
};
/// r(j) - r(k) = r(l) - r(i) forces (i = k and j = l) or (j = k and i = l),
/// for r = p (use_q false) or r = q.
std::optional<Quadruple> violates_property_i(const SparsePair& s, bool use_q);
/// q(j) - p(k) = q(l) - p(i) forces i = k and j = l.
std::optional<Quadruple> violates_property_ii(const SparsePair& s);

}  // namespace lawless::slow
