#include "lawless/sparse.hpp"

#include <algorithm>

#include "lawless/errors.hpp"

namespace lawless::slow {

SparsePair::SparsePair(int N) {
  if (N < 2) throw InvalidArgument("sparse pair needs N >= 2");
  if (N > 40) throw InvalidArgument("sparse pair values overflow beyond N = 40");
  p_ = {0, 0, 1};
  q_ = {0, 0, 2};
  for (int n = 2; n < N; ++n) {
    p_.push_back(p_[n] + q_[n] + 1);
    q_.push_back(p_[n + 1] + q_[n] + 1);
  }
}

namespace {

std::optional<int> index_of(const std::vector<std::int64_t>& v, std::int64_t value) {
  auto it = std::lower_bound(v.begin() + 1, v.end(), value);
  if (it == v.end() || *it != value) return std::nullopt;
  return static_cast<int>(it - v.begin());
}

}  // namespace

std::optional<int> SparsePair::p_index(std::int64_t value) const { return index_of(p_, value); }
std::optional<int> SparsePair::q_index(std::int64_t value) const { return index_of(q_, value); }

std::optional<Quadruple> violates_property_i(const SparsePair& s, bool use_q) {
  const int N = s.size();
  auto r = [&](int n) { return use_q ? s.q(n) : s.p(n); };
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j)
      for (int k = 1; k <= N; ++k)
        for (int l = 1; l <= N; ++l) {
          if (r(j) - r(k) != r(l) - r(i)) continue;
          if ((i == k && j == l) || (j == k && i == l)) continue;
          return Quadruple{i, j, k, l};
        }
  return std::nullopt;
}

std::optional<Quadruple> violates_property_ii(const SparsePair& s) {
  const int N = s.size();
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j)
      for (int k = 1; k <= N; ++k)
        for (int l = 1; l <= N; ++l) {
          if (s.q(j) - s.p(k) != s.q(l) - s.p(i)) continue;
          if (i == k && j == l) continue;
          return Quadruple{i, j, k, l};
        }
  return std::nullopt;
}

}  // namespace lawless::slow
