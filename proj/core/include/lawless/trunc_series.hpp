#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace lawless::golod {

/// Noncommutative power series over F_p in u_1..u_k, truncated above a
/// degree cap. A monomial is a string of variable indices 0..k-1.
class TruncSeries {
 public:
  using Monomial = std::basic_string<std::uint8_t>;

  TruncSeries(int p, int k, int cap);

  static TruncSeries constant(int p, int k, int cap, std::int64_t c);
  /// 1 + u_i (i is 1-based).
  static TruncSeries generator(int p, int k, int cap, int i);
  /// (1 + u_i)^-1 = sum_{j <= cap} (-u_i)^j.
  static TruncSeries generator_inverse(int p, int k, int cap, int i);

  int prime() const { return p_; }
  int variables() const { return k_; }
  int cap() const { return cap_; }

  std::uint32_t coefficient(const Monomial& m) const;
  void set(const Monomial& m, std::int64_t c);
  const std::map<Monomial, std::uint32_t>& terms() const { return terms_; }

  /// Least degree of a nonzero term, or cap+1 for the zero series.
  int min_degree() const;
  bool is_zero() const { return terms_.empty(); }

  TruncSeries operator+(const TruncSeries& o) const;
  TruncSeries operator-(const TruncSeries& o) const;
  TruncSeries operator*(const TruncSeries& o) const;
  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

  std::string str() const;

 private:
  void check_compatible(const TruncSeries& o) const;

  int p_;
  int k_;
  int cap_;
  // No zero coefficients are stored.
  std::map<Monomial, std::uint32_t> terms_;
};

}  // namespace lawless::golod
