#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace lawless::thompson {

/// Exact dyadic rational num / 2^exp with exp >= 0, kept canonical (num odd
/// or exp == 0). Arithmetic that would overflow 64-bit numerators or exceed
/// kMaxExponent throws Error.
class Dyadic {
 public:
  static constexpr int kMaxExponent = 64;

  constexpr Dyadic() = default;
  constexpr Dyadic(std::int64_t integer) : num_(integer) {}  // NOLINT(implicit)
  /// num / 2^exp, canonicalized.
  static Dyadic make(std::int64_t num, int exp);
  /// Parses "n", "n/d" with d a power of two, or a finite binary-exact
  /// decimal such as "0.375".
  static Dyadic parse(std::string_view text);

  std::int64_t numerator() const { return num_; }
  int exponent() const { return exp_; }
  bool is_integer() const { return exp_ == 0; }
  std::int64_t floor() const;
  double to_double() const;
  std::string str() const;

  /// this * 2^k for any integer k.
  Dyadic scaled(int k) const;

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
  friend bool operator==(const Dyadic& a, const Dyadic& b) = default;
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

 private:
  std::int64_t num_ = 0;
  int exp_ = 0;
};

}  // namespace lawless::thompson
