#include "lawless/dyadic.hpp"

#include <cmath>
#include <string>

#include "lawless/errors.hpp"

namespace lawless::thompson {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw Error("dyadic numerator overflow");
  return static_cast<std::int64_t>(v);
}

i128 shift_up(std::int64_t num, int k) {
  if (k >= 62) throw Error("dyadic exponent gap too large");
  i128 v = static_cast<i128>(num) << k;
  narrow(v);
  return v;
}

}  // namespace

Dyadic Dyadic::make(std::int64_t num, int exp) {
  if (exp < 0) {
    if (-exp >= 63) throw Error("dyadic overflow");
    return Dyadic(narrow(shift_up(num, -exp)));
  }
  Dyadic d;
  if (num == 0) return d;
  while (exp > 0 && (num & 1) == 0) {
    num /= 2;
    --exp;
  }
  if (exp > kMaxExponent) throw Error("dyadic exponent exceeds cap of " + std::to_string(kMaxExponent));
  d.num_ = num;
  d.exp_ = exp;
  return d;
}

Dyadic Dyadic::parse(std::string_view text) {
  std::string s(text);
  try {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
      std::int64_t n = std::stoll(s.substr(0, slash));
      std::int64_t d = std::stoll(s.substr(slash + 1));
      if (d <= 0 || (d & (d - 1)) != 0) throw InvalidArgument("denominator is not a power of two: " + s);
      int e = 0;
      while ((std::int64_t{1} << e) < d) ++e;
      return make(n, e);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
      bool neg = !s.empty() && s[0] == '-';
      std::string ip = s.substr(neg ? 1 : 0, dot - (neg ? 1 : 0));
      std::string fp = s.substr(dot + 1);
      Dyadic r(ip.empty() ? 0 : std::stoll(ip));
      // Each decimal digit contributes digit / 10^k; accept only if the sum is dyadic.
      std::int64_t frac = fp.empty() ? 0 : std::stoll(fp);
      std::int64_t den = 1;
      for (std::size_t i = 0; i < fp.size(); ++i) den *= 10;
      // frac/den = frac / (2^k 5^k); dyadic iff 5^k divides frac.
      std::int64_t five = 1;
      for (std::size_t i = 0; i < fp.size(); ++i) five *= 5;
      if (frac % five != 0) throw InvalidArgument("decimal is not dyadic: " + s);
      r = r + make(frac / five, static_cast<int>(fp.size()));
      return neg ? -r : r;
    }
    return Dyadic(std::stoll(s));
  } catch (const std::logic_error&) {
    throw InvalidArgument("malformed dyadic: " + s);
  }
}

std::int64_t Dyadic::floor() const {
  if (exp_ == 0) return num_;
  if (exp_ >= 63) return num_ < 0 ? -1 : 0;
  std::int64_t q = num_ >> exp_;  // arithmetic shift floors
  return q;
}

double Dyadic::to_double() const { return std::ldexp(static_cast<double>(num_), -exp_); }

std::string Dyadic::str() const {
  if (exp_ == 0) return std::to_string(num_);
  if (exp_ < 63) return std::to_string(num_) + "/" + std::to_string(std::int64_t{1} << exp_);
  return std::to_string(num_) + "/2^" + std::to_string(exp_);
}

Dyadic Dyadic::scaled(int k) const { return make(num_, exp_ - k); }

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  int e = std::max(a.exp_, b.exp_);
  i128 x = shift_up(a.num_, e - a.exp_);
  i128 y = shift_up(b.num_, e - b.exp_);
  return Dyadic::make(narrow(x + y), e);
}

Dyadic operator-(const Dyadic& a) { return Dyadic::make(narrow(-static_cast<i128>(a.num_)), a.exp_); }

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  return Dyadic::make(narrow(static_cast<i128>(a.num_) * b.num_), a.exp_ + b.exp_);
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  int e = std::max(a.exp_, b.exp_);
  if (e - a.exp_ >= 62 || e - b.exp_ >= 62) {
    // Compare integer parts first; they differ unless both are tiny.
    if (a.floor() != b.floor()) return a.floor() <=> b.floor();
    return (a - b).num_ <=> 0;
  }
  i128 x = static_cast<i128>(a.num_) << (e - a.exp_);
  i128 y = static_cast<i128>(b.num_) << (e - b.exp_);
  return x <=> y;
}

}  // namespace lawless::thompson
