#include "lawless/trunc_series.hpp"

#include <sstream>

#include "lawless/errors.hpp"

namespace lawless::golod {

namespace {

std::uint32_t mod(std::int64_t c, int p) {
  std::int64_t r = c % p;
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

TruncSeries::TruncSeries(int p, int k, int cap) : p_(p), k_(k), cap_(cap) {
  if (!is_prime(p)) throw InvalidArgument("series coefficients need a prime p");
  if (k < 1 || k > 255) throw InvalidArgument("variable count out of range");
  if (cap < 1) throw InvalidArgument("degree cap must be positive");
}

TruncSeries TruncSeries::constant(int p, int k, int cap, std::int64_t c) {
  TruncSeries s(p, k, cap);
  s.set({}, c);
  return s;
}

TruncSeries TruncSeries::generator(int p, int k, int cap, int i) {
  if (i < 1 || i > k) throw InvalidArgument("variable index out of range");
  TruncSeries s = constant(p, k, cap, 1);
  s.set(Monomial(1, static_cast<std::uint8_t>(i - 1)), 1);
  return s;
}

TruncSeries TruncSeries::generator_inverse(int p, int k, int cap, int i) {
  if (i < 1 || i > k) throw InvalidArgument("variable index out of range");
  TruncSeries s(p, k, cap);
  for (int j = 0; j <= cap; ++j) {
    s.set(Monomial(j, static_cast<std::uint8_t>(i - 1)), j % 2 == 0 ? 1 : -1);
  }
  return s;
}

std::uint32_t TruncSeries::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void TruncSeries::set(const Monomial& m, std::int64_t c) {
  if (static_cast<int>(m.size()) > cap_) return;
  for (auto v : m) {
    if (v >= k_) throw InvalidArgument("monomial variable out of range");
  }
  std::uint32_t r = mod(c, p_);
  if (r == 0) {
    terms_.erase(m);
  } else {
    terms_[m] = r;
  }
}

int TruncSeries::min_degree() const {
  int best = cap_ + 1;
  for (const auto& [m, c] : terms_) best = std::min(best, static_cast<int>(m.size()));
  return best;
}

void TruncSeries::check_compatible(const TruncSeries& o) const {
  if (p_ != o.p_ || k_ != o.k_ || cap_ != o.cap_) {
    throw InvalidArgument("series with different p, k or cap");
  }
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
  check_compatible(o);
  TruncSeries r = *this;
  for (const auto& [m, c] : o.terms_) r.set(m, static_cast<std::int64_t>(r.coefficient(m)) + c);
  return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
  check_compatible(o);
  TruncSeries r = *this;
  for (const auto& [m, c] : o.terms_) r.set(m, static_cast<std::int64_t>(r.coefficient(m)) - c);
  return r;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
  check_compatible(o);
  std::map<Monomial, std::uint64_t> acc;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      if (static_cast<int>(m1.size() + m2.size()) > cap_) continue;
      auto& slot = acc[m1 + m2];
      slot = (slot + static_cast<std::uint64_t>(c1) * c2) % p_;
    }
  }
  TruncSeries r(p_, k_, cap_);
  for (auto& [m, c] : acc) {
    if (c != 0) r.terms_.emplace(m, static_cast<std::uint32_t>(c));
  }
  return r;
}

std::string TruncSeries::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (m.empty()) {
      os << c;
      continue;
    }
    if (c != 1) os << c << '*';
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i) os << '*';
      os << 'u' << (m[i] + 1);
    }
  }
  return os.str();
}

}  // namespace lawless::golod
