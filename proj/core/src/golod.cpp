#include "lawless/golod.hpp"

#include <cctype>

#include "lawless/errors.hpp"

namespace lawless::golod {

namespace {

BigInt ipow(BigInt base, std::uint64_t e) {
  BigInt r = 1;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

Rational rpow(const Rational& base, const BigInt& e) {
  Rational r = 1;
  Rational b = base;
  BigInt n = e;
  while (n > 0) {
    if ((n & 1) != 0) r *= b;
    n >>= 1;
    if (n > 0) b *= b;
  }
  return r;
}

BigInt floor_of(const Rational& r) {
  BigInt n = numerator(r);
  BigInt d = denominator(r);
  BigInt q = n / d;
  if (n < 0 && q * d != n) q -= 1;
  return q;
}

// sum_{j >= e} h^j for 0 <= h < 1.
Rational geometric_tail(const Rational& h, const BigInt& first_exponent) {
  return rpow(h, first_exponent) / (Rational(1) - h);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  auto bad = [&] { return InvalidArgument("not a rational: '" + text + "'"); };
  if (text.empty()) throw bad();
  auto slash = text.find('/');
  auto digits = [&](const std::string& s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = (allow_sign && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  if (slash != std::string::npos) {
    std::string n = text.substr(0, slash), d = text.substr(slash + 1);
    if (!digits(n, true) || !digits(d, false)) throw bad();
    BigInt den(d);
    if (den == 0) throw bad();
    return Rational(BigInt(n), den);
  }
  auto dot = text.find('.');
  if (dot == std::string::npos) {
    if (!digits(text, true)) throw bad();
    return Rational(BigInt(text));
  }
  std::string whole = text.substr(0, dot), frac = text.substr(dot + 1);
  bool negative = !whole.empty() && whole[0] == '-';
  if (whole.empty() || whole == "-" || whole == "+") whole += "0";
  if (!digits(whole, true) || !digits(frac, false)) throw bad();
  Rational r = Rational(BigInt(whole));
  Rational f(BigInt(frac), ipow(10, frac.size()));
  if (negative) return r - f;
  return r + f;
}

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

TruncSeries magnus(const FreeWord& w, int p, int cap) {
  const int k = std::max(1, w.rank());
  TruncSeries r = TruncSeries::constant(p, k, cap, 1);
  for (Letter l : w.letters()) {
    r = r * (l > 0 ? TruncSeries::generator(p, k, cap, l)
                   : TruncSeries::generator_inverse(p, k, cap, -l));
  }
  return r;
}

Degree degree(const FreeWord& w, int p, int cap) {
  if (w.empty()) throw InvalidArgument("degree of the trivial word is undefined");
  TruncSeries s = magnus(w, p, cap);
  s.set({}, static_cast<std::int64_t>(s.coefficient({})) - 1);
  int d = s.min_degree();
  return d > cap ? Degree{cap + 1, false} : Degree{d, true};
}

Rational Schedule::a(int m) const {
  if (m <= 0) return 0;
  return C * rpow(q, ipow(p, static_cast<std::uint64_t>(m)));
}

BigInt Schedule::exponent(int m) const {
  return ipow(p, static_cast<std::uint64_t>(m + m0));
}

int Schedule::block_of(const BigInt& n) const {
  if (n < 1) throw InvalidArgument("relation index starts at 1");
  int m = 1;
  while (Rational(n) > a(m)) ++m;
  return m;
}

BigInt ball_size(int k, std::int64_t l) {
  if (l < 0) return 0;
  if (k == 1) return 2 * BigInt(l) + 1;
  // 1 + 2k ((2k-1)^l - 1) / (2k-2)
  BigInt g = ipow(2 * k - 1, static_cast<std::uint64_t>(l));
  return 1 + (2 * BigInt(k) * (g - 1)) / (2 * k - 2);
}

GSCertificate gs_verify(const GSInput& in) {
  if (in.k < 1) throw InvalidArgument("k must be positive");
  if (in.tau <= 0 || in.tau >= 1) throw InvalidArgument("tau must lie in (0,1)");
  GSCertificate cert;
  cert.tau = in.tau;
  cert.linear_part = Rational(1) - in.k * in.tau;
  for (const auto& [d, count] : in.degrees) {
    if (d < 1) throw InvalidArgument("relation degrees are positive");
    if (count < 0) throw InvalidArgument("multiplicities are nonnegative");
    cert.finite_part += Rational(count) * rpow(in.tau, d);
  }
  cert.total = cert.linear_part + cert.finite_part;
  if (in.schedule) {
    const Schedule& s = *in.schedule;
    if (in.exact_terms < 1) throw InvalidArgument("exact_terms must be positive");
    cert.h = s.q * rpow(in.tau, ipow(s.p, static_cast<std::uint64_t>(s.m0)));
    if (cert.h >= 1) {
      cert.accepted = false;
      cert.reason = "h = q tau^(p^m0) >= 1, tail bound inapplicable";
      return cert;
    }
    for (int m = 1; m <= in.exact_terms; ++m) {
      cert.schedule_sum += rpow(cert.h, ipow(s.p, static_cast<std::uint64_t>(m)));
    }
    cert.schedule_sum *= s.C;
    cert.tail_bound =
        s.C * geometric_tail(cert.h, ipow(s.p, static_cast<std::uint64_t>(in.exact_terms + 1)));
    cert.total += cert.schedule_sum + cert.tail_bound;
  }
  cert.accepted = cert.total < 0;
  cert.reason = cert.accepted ? "certified upper bound is negative"
                              : "certified upper bound is not negative";
  return cert;
}

ScheduleReport build_schedule(int k, int p, const Rational& q, const Rational& c,
                              const Rational& tau, int depth, int max_m0) {
  if (k < 2) throw InvalidArgument("schedule needs k >= 2");
  if (q <= 1) throw InvalidArgument("q must exceed 1");
  // 0 < c < log q / log(2k-1)  <=>  (2k-1)^c < q, compared as integer powers.
  if (c <= 0) throw InvalidArgument("c must be positive");
  {
    BigInt cn = numerator(c), cd = denominator(c);
    Rational lhs(ipow(2 * k - 1, cn.convert_to<std::uint64_t>()));
    Rational rhs = rpow(q, cd);
    if (!(lhs < rhs)) throw InvalidArgument("c must be below log q / log(2k-1)");
  }
  ScheduleReport rep;
  Schedule s;
  s.k = k;
  s.p = p;
  s.q = q;
  s.c = c;
  // |B(l)| <= (k/(k-1)) (2k-1)^l.
  s.C = Rational(k, k - 1);
  for (int m = 1; m <= depth; ++m) {
    BigInt radius = floor_of(c * ipow(p, static_cast<std::uint64_t>(m)));
    BigInt ball = ball_size(k, radius.convert_to<std::int64_t>());
    Rational am = s.a(m);
    rep.ball_checks.emplace_back(m, am, ball);
    if (am < Rational(ball)) rep.balls_ok = false;
  }
  for (int m0 = 0; m0 <= max_m0; ++m0) {
    s.m0 = m0;
    GSInput in;
    in.k = k;
    in.tau = tau;
    in.schedule = s;
    GSCertificate cert = gs_verify(in);
    if (!cert.accepted) continue;
    rep.schedule = s;
    rep.certificate = cert;
    rep.torsion_slope = Rational(ipow(p, static_cast<std::uint64_t>(m0 + 1))) / c;
    if (m0 > 0) {
      Schedule below = s;
      below.m0 = m0 - 1;
      in.schedule = below;
      rep.below_threshold = gs_verify(in);
    }
    return rep;
  }
  throw NotFound("no m0 <= " + std::to_string(max_m0) + " satisfies the inequality");
}

}  // namespace lawless::golod
