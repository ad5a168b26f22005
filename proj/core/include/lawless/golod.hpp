#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lawless/trunc_series.hpp"
#include "lawless/words.hpp"

namespace lawless::golod {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "3/4", "0.6" or "2".
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);

/// Image of w under x_i -> 1 + u_i in F_p<<u_1..u_k>>, truncated at cap.
TruncSeries magnus(const FreeWord& w, int p, int cap);

struct Degree {
  /// Exact degree when `exact`, else a lower bound (cap + 1).
  int value = 0;
  bool exact = true;
};

/// D(w) = deg(magnus(w) - 1). Throws InvalidArgument for the trivial word.
Degree degree(const FreeWord& w, int p, int cap);

/// Relation-degree tail of the linear-torsion presentation: block m >= 1
/// holds at most a_m = C q^(p^m) relations, each of degree >= p^(m + m0).
struct Schedule {
  int k = 2;
  int p = 2;
  Rational C = 2;
  Rational q = 2;
  Rational c = Rational(3, 5);
  int m0 = 0;

  /// a_m; a_0 = 0.
  Rational a(int m) const;
  /// The exponent p^(m + m0) assigned to relations in block m.
  BigInt exponent(int m) const;
  /// Block index m with a_{m-1} < n <= a_m.
  int block_of(const BigInt& n) const;
};

struct GSInput {
  int k = 2;
  Rational tau;
  /// (degree, multiplicity) pairs for an explicit finite relation set.
  std::vector<std::pair<std::int64_t, BigInt>> degrees;
  std::optional<Schedule> schedule;
  /// Schedule blocks summed exactly before the geometric tail bound.
  int exact_terms = 4;
};

struct GSCertificate {
  bool accepted = false;
  std::string reason;
  Rational tau;
  Rational linear_part;   // 1 - k tau
  Rational finite_part;   // sum over explicit degrees
  Rational h;             // q tau^(p^m0), schedule only
  Rational schedule_sum;  // C * sum_{m <= M} h^(p^m)
  Rational tail_bound;    // C * h^(p^(M+1)) / (1 - h)
  Rational total;         // upper bound for the left-hand side
};

/// Certifies 1 - k tau + sum tau^D(r) < 0 in exact rationals. Throws
/// InvalidArgument for tau outside (0,1) or k < 1.
GSCertificate gs_verify(const GSInput& input);

struct ScheduleReport {
  Schedule schedule;
  /// (m, a_m, |B(floor(c p^m))|) for 1 <= m <= depth.
  std::vector<std::tuple<int, Rational, BigInt>> ball_checks;
  bool balls_ok = true;
  /// Order bound o(g) <= slope * |g| for every g.
  Rational torsion_slope;
  GSCertificate certificate;
  /// Certificate at m0 - 1, absent when m0 == 0.
  std::optional<GSCertificate> below_threshold;
};

/// Least m0 in [0, max_m0] for which gs_verify accepts the schedule at tau.
/// Throws InvalidArgument unless 0 < c < log q / log(2k-1), and NotFound when
/// no m0 up to max_m0 is accepted.
ScheduleReport build_schedule(int k, int p, const Rational& q, const Rational& c,
                              const Rational& tau, int depth, int max_m0 = 32);

/// |B(l)| in F_k as an exact integer.
BigInt ball_size(int k, std::int64_t l);

}  // namespace lawless::golod
