#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "lawless/errors.hpp"
#include "lawless/golod.hpp"
#include "lawless/trunc_series.hpp"

using namespace lawless;
using namespace lawless::golod;

namespace {

TruncSeries random_series(std::mt19937_64& rng, int p, int k, int cap) {
  TruncSeries s(p, k, cap);
  for (int t = 0; t < 12; ++t) {
    TruncSeries::Monomial m;
    int d = static_cast<int>(rng() % static_cast<std::uint64_t>(cap + 1));
    for (int i = 0; i < d; ++i) m.push_back(static_cast<std::uint8_t>(rng() % static_cast<std::uint64_t>(k)));
    s.set(m, static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(p)));
  }
  return s;
}

FreeWord random_word(std::mt19937_64& rng, int len) {
  std::vector<Letter> l;
  for (int i = 0; i < len; ++i) {
    int g = static_cast<int>(rng() % 2) + 1;
    l.push_back(rng() % 2 ? g : -g);
  }
  return FreeWord::reduce(2, l);
}

TruncSeries::Monomial mono(std::initializer_list<int> v) {
  TruncSeries::Monomial m;
  for (int i : v) m.push_back(static_cast<std::uint8_t>(i));
  return m;
}

}  // namespace

TEST(Rational, ParseForms) {
  EXPECT_EQ(parse_rational("3/4"), Rational(3, 4));
  EXPECT_EQ(parse_rational("0.6"), Rational(3, 5));
  EXPECT_EQ(parse_rational("2"), Rational(2));
  EXPECT_EQ(to_string(Rational(3, 4)), "3/4");
  EXPECT_THROW(parse_rational("x"), InvalidArgument);
}

TEST(TruncSeries, RingAxioms) {
  std::mt19937_64 rng(12);
  for (int p : {2, 3, 5}) {
    for (int t = 0; t < 60; ++t) {
      auto a = random_series(rng, p, 2, 6), b = random_series(rng, p, 2, 6), c = random_series(rng, p, 2, 6);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ((a + b) * c, a * c + b * c);
      EXPECT_TRUE((a - a).is_zero());
      EXPECT_EQ(a * TruncSeries::constant(p, 2, 6, 1), a);
    }
  }
}

TEST(TruncSeries, GeneratorInverse) {
  for (int p : {2, 3, 7}) {
    auto g = TruncSeries::generator(p, 2, 8, 1);
    auto gi = TruncSeries::generator_inverse(p, 2, 8, 1);
    EXPECT_EQ(g * gi, TruncSeries::constant(p, 2, 8, 1));
    EXPECT_EQ(gi * g, TruncSeries::constant(p, 2, 8, 1));
  }
}

TEST(TruncSeries, ValidatesParameters) {
  EXPECT_THROW(TruncSeries(4, 2, 3), InvalidArgument);
  EXPECT_THROW(TruncSeries(2, 0, 3), InvalidArgument);
  EXPECT_THROW(TruncSeries(2, 2, 0), InvalidArgument);
  EXPECT_THROW(TruncSeries(2, 2, 3) + TruncSeries(3, 2, 3), InvalidArgument);
  EXPECT_EQ(TruncSeries(2, 2, 3).min_degree(), 4);
}

TEST(Magnus, ProductOfGenerators) {
  auto m = magnus(FreeWord::parse("ab", 2), 3, 4);
  EXPECT_EQ(m.coefficient(mono({})), 1u);
  EXPECT_EQ(m.coefficient(mono({0})), 1u);
  EXPECT_EQ(m.coefficient(mono({1})), 1u);
  EXPECT_EQ(m.coefficient(mono({0, 1})), 1u);
  EXPECT_EQ(m.coefficient(mono({1, 0})), 0u);
  EXPECT_EQ(m.terms().size(), 4u);
  EXPECT_EQ(magnus(FreeWord::parse("a", 2), 2, 4), TruncSeries::generator(2, 2, 4, 1));
  EXPECT_EQ(magnus(FreeWord::parse("aA", 2), 3, 6), TruncSeries::constant(3, 2, 6, 1));
}

TEST(Magnus, CommutatorLowestTerm) {
  auto m = magnus(FreeWord::parse("ABab", 2), 3, 4) - TruncSeries::constant(3, 2, 4, 1);
  EXPECT_EQ(m.min_degree(), 2);
  EXPECT_EQ(m.coefficient(mono({0, 1})), 1u);
  EXPECT_EQ(m.coefficient(mono({1, 0})), 2u);
  EXPECT_EQ(m.coefficient(mono({0, 0})), 0u);
  EXPECT_EQ(m.coefficient(mono({1, 1})), 0u);
}

TEST(Magnus, Multiplicative) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 100; ++t) {
    FreeWord u = random_word(rng, 6), v = random_word(rng, 6);
    for (int p : {2, 3}) {
      EXPECT_EQ(magnus(u * v, p, 7), magnus(u, p, 7) * magnus(v, p, 7));
      EXPECT_EQ(magnus(u * u.inverse(), p, 7), TruncSeries::constant(p, 2, 7, 1));
    }
  }
}

TEST(Degree, KnownValues) {
  EXPECT_EQ(degree(FreeWord::parse("a", 2), 2, 6).value, 1);
  EXPECT_EQ(degree(FreeWord::parse("ABab", 2), 2, 6).value, 2);
  EXPECT_EQ(degree(FreeWord::parse("aa", 2), 2, 6).value, 2);
  EXPECT_EQ(degree(FreeWord::parse("aa", 2), 3, 6).value, 1);
  EXPECT_EQ(degree(FreeWord::parse("aaa", 2), 3, 6).value, 3);
  EXPECT_EQ(degree(FreeWord::parse("a", 2).pow(5), 5, 6).value, 5);
  auto big = degree(FreeWord::parse("a", 2).pow(16), 2, 8);
  EXPECT_FALSE(big.exact);
  EXPECT_EQ(big.value, 9);
  EXPECT_THROW(degree(FreeWord(2), 2, 4), InvalidArgument);
}

TEST(Degree, PowerMultipliesByP) {
  std::mt19937_64 rng(14);
  int exact_pairs = 0;
  for (int t = 0; t < 40; ++t) {
    FreeWord w = random_word(rng, 4);
    if (w.empty()) continue;
    for (int p : {2, 3}) {
      auto d = degree(w, p, 12);
      auto dp = degree(w.pow(p), p, 12);
      if (d.exact && d.value * p <= 12) {
        ASSERT_TRUE(dp.exact);
        EXPECT_EQ(dp.value, p * d.value) << w.str();
        ++exact_pairs;
      }
    }
  }
  EXPECT_GT(exact_pairs, 20);
}

TEST(GS, FiniteSetAgainstFloatingOracle) {
  GSInput in;
  in.k = 2;
  in.tau = Rational(3, 5);
  in.degrees = {{2, 1}, {3, 1}, {5, 4}};
  auto c = gs_verify(in);
  double oracle = 1 - 2 * 0.6 + std::pow(0.6, 2) + std::pow(0.6, 3) + 4 * std::pow(0.6, 5);
  EXPECT_NEAR(c.total.convert_to<double>(), oracle, 1e-12);
  EXPECT_EQ(c.accepted, oracle < 0);
  in.degrees = {{4, 1}};
  EXPECT_TRUE(gs_verify(in).accepted);
}

TEST(GS, EmptyRelationSet) {
  GSInput in;
  in.k = 2;
  in.tau = Rational(3, 4);
  auto c = gs_verify(in);
  EXPECT_TRUE(c.accepted);
  EXPECT_EQ(c.total, Rational(-1, 2));
  in.tau = Rational(1, 4);
  EXPECT_FALSE(gs_verify(in).accepted);
}

TEST(GS, MonotoneInRelations) {
  GSInput in;
  in.k = 2;
  in.tau = Rational(7, 10);
  Rational previous = -1000;
  for (int extra = 0; extra < 10; ++extra) {
    in.degrees.push_back({4 + extra, 1});
    auto c = gs_verify(in);
    EXPECT_GT(c.total, previous);
    previous = c.total;
  }
}

TEST(GS, RejectsBadTau) {
  GSInput in;
  in.tau = Rational(0);
  EXPECT_THROW(gs_verify(in), InvalidArgument);
  in.tau = Rational(1);
  EXPECT_THROW(gs_verify(in), InvalidArgument);
  in.tau = Rational(3, 2);
  EXPECT_THROW(gs_verify(in), InvalidArgument);
}

TEST(Schedule, BlocksAndExponents) {
  Schedule s;
  s.m0 = 3;
  EXPECT_EQ(s.a(0), Rational(0));
  EXPECT_EQ(s.a(1), Rational(8));
  EXPECT_EQ(s.a(2), Rational(32));
  EXPECT_EQ(s.block_of(8), 1);
  EXPECT_EQ(s.block_of(9), 2);
  EXPECT_EQ(s.exponent(1), BigInt(16));
  for (int m = 0; m < 6; ++m) EXPECT_LT(s.a(m), s.a(m + 1));
}

TEST(Schedule, LeastThresholdAndSum) {
  auto rep = build_schedule(2, 2, Rational(2), Rational(3, 5), Rational(3, 4), 4);
  EXPECT_EQ(rep.schedule.m0, 3);
  EXPECT_TRUE(rep.certificate.accepted);
  ASSERT_TRUE(rep.below_threshold.has_value());
  EXPECT_FALSE(rep.below_threshold->accepted);
  EXPECT_EQ(rep.torsion_slope, Rational(80, 3));
  EXPECT_TRUE(rep.balls_ok);
  for (const auto& [m, a, ball] : rep.ball_checks) {
    EXPECT_GE(Rational(ball), Rational(0));
    EXPECT_LE(Rational(ball), a) << m;
  }
  // Floating oracle for C sum_m h^(2^m), h = 2 (3/4)^8.
  double h = 2 * std::pow(0.75, 8), sum = 0;
  for (int m = 1; m < 12; ++m) sum += 2 * std::pow(h, std::pow(2.0, m));
  double certified = (rep.certificate.schedule_sum + rep.certificate.tail_bound).convert_to<double>();
  EXPECT_GE(certified, sum * (1 - 1e-12));
  EXPECT_LT(certified, 0.5);
}

TEST(Schedule, RejectsOutOfRangeC) {
  // log 2 / log 3 ~ 0.63
  EXPECT_THROW(build_schedule(2, 2, Rational(2), Rational(2, 3), Rational(3, 4), 2), InvalidArgument);
  EXPECT_NO_THROW(build_schedule(2, 2, Rational(2), Rational(5, 8), Rational(3, 4), 2));
}

TEST(BallSize, MatchesClosedForm) {
  EXPECT_EQ(ball_size(2, 0), BigInt(1));
  EXPECT_EQ(ball_size(2, 3), BigInt(53));
  // 1 + 2k ((2k-1)^l - 1) / (2k-2)
  BigInt expect = 1 + 4 * (boost::multiprecision::pow(BigInt(3), 40) - 1) / 2;
  EXPECT_EQ(ball_size(2, 40), expect);
}
