#include <gtest/gtest.h>

#include <random>

#include "lawless/errors.hpp"
#include "lawless/pl_map.hpp"
#include "lawless/thompson.hpp"

using namespace lawless;
using namespace lawless::thompson;

namespace {

Dyadic random_dyadic(std::mt19937_64& rng, std::int64_t range) {
  auto num = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(2 * range * 16)) - range * 16;
  return Dyadic::make(num, 4);
}

PLMap random_map(std::mt19937_64& rng) {
  ThompsonBackend f;
  PLMap g = f.identity();
  for (int i = 0; i < 6; ++i) {
    const auto& s = f.generators()[rng() % 2].element;
    g = g * (rng() % 2 ? s : s.inverse());
  }
  return g;
}

}  // namespace

TEST(Dyadic, ParseAndCanonicalForm) {
  EXPECT_EQ(Dyadic::parse("3/8"), Dyadic::make(3, 3));
  EXPECT_EQ(Dyadic::parse("0.375"), Dyadic::make(3, 3));
  EXPECT_EQ(Dyadic::make(4, 3), Dyadic::make(1, 1));
  EXPECT_EQ(Dyadic::make(-3, 1).floor(), -2);
  EXPECT_EQ(Dyadic::make(5, 2).str(), Dyadic::parse(Dyadic::make(5, 2).str()).str());
  EXPECT_THROW(Dyadic::parse("1/3"), InvalidArgument);
  EXPECT_THROW(Dyadic::parse("0.1"), InvalidArgument);
}

TEST(Dyadic, FieldIdentities) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 500; ++t) {
    Dyadic a = random_dyadic(rng, 20), b = random_dyadic(rng, 20), c = random_dyadic(rng, 20);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, Dyadic(0));
    EXPECT_EQ(a.scaled(3).scaled(-3), a);
    EXPECT_EQ(a < b, a.to_double() < b.to_double());
  }
}

TEST(Generators, Values) {
  PLMap a = make_A(), b = make_B();
  EXPECT_EQ(b(Dyadic::make(1, 1)), Dyadic(1));
  EXPECT_EQ(b(Dyadic(2)), Dyadic(3));
  EXPECT_EQ(b(Dyadic(-5)), Dyadic(-5));
  EXPECT_EQ(a(Dyadic(7)), Dyadic(8));
  EXPECT_EQ(b.right_shift(), Dyadic(1));
  EXPECT_EQ(b.left_shift(), Dyadic(0));
}

TEST(PLMap, CompositionIsPointwise) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 200; ++t) {
    PLMap f = random_map(rng), g = random_map(rng), h = random_map(rng);
    EXPECT_EQ((f * g) * h, f * (g * h));
    EXPECT_TRUE((f * f.inverse()).is_identity());
    for (int s = 0; s < 10; ++s) {
      Dyadic x = random_dyadic(rng, 12);
      EXPECT_EQ((f * g)(x), f(g(x)));
      EXPECT_EQ(f.preimage(f(x)), x);
      EXPECT_EQ(f.inverse()(x), f.preimage(x));
    }
    EXPECT_TRUE(is_member(f));
  }
}

TEST(PLMap, GeneratorTriples) {
  std::vector<PLMap> s{make_A(), make_B(), make_A().inverse(), make_B().inverse()};
  for (const auto& f : s) {
    for (const auto& g : s) {
      for (const auto& h : s) EXPECT_EQ((f * g) * h, f * (g * h));
    }
  }
  EXPECT_TRUE((make_A() * make_A().inverse()).is_identity());
}

TEST(PLMap, RejectsDecreasingPoints) {
  EXPECT_THROW(PLMap::from_points({{0, 1}, {1, 0}}), InvalidArgument);
  EXPECT_TRUE(PLMap::from_points({{0, 0}, {1, 1}}).is_identity());
}

TEST(Membership, CandidateChecks) {
  using R = PLCandidate::Rational;
  PLCandidate slope3;
  slope3.points = {{R(0), R(0)}, {R(1), R(3)}, {R(2), R(4)}};
  EXPECT_FALSE(is_member(slope3));
  PLCandidate third;
  third.points = {{R(0), R(0)}, {R(1, 3), R(2, 3)}, {R(2), R(3)}};
  EXPECT_FALSE(is_member(third));
  PLCandidate half_shift;
  half_shift.shift = R(1, 2);
  EXPECT_FALSE(is_member(half_shift));
  PLCandidate decreasing;
  decreasing.points = {{R(0), R(1)}, {R(1), R(0)}};
  EXPECT_FALSE(is_member(decreasing));
  EXPECT_TRUE(is_member(PLCandidate::from_map(make_B())));
  EXPECT_TRUE(is_member(make_A()));
  EXPECT_TRUE(is_member(make_U(0)));
  EXPECT_TRUE(is_member(make_U(2)));
  EXPECT_TRUE(is_member(make_V(2)));
}

TEST(MapT, PeriodicAndFixesMultiplesOfEight) {
  std::mt19937_64 rng(10);
  for (std::int64_t n = -5; n <= 5; ++n) EXPECT_EQ(T_value(Dyadic(8 * n)), Dyadic(8 * n));
  for (int t = 0; t < 500; ++t) {
    Dyadic x = random_dyadic(rng, 40);
    EXPECT_EQ(T_value(x + Dyadic(8)), T_value(x) + Dyadic(8));
    Dyadic y = x + Dyadic::make(1, 4);
    EXPECT_LT(T_value(x), T_value(y));
    std::int64_t f = x.floor();
    Dyadic base(8 * (f >= 0 ? f / 8 : -((-f + 7) / 8)));
    EXPECT_GE(T_value(x), base);
    EXPECT_LE(T_value(x), base + Dyadic(8));
  }
}

TEST(MapT, BijectionOfFirstPeriod) {
  // Exact images of the grid (1/16) Z in [0, 8]: strictly increasing, and
  // the endpoints are fixed.
  Dyadic previous(-1);
  for (int i = 0; i <= 128; ++i) {
    Dyadic y = T_value(Dyadic::make(i, 4));
    EXPECT_GT(y, previous);
    EXPECT_GE(y, Dyadic(0));
    EXPECT_LE(y, Dyadic(8));
    previous = y;
  }
  EXPECT_EQ(T_value(Dyadic(0)), Dyadic(0));
  EXPECT_EQ(T_value(Dyadic(8)), Dyadic(8));
  PLMap t = make_T(0, 1);
  EXPECT_EQ(t.preimage(t(Dyadic::make(13, 3))), Dyadic::make(13, 3));
}

TEST(MapT, TruncationAgreesWithEvaluator) {
  PLMap t = make_T(-1, 2);
  for (int i = -16 * 4; i <= 16 * 4; ++i) {
    Dyadic x = Dyadic::make(i, 2) * Dyadic(8) * Dyadic::make(1, 4);
    Dyadic expect = (x >= Dyadic(-8) && x <= Dyadic(16)) ? T_value(x) : x;
    EXPECT_EQ(t(x), expect) << x.str();
  }
  EXPECT_TRUE(is_member(t));
}

TEST(MapU, SquareOfTOnSupport) {
  for (int n = 0; n <= 3; ++n) {
    PLMap u = make_U(n), v = make_V(n);
    for (int i = -8; i <= 8 * 4 * (n + 3); ++i) {
      Dyadic x = Dyadic::make(i, 2);
      bool inside = x >= Dyadic(0) && x <= Dyadic(8 * (n + 1));
      EXPECT_EQ(u(x), inside ? T_value(T_value(x)) : x);
      EXPECT_EQ(v(x), u(x - Dyadic(2)) + Dyadic(2));
    }
  }
}

TEST(MapU, VIsConjugateOfU) {
  PLMap a = make_A();
  EXPECT_EQ(make_V(0), a * a * make_U(0) * a.inverse() * a.inverse());
  EXPECT_FALSE(make_U(1).is_identity());
  EXPECT_FALSE(make_V(1).is_identity());
}

TEST(MapU, Recursion) {
  for (int n = 0; n <= 5; ++n) EXPECT_TRUE(check_recursion(n)) << n;
}

TEST(BrinSquier, NoShortRelations) {
  auto r = brin_squier_check(3);
  EXPECT_EQ(r.words, 52u);
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(brin_squier_check(1).ok());
  auto four = brin_squier_check(4);
  EXPECT_EQ(four.words, 4u + 12 + 36 + 108);
  EXPECT_TRUE(four.ok());
}

TEST(LengthProbe, ReportsSearchedRadius) {
  auto p = probe_u0_length(4, 100000);
  EXPECT_FALSE(p.length.has_value());
  EXPECT_EQ(p.radius_searched, 4);
  EXPECT_GT(p.elements, 1u);
}
