#include <gtest/gtest.h>

#include <map>
#include <memory>
#include <random>

#include "lawless/errors.hpp"
#include "lawless/group.hpp"
#include "lawless/permutation.hpp"
#include "lawless/slowgrowth.hpp"
#include "lawless/sparse.hpp"

using namespace lawless;
using namespace lawless::slow;

namespace {

GammaElement shifted(int type, std::int64_t s) { return GammaElement({{type, 1, s}}, 0); }

GammaElement comm(const GammaElement& a, const GammaElement& b) {
  return a.inverse() * b.inverse() * a * b;
}

}  // namespace

TEST(Sparse, Recurrence) {
  SparsePair s(20);
  EXPECT_EQ(s.p(1), 0);
  EXPECT_EQ(s.q(2), 2);
  for (int n = 2; n < 20; ++n) {
    EXPECT_EQ(s.p(n + 1), s.p(n) + s.q(n) + 1);
    EXPECT_EQ(s.q(n + 1), s.p(n + 1) + s.q(n) + 1);
  }
  std::int64_t pow3 = 1;
  for (int n = 1; n <= 20; ++n) {
    pow3 *= 3;
    EXPECT_LE(s.q(n), pow3);
    EXPECT_EQ(s.p_index(s.p(n)), n);
    EXPECT_EQ(s.q_index(s.q(n)), n == 1 ? std::optional<int>(1) : std::optional<int>(n));
  }
  EXPECT_FALSE(s.p_index(2).has_value());
  EXPECT_EQ((std::vector<std::int64_t>{s.p(1), s.p(2), s.p(3), s.p(4)}), (std::vector<std::int64_t>{0, 1, 4, 12}));
  EXPECT_EQ((std::vector<std::int64_t>{s.q(1), s.q(2), s.q(3), s.q(4)}), (std::vector<std::int64_t>{0, 2, 7, 20}));
  for (int n = 1; n < 20; ++n) {
    EXPECT_LE(s.p(n), s.q(n));
    EXPECT_LT(s.q(n), s.p(n + 1));
  }
  EXPECT_THROW(SparsePair(1), InvalidArgument);
  EXPECT_THROW(SparsePair(41), InvalidArgument);
}

TEST(Sparse, PropertiesAtTwelve) {
  SparsePair s(12);
  EXPECT_FALSE(violates_property_i(s, false).has_value());
  EXPECT_FALSE(violates_property_i(s, true).has_value());
  EXPECT_FALSE(violates_property_ii(s).has_value());
}

TEST(Sparse, DifferenceOracle) {
  // Independent check of the second property: all q(j) - p(k) with j, k >= 2
  // are distinct.
  SparsePair s(14);
  std::map<std::int64_t, int> seen;
  for (int j = 2; j <= 14; ++j) {
    for (int k = 2; k <= 14; ++k) EXPECT_EQ(seen[s.q(j) - s.p(k)]++, 0) << j << " " << k;
  }
}

TEST(GrowthFunctions, ValuesAndSearch) {
  auto lg = GrowthFunction::log2_plus_two();
  EXPECT_EQ(lg.eval(1), 2u);
  EXPECT_EQ(lg.eval(1024), 12u);
  EXPECT_EQ(lg.eval(1023), 11u);
  EXPECT_EQ(least_reaching(lg, 12), 1024u);
  EXPECT_EQ(least_reaching(GrowthFunction::identity(), 77, 5), 77u);
  auto tab = GrowthFunction::table({2, 3, 3, 5});
  EXPECT_EQ(least_reaching(tab, 4), 4u);
  EXPECT_FALSE(least_reaching(tab, 6).has_value());
  EXPECT_THROW(GrowthFunction::table({3, 2}), InvalidArgument);
  EXPECT_THROW(GrowthFunction::table({1, 2}), InvalidArgument);
}

TEST(Schedule, KnownLValues) {
  EXPECT_EQ(schedule_L(GrowthFunction::log2_plus_two(), 3), (std::vector<std::uint64_t>{4, 64, 65536}));
  EXPECT_EQ(schedule_L(GrowthFunction::identity(), 3), (std::vector<std::uint64_t>{4, 8, 18}));
  EXPECT_THROW(schedule_L(GrowthFunction::table({2, 3, 4, 5}), 2), NotFound);
  SparsePair sp(10);
  auto id = schedule_L(GrowthFunction::identity(), 4);
  auto lg = schedule_L(GrowthFunction::log2_plus_two(), 4);
  for (int m = 1; m <= 4; ++m) {
    auto target = static_cast<std::uint64_t>(2 * (sp.q(m + 1) - sp.p(m + 1) + 1));
    EXPECT_EQ(id[static_cast<std::size_t>(m - 1)], target);
    EXPECT_EQ(lg[static_cast<std::size_t>(m - 1)], std::uint64_t{1} << (target - 2));
    if (m > 1) EXPECT_LT(id[static_cast<std::size_t>(m - 2)], id[static_cast<std::size_t>(m - 1)]);
  }
}

TEST(DeltaWitness, NoShortRelations) {
  auto w = delta_witness(3, 5);
  EXPECT_EQ(w.component, 5);
  EXPECT_EQ(w.g.order(), 5u);
  SymBackend s(5);
  std::vector<Permutation> t{w.g, w.h};
  auto words = enumerate_reduced(2, 3);
  ASSERT_EQ(words.size(), 52u);
  for (const auto& v : words) EXPECT_FALSE(evaluate<SymBackend>(v, t, s).is_identity()) << v.str();
  EXPECT_THROW(delta_witness(6, 6), BudgetExceeded);
  auto one = delta_witness(1, 5);
  EXPECT_FALSE(one.g.is_identity());
  EXPECT_FALSE(one.h.is_identity());
}

TEST(GammaElement, GroupLaws) {
  std::mt19937_64 rng(15);
  std::vector<GammaElement> gens{GammaElement::g_hat(), GammaElement::h_hat(), GammaElement::t()};
  auto random_elem = [&] {
    GammaElement e;
    for (int i = 0; i < 8; ++i) {
      const auto& g = gens[rng() % 3];
      e = e * (rng() % 2 ? g : g.inverse());
    }
    return e;
  };
  for (int t = 0; t < 300; ++t) {
    auto a = random_elem(), b = random_elem(), c = random_elem();
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * a.inverse(), GammaElement());
    EXPECT_EQ(a.inverse() * a, GammaElement());
  }
  EXPECT_EQ(GammaElement::t().inverse() * GammaElement::g_hat() * GammaElement::t(), shifted(0, 1));
}

class GammaTest : public ::testing::Test {
 protected:
  std::shared_ptr<GammaContext> ctx = std::make_shared<GammaContext>(GrowthFunction::log2_plus_two());
};

TEST_F(GammaTest, GeneratorsHaveInfiniteSupport) {
  auto g = GammaElement::g_hat();
  EXPECT_FALSE(ctx->is_identity(g * g));
  EXPECT_FALSE(ctx->is_identity(GammaElement::t()));
  EXPECT_TRUE(ctx->is_identity(GammaElement()));
  for (int i = 2; i <= 5; ++i) {
    const auto& w = ctx->witness(i);
    EXPECT_EQ(ctx->generator_value(0, ctx->sparse().p(i)), DirectSumElement::single(w.g));
    EXPECT_EQ(ctx->generator_value(1, ctx->sparse().q(i)), DirectSumElement::single(w.h));
    EXPECT_GT(w.component, ctx->witness(i - 1).component);
  }
}

TEST_F(GammaTest, ShiftedCommutatorsDetectDiagonal) {
  // [g-hat^(t^s), h-hat] is nontrivial exactly when s = q(j) - p(j) for some j.
  const auto& sp = ctx->sparse();
  for (std::int64_t s = -6; s <= 40; ++s) {
    bool diagonal = false;
    for (int j = 1; j <= 8; ++j) diagonal = diagonal || s == sp.q(j) - sp.p(j);
    auto e = comm(shifted(0, s), shifted(1, 0));
    EXPECT_EQ(ctx->is_identity(e), !diagonal) << s;
    EXPECT_EQ(is_identity_windowed(*ctx, e, 9), !diagonal) << s;
  }
}

TEST_F(GammaTest, ShiftedCopiesOfOneGeneratorCommute) {
  for (std::int64_t s = 0; s <= 30; ++s) {
    auto e = comm(shifted(0, s), shifted(0, 0));
    EXPECT_TRUE(ctx->is_identity(e)) << s;
    EXPECT_TRUE(is_identity_windowed(*ctx, e, 9)) << s;
  }
}

TEST_F(GammaTest, RandomProductsAgreeWithWindowedOracle) {
  std::mt19937_64 rng(16);
  GammaBackend b(ctx);
  int trivial = 0;
  for (int t = 0; t < 150; ++t) {
    GammaElement u, v;
    for (int i = 0; i < 4; ++i) {
      const auto& g = b.generators()[rng() % 3].element;
      u = u * (rng() % 2 ? g : g.inverse());
      const auto& h = b.generators()[rng() % 3].element;
      v = v * (rng() % 2 ? h : h.inverse());
    }
    auto e = comm(u, v);
    bool id = ctx->is_identity(e);
    trivial += id;
    EXPECT_EQ(id, is_identity_windowed(*ctx, e, 9)) << e.str();
  }
  EXPECT_GT(trivial, 0);
}

TEST_F(GammaTest, ShiftedProductsAgreeWithWindowedOracle) {
  // Products of <= 8 factors with shifts in [-q(4), q(4)], built so that
  // a fair share are trivial: w * u * w^-1 * u'^-1 with u, u' equal or not.
  std::mt19937_64 rng(17);
  const std::int64_t q4 = ctx->sparse().q(4);
  auto factor = [&] {
    return GammaElement({{static_cast<int>(rng() % 2), rng() % 2 ? 1 : -1,
                          static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(2 * q4 + 1)) - q4}},
                        0);
  };
  int trivial = 0, nontrivial = 0;
  for (int t = 0; t < 400; ++t) {
    GammaElement e;
    int n = 1 + static_cast<int>(rng() % 8);
    for (int i = 0; i < n; ++i) e = e * factor();
    if (t % 2) e = e * comm(factor(), factor()) * e.inverse();
    bool id = ctx->is_identity(e);
    (id ? trivial : nontrivial)++;
    EXPECT_EQ(id, is_identity_windowed(*ctx, e, 9)) << e.str();
  }
  EXPECT_GT(trivial, 20);
  EXPECT_GT(nontrivial, 20);
}

TEST_F(GammaTest, VerifySlowRows) {
  auto r = verify_slow(*ctx, 4);
  EXPECT_TRUE(r.ok());
  ASSERT_EQ(r.rows.size(), 4u);
  for (const auto& row : r.rows) {
    EXPECT_TRUE(row.ok);
    EXPECT_LE(row.tuple_cost, row.f_value);
    EXPECT_EQ(row.tuple_cost, static_cast<std::uint64_t>(2 * (row.shift + 1)));
    EXPECT_EQ(row.words, reduced_word_count(2, static_cast<int>(row.n)));
    if (row.n <= *ctx->L(1)) EXPECT_EQ(row.tuple_cost, 2u);
  }
}
