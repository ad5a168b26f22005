#include <gtest/gtest.h>

#include <random>

#include "lawless/engine.hpp"
#include "lawless/errors.hpp"
#include "lawless/free_group.hpp"
#include "lawless/grigorchuk.hpp"
#include "lawless/permutation.hpp"
#include "lawless/rfbounds.hpp"
#include "lawless/wreath.hpp"

using namespace lawless;

namespace {

// Brute force over raw generator words, no ball and no dedup: least total
// letter count m of a k-tuple of words with w(tuple) != e.
template <GroupBackend B>
int naive_chi(const B& b, const FreeWord& w, int max_m) {
  std::vector<typename B::Element> steps;
  for (const auto& g : b.generators()) {
    steps.push_back(g.element);
    if (!g.involution) steps.push_back(b.invert(g.element));
  }
  // words[l] = values of all raw words of length l
  std::vector<std::vector<typename B::Element>> words{{b.identity()}};
  for (int l = 1; l <= max_m; ++l) {
    std::vector<typename B::Element> next;
    for (const auto& p : words.back()) {
      for (const auto& st : steps) next.push_back(b.multiply(p, st));
    }
    words.push_back(std::move(next));
  }
  const int k = w.rank();
  std::vector<typename B::Element> t;
  std::function<bool(int, int)> rec = [&](int i, int left) {
    if (i == k) return left == 0 && !b.is_identity(evaluate<B>(w, t, b));
    for (int p = 0; p <= left; ++p) {
      for (const auto& e : words[static_cast<std::size_t>(p)]) {
        t.push_back(e);
        bool hit = rec(i + 1, left - p);
        t.pop_back();
        if (hit) return true;
      }
    }
    return false;
  };
  for (int m = 1; m <= max_m; ++m) {
    if (rec(0, m)) return m;
  }
  return -1;
}

template <GroupBackend B>
void check_against_oracle(const B& b, int max_len, int budget) {
  Ball<B> ball(b);
  for (const auto& w : enumerate_reduced(2, max_len)) {
    auto r = complexity(ball, w, budget);
    int naive = naive_chi(b, w, budget);
    if (naive < 0) {
      EXPECT_EQ(r.status, Status::budget_exceeded) << w.str();
    } else {
      ASSERT_EQ(r.status, Status::exact) << w.str();
      EXPECT_EQ(r.value, naive) << w.str();
    }
  }
}

}  // namespace

TEST(Complexity, MatchesNaiveOracleOnSym4) {
  SymBackend s(4);
  Ball<SymBackend> ball(s);
  for (const char* text : {"a", "aa", "aaa", "abAB", "aabb", "abab", "aaaa", "aBAb"}) {
    FreeWord w = FreeWord::parse(text, 2);
    auto r = complexity(ball, w, 6);
    ASSERT_EQ(r.status, Status::exact) << text;
    EXPECT_EQ(r.value, naive_chi(s, w, 6)) << text;
    EXPECT_FALSE(evaluate<SymBackend>(w, r.witness, s).is_identity());
  }
}

TEST(Complexity, OracleOnSym3AndW1) {
  check_against_oracle(SymBackend(3), 4, 5);
  check_against_oracle(wreath::WreathBackend(1), 4, 5);
}

TEST(Complexity, Examples) {
  FreeBackend f(2);
  Ball<FreeBackend> fb(f);
  EXPECT_EQ(complexity(fb, FreeWord::parse("a", 2), 3).value, 1);
  for (const auto& w : enumerate_reduced(2, 5)) {
    auto r = complexity(fb, w, 2);
    ASSERT_EQ(r.status, Status::exact);
    EXPECT_LE(r.value, 2);
    EXPECT_TRUE(
        evaluate<FreeBackend>(w, {FreeWord::parse("a", 2), FreeWord::parse("b", 2)}, f).length() > 0);
  }
  grig::GrigBackend g;
  Ball<grig::GrigBackend> gb(g);
  auto sq = complexity(gb, FreeWord::parse("aa", 2), 3);
  ASSERT_EQ(sq.status, Status::exact);
  EXPECT_EQ(sq.value, naive_chi(g, FreeWord::parse("aa", 2), 3));
  EXPECT_EQ(sq.value, 2);
}

TEST(Complexity, QuotientDoesNotDecrease) {
  // Sym(4) -> Sym(3) through the action on the three pair partitions:
  // (1 2) -> (2 3) and (1 2 3 4) -> (1 3).
  SymBackend big(4);
  SymBackend quot(3, {Permutation::parse_cycles("(2 3)", 3), Permutation::parse_cycles("(1 3)", 3)}, "q");
  Ball<SymBackend> bb(big), qb(quot);
  int shared = 0;
  for (const auto& w : enumerate_reduced(2, 4)) {
    auto rq = complexity(qb, w, 6);
    if (rq.status != Status::exact) continue;
    auto rb = complexity(bb, w, 6);
    ASSERT_EQ(rb.status, Status::exact);
    EXPECT_LE(rb.value, rq.value) << w.str();
    ++shared;
  }
  EXPECT_GT(shared, 100);
}

TEST(Complexity, WitnessHasReportedLength) {
  SymBackend s(5);
  Ball<SymBackend> ball(s);
  FreeWord w = FreeWord::parse("abAB", 2);
  auto r = complexity(ball, w, 8);
  ASSERT_EQ(r.status, Status::exact);
  int total = 0;
  for (const auto& g : r.witness) total += ball.length(*ball.find(g));
  EXPECT_EQ(total, r.value);
}

TEST(Complexity, LawReportsBudgetExceeded) {
  SymBackend s(3);
  Ball<SymBackend> ball(s);
  // x^6 is a law in Sym(3).
  auto r = complexity(ball, FreeWord::parse("aaaaaa", 1), 5);
  EXPECT_EQ(r.status, Status::budget_exceeded);
  EXPECT_THROW(complexity(ball, FreeWord(2), 3), InvalidArgument);
}

TEST(Complexity, ParallelAgreesWithSequential) {
  SymBackend s(4);
  Ball<SymBackend> ball(s);
  auto words = enumerate_reduced(2, 3);
  auto batch = complexities(ball, words, 6);
  for (std::size_t i = 0; i < words.size(); ++i) {
    Ball<SymBackend> fresh(s);
    auto r = complexity(fresh, words[i], 6);
    EXPECT_EQ(batch[i].status, r.status);
    EXPECT_EQ(batch[i].value, r.value);
  }
}

TEST(Growth, MonotoneAndFreeIsOne) {
  FreeBackend f(2);
  Ball<FreeBackend> fb(f);
  auto t = lawlessness_growth(fb, 3, 3);
  for (const auto& e : t.entries()) {
    EXPECT_EQ(e.value, 1);
    EXPECT_EQ(e.status, Status::exact);
  }
  SymBackend s(4);
  Ball<SymBackend> sb(s);
  EXPECT_TRUE(lawlessness_growth(sb, 4, 6).is_monotone());
}

TEST(Growth, FreeTableBoundedAndSubsetMonotone) {
  FreeBackend f(2);
  Ball<FreeBackend> fb(f);
  auto t = lawlessness_growth(fb, 6, 2);
  for (const auto& e : t.entries()) {
    EXPECT_LE(e.value, 2);
    EXPECT_EQ(e.status, Status::exact);
  }
  SymBackend s(4);
  Ball<SymBackend> sb(s);
  auto all = lawlessness_growth(sb, 4, 8);
  std::vector<FreeWord> subset{FreeWord::parse("aa", 2), FreeWord::parse("abAB", 2)};
  auto part = lawlessness_growth(sb, 4, 8, 2, subset);
  for (int m = 1; m <= 4; ++m) EXPECT_LE(part.at(m).value, all.at(m).value);
}

TEST(Growth, TorsionEquivalence) {
  // With W = {x^(2^j)}, A_W(2^j) >= n + 1 iff every g with |g| <= n has
  // order dividing 2^j.
  grig::GrigBackend g;
  Ball<grig::GrigBackend> ball(g);
  ball.grow_to(5);
  auto pi = grig::torsion_growth(5).pi;
  for (int j = 1; j <= 4; ++j) {
    FreeWord w = FreeWord::parse("a", 1).pow(1LL << j);
    auto r = complexity(ball, w, 5);
    for (int n = 1; n <= 4; ++n) {
      bool a_large = r.status == Status::budget_exceeded || r.value >= n + 1;
      EXPECT_EQ(a_large, pi.at(n).value <= (1LL << j)) << j << " " << n;
    }
  }
}

TEST(Spotless, FreeGeneratorsAreSpotless) {
  FreeBackend f(2);
  Ball<FreeBackend> ball(f);
  auto t = find_spotless_tuple(ball, 4, 2, 4);
  EXPECT_EQ(t.size(), 2u);
  EXPECT_TRUE(is_spotless(f, t, 4));
  SymBackend s(3);
  EXPECT_FALSE(is_spotless(s, {Permutation::parse_cycles("(1 2)", 3)}, 2));
}

TEST(Spotless, Sym5PairKillsNoShortWord) {
  SymBackend s(5);
  Ball<SymBackend> ball(s);
  auto t = find_spotless_tuple(ball, 3, 2, 8);
  for (const auto& w : enumerate_reduced(2, 3)) {
    EXPECT_FALSE(evaluate<SymBackend>(w, t, s).is_identity()) << w.str();
  }
  SymBackend s2(2);
  Ball<SymBackend> b2(s2);
  EXPECT_THROW(find_spotless_tuple(b2, 2, 2, 4), NotFound);
}

TEST(Combine, ZeroSetContainsUnion) {
  std::vector<FreeWord> words{FreeWord::parse("aa", 2), FreeWord::parse("bbb", 2),
                              FreeWord::parse("abAB", 2)};
  FreeWord w = combine(words);
  EXPECT_FALSE(w.empty());
  EXPECT_LE(w.length(), 16 * 9 * 4u);
  SymBackend s(4);
  std::mt19937_64 rng(5);
  std::vector<std::uint16_t> img{0, 1, 2, 3};
  auto random_perm = [&] {
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation::from_images(img);
  };
  int vanish_checked = 0;
  for (int t = 0; t < 2000; ++t) {
    std::vector<Permutation> tuple{random_perm(), random_perm()};
    bool some = false;
    for (const auto& u : words) some = some || evaluate<SymBackend>(u, tuple, s).is_identity();
    if (!some) continue;
    ++vanish_checked;
    EXPECT_TRUE(evaluate<SymBackend>(w, tuple, s).is_identity());
  }
  EXPECT_GT(vanish_checked, 100);
}

TEST(Combine, ExhaustiveOnSmallGroups) {
  auto w = combine({FreeWord::parse("a", 2), FreeWord::parse("b", 2)});
  std::vector<FreeWord> words{FreeWord::parse("aa", 2), FreeWord::parse("abAB", 2),
                              FreeWord::parse("bbb", 2)};
  auto w3 = combine(words);
  for (const auto& g : rf::small_groups()) {
    auto els = rf::elements(g.backend);
    for (const auto& x : els) {
      for (const auto& y : els) {
        std::vector<Permutation> t{x, y};
        if (x.is_identity() || y.is_identity()) {
          EXPECT_TRUE(evaluate<SymBackend>(w, t, g.backend).is_identity());
        }
        bool some = false;
        for (const auto& u : words) some = some || evaluate<SymBackend>(u, t, g.backend).is_identity();
        if (some) EXPECT_TRUE(evaluate<SymBackend>(w3, t, g.backend).is_identity()) << g.name;
      }
    }
  }
}

TEST(Combine, FourWordsLengthBound) {
  std::vector<FreeWord> words{FreeWord::parse("aab", 2), FreeWord::parse("bA", 2),
                              FreeWord::parse("abAB", 2), FreeWord::parse("aaa", 2)};
  auto w = combine(words);
  EXPECT_FALSE(w.empty());
  EXPECT_LE(w.length(), 256u * 4);
}

TEST(Combine, RejectsTrivial) {
  EXPECT_THROW(combine({}), InvalidArgument);
  EXPECT_THROW(combine({FreeWord(2)}), InvalidArgument);
  EXPECT_EQ(combine({FreeWord::parse("ab", 2)}).str(), "ab");
}

TEST(Mif, ComplexityOfCommutatorWithGenerator) {
  SymBackend s(3);
  Ball<SymBackend> ball(s);
  auto mw = parse_mixed("<a>x<a>X", s);
  auto r = mif_complexity(ball, mw, 3);
  ASSERT_EQ(r.status, Status::exact);
  EXPECT_FALSE(substitute_mixed(mw, r.witness.front(), s).is_identity());
  // Every shorter g commutes with a.
  for (int m = 0; m < r.value; ++m) {
    auto st = ball.stratum(m);
    for (std::size_t j = st.begin; j < st.end; ++j) {
      EXPECT_TRUE(substitute_mixed(mw, ball.element(j), s).is_identity());
    }
  }
}

TEST(Mif, Examples) {
  FreeBackend f(2);
  Ball<FreeBackend> ball(f);
  auto r = mif_complexity(ball, MixedWord::parse("<a>x<A>X", 2), 3);
  ASSERT_EQ(r.status, Status::exact);
  EXPECT_EQ(r.value, 1);
  SymBackend s(3);
  EXPECT_THROW(parse_mixed("x<aa>x", s), InvalidArgument);
  EXPECT_THROW(MixedWord::parse("x<aA>x", 2), InvalidArgument);
  Ball<SymBackend> sb(s);
  EXPECT_TRUE(mif_growth(sb, 3, 4).is_monotone());
}

TEST(Mif, HardWordOverFreeGroup) {
  FreeBackend f(2);
  Ball<FreeBackend> ball(f);
  auto mw = mif_hard_word(ball, 1);
  EXPECT_FALSE(mw.empty());
  EXPECT_LE(mw.length(), 32u * 2 * 16);
  for (std::size_t j = 0; j < ball.stratum(1).end; ++j) {
    EXPECT_TRUE(substitute_mixed(mw, ball.element(j), f).empty());
  }
  auto r = mif_complexity(ball, mw, 3);
  ASSERT_EQ(r.status, Status::exact);
  EXPECT_GE(r.value, 2);
}

TEST(Mif, HardWordExceedsRadius) {
  SymBackend s(4);
  Ball<SymBackend> ball(s);
  for (int l = 1; l <= 2; ++l) {
    auto mw = mif_hard_word(ball, l);
    for (std::size_t j = 0; j < ball.stratum(l).end; ++j) {
      EXPECT_TRUE(substitute_mixed(mw, ball.element(j), s).is_identity());
    }
  }
}

TEST(Mif, FreeWitnessIsNontrivial) {
  auto mw = MixedWord::parse("<a>x<b>x", 2);
  auto w = mif_free_witness(mw, 2);
  EXPECT_FALSE(w.value.empty());
  FreeBackend f(2);
  EXPECT_EQ(substitute_mixed(mw, w.element, f), w.value);
  EXPECT_EQ(free_root(w.u).exponent, 1);
}

TEST(Mif, FreeWitnessLengthArithmetic) {
  auto w = mif_free_witness(MixedWord::parse("<a>x", 2), 2);
  EXPECT_EQ(w.u.str(), "b");
  EXPECT_EQ(w.m, 3);
  EXPECT_EQ(w.element.str(), "bbb");
}

TEST(Mif, MixedEnumerationContainsX) {
  SymBackend s(3);
  Ball<SymBackend> ball(s);
  auto words = enumerate_mixed(ball, 2);
  ASSERT_FALSE(words.empty());
  for (const auto& mw : words) {
    EXPECT_FALSE(mw.is_constant());
    EXPECT_LE(mw.length(), 2u);
  }
}
