#include "lawless/slowgrowth.hpp"

#include <bit>
#include <numeric>
#include <random>

#include "lawless/errors.hpp"
#include "lawless/parallel.hpp"

namespace lawless::slow {

GrowthFunction GrowthFunction::identity() {
  return {"id", [](std::uint64_t n) { return n; }};
}

GrowthFunction GrowthFunction::log2_plus_two() {
  return {"log", [](std::uint64_t n) {
            return static_cast<std::uint64_t>(std::bit_width(n) - 1) + 2;
          }};
}

GrowthFunction GrowthFunction::table(std::vector<std::uint64_t> values) {
  if (values.empty()) throw InvalidArgument("growth table is empty");
  if (values[0] < 2) throw InvalidArgument("growth table needs f(1) >= 2");
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] < values[i - 1]) throw InvalidArgument("growth table must be nondecreasing");
  }
  GrowthFunction f;
  f.name = "table";
  f.domain = values.size();
  f.eval = [v = std::move(values)](std::uint64_t n) { return v.at(n - 1); };
  return f;
}

std::optional<std::uint64_t> least_reaching(const GrowthFunction& f, std::uint64_t target,
                                            std::uint64_t lo) {
  if (lo < 1) lo = 1;
  if (lo > f.domain) return std::nullopt;
  if (f.eval(lo) >= target) return lo;
  std::uint64_t below = lo, hi = lo;
  for (;;) {
    if (hi == f.domain) return std::nullopt;
    below = hi;
    hi = hi > f.domain / 2 ? f.domain : 2 * hi;
    if (f.eval(hi) >= target) break;
  }
  // f(below) < target <= f(hi)
  while (hi - below > 1) {
    std::uint64_t mid = below + (hi - below) / 2;
    if (f.eval(mid) >= target) {
      hi = mid;
    } else {
      below = mid;
    }
  }
  return hi;
}

std::vector<std::uint64_t> schedule_L(const GrowthFunction& f, int M) {
  if (M < 1) throw InvalidArgument("schedule length must be positive");
  SparsePair s(std::max(M + 1, 2));
  std::vector<std::uint64_t> L;
  for (int m = 1; m <= M; ++m) {
    auto target = static_cast<std::uint64_t>(2 * (s.q(m + 1) - s.p(m + 1) + 1));
    auto v = least_reaching(f, target, L.empty() ? 1 : L.back() + 1);
    if (!v) {
      throw NotFound("f does not reach " + std::to_string(target) + " on its domain");
    }
    L.push_back(*v);
  }
  return L;
}

DeltaWitness delta_witness(int l, int N, std::uint64_t seed, int attempts) {
  if (l < 1) throw InvalidArgument("witness length must be positive");
  if (N < 2) throw InvalidArgument("witness component needs N >= 2");
  std::vector<std::uint16_t> cycle(static_cast<std::size_t>(N));
  for (int i = 0; i < N; ++i) cycle[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>((i + 1) % N);
  const Permutation g = Permutation::from_images(cycle);
  const SymBackend sym(N);
  const auto words = enumerate_reduced(2, l);
  std::mt19937_64 rng(seed);
  std::vector<std::uint16_t> perm(static_cast<std::size_t>(N));
  std::iota(perm.begin(), perm.end(), std::uint16_t{0});
  for (int a = 0; a < attempts; ++a) {
    std::shuffle(perm.begin(), perm.end(), rng);
    Permutation sigma = Permutation::from_images(perm);
    Permutation h = sigma.inverse() * g * sigma;
    const std::vector<Permutation> tuple{g, h};
    bool good = true;
    for (const auto& w : words) {
      if (evaluate<SymBackend>(w, tuple, sym).is_identity()) {
        good = false;
        break;
      }
    }
    if (good) return {N, g, h, l};
  }
  throw BudgetExceeded("no witness pair in Sym(" + std::to_string(N) + ") for length " +
                       std::to_string(l));
}

GammaContext::GammaContext(GrowthFunction f, int verify_cap, std::uint64_t seed)
    : f_(std::move(f)), verify_cap_(verify_cap), seed_(seed), sparse_(40) {
  if (verify_cap < 1) throw InvalidArgument("verification cap must be positive");
  if (!f_.eval || f_.eval(1) < 2) throw InvalidArgument("f needs f(1) >= 2");
  if (f_.domain < static_cast<std::uint64_t>(verify_cap)) {
    throw InvalidArgument("f must be known up to the verification cap");
  }
}

std::optional<std::uint64_t> GammaContext::L(int i) const {
  if (i < 1 || i >= sparse_.size()) throw InvalidArgument("schedule index out of range");
  std::lock_guard lock(mutex_);
  for (int m = 1; m <= i; ++m) {
    if (L_.count(m)) continue;
    std::optional<std::uint64_t> prev = m == 1 ? std::optional<std::uint64_t>(0) : L_.at(m - 1);
    if (!prev) {
      L_[m] = std::nullopt;
      continue;
    }
    auto target = static_cast<std::uint64_t>(2 * (sparse_.q(m + 1) - sparse_.p(m + 1) + 1));
    L_[m] = least_reaching(f_, target, *prev + 1);
  }
  return L_.at(i);
}

const DeltaWitness& GammaContext::witness(int i) const {
  if (i < 1) throw InvalidArgument("witness index starts at 1");
  {
    std::lock_guard lock(mutex_);
    auto it = witnesses_.find(i);
    if (it != witnesses_.end()) return *it->second;
  }
  int prev = 4;
  if (i > 1) prev = witness(i - 1).component;
  auto len = L(i);
  std::lock_guard lock(mutex_);
  auto it = witnesses_.find(i);
  if (it != witnesses_.end()) return *it->second;
  // Beyond the domain L(i) exceeds the cap anyway.
  int l = verify_cap_;
  if (len && *len < static_cast<std::uint64_t>(verify_cap_)) l = static_cast<int>(*len);
  const std::uint64_t seed = seed_ + static_cast<std::uint64_t>(i);
  for (int N = std::max(prev + 1, l + 1); N <= prev + 64; ++N) {
    try {
      auto w = std::make_unique<DeltaWitness>(delta_witness(l, N, seed));
      return *witnesses_.emplace(i, std::move(w)).first->second;
    } catch (const BudgetExceeded&) {
    }
  }
  throw BudgetExceeded("no witness component found for index " + std::to_string(i));
}

bool is_identity_windowed(const GammaContext& ctx, const GammaElement& e, int index_bound) {
  if (e.t_exponent() != 0) return false;
  if (e.factors().empty()) return true;
  const SparsePair& s = ctx.sparse();
  if (index_bound < 1 || index_bound > s.size()) throw InvalidArgument("index bound out of range");
  std::int64_t lo = e.factors()[0].shift, hi = lo;
  for (const auto& f : e.factors()) {
    lo = std::min(lo, f.shift);
    hi = std::max(hi, f.shift);
  }
  for (std::int64_t x = lo; x <= hi + s.q(index_bound); ++x) {
    if (!ctx.coordinate(e, x).is_identity()) return false;
  }
  return true;
}

SlowReport verify_slow(const GammaContext& ctx, int n_max) {
  if (n_max < 1) throw InvalidArgument("n_max must be positive");
  SlowReport rep;
  rep.f_name = ctx.f().name;
  for (int m = 1; m <= ctx.sparse().size() - 1; ++m) {
    auto l = ctx.L(m);
    if (!l) break;
    rep.L.push_back(*l);
    if (*l >= static_cast<std::uint64_t>(n_max)) break;
  }
  auto backend = std::make_shared<GammaBackend>(
      std::shared_ptr<const GammaContext>(&ctx, [](const GammaContext*) {}));
  for (int n = 1; n <= n_max; ++n) {
    SlowCertificate row;
    row.n = static_cast<std::uint64_t>(n);
    int j = 1;
    while (true) {
      auto l = ctx.L(j);
      if (!l || *l >= row.n) break;
      ++j;
    }
    row.index = j;
    row.shift = ctx.sparse().q(j) - ctx.sparse().p(j);
    std::vector<Letter> conj;
    for (std::int64_t i = 0; i < row.shift; ++i) conj.push_back(-3);
    conj.push_back(1);
    for (std::int64_t i = 0; i < row.shift; ++i) conj.push_back(3);
    const FreeWord g_word = FreeWord::reduce(3, conj);
    const FreeWord h_word = FreeWord::generator(3, 2);
    row.tuple_cost = g_word.length() + h_word.length();
    row.f_value = ctx.f().eval(row.n);
    const DeltaWitness& wit = ctx.witness(j);
    const SymBackend sym(wit.component);
    const std::vector<GammaElement> tuple{evaluate_generator_word(*backend, g_word),
                                          evaluate_generator_word(*backend, h_word)};
    if (!(tuple[0] == GammaElement({{0, 1, row.shift}}, 0))) {
      rep.failures.push_back("n=" + std::to_string(n) + ": conjugate word has the wrong shift");
    }
    const std::vector<Permutation> direct{wit.g, wit.h};
    std::vector<FreeWord> words;
    for_each_reduced_word(2, n, [&](const FreeWord& w) {
      if (static_cast<int>(w.length()) == n) words.push_back(w);
      return true;
    });
    row.words = words.size();
    std::vector<std::string> errors(words.size());
    parallel_for(words.size(), [&](std::size_t i) {
      const FreeWord& w = words[i];
      GammaElement e = evaluate<GammaBackend>(w, tuple, *backend);
      DirectSumElement at = ctx.coordinate(e, ctx.sparse().q(j));
      Permutation expect = evaluate<SymBackend>(w, direct, sym);
      if (!(at == DirectSumElement::single(expect))) {
        errors[i] = w.str() + ": coordinate evaluation disagrees";
      } else if (expect.is_identity()) {
        errors[i] = w.str() + ": vanishes on the witness pair";
      } else if (ctx.is_identity(e)) {
        errors[i] = w.str() + ": decision procedure reports identity";
      }
    });
    for (auto& e : errors) {
      if (!e.empty()) rep.failures.push_back(std::move(e));
    }
    const auto expected = 2 * static_cast<std::uint64_t>(row.shift + 1);
    row.ok = row.tuple_cost == expected && row.tuple_cost <= row.f_value;
    if (!row.ok) {
      rep.failures.push_back("n=" + std::to_string(n) + ": tuple cost " +
                             std::to_string(row.tuple_cost) + " vs 2(q-p+1) = " +
                             std::to_string(expected) + ", f(n) = " + std::to_string(row.f_value));
    }
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace lawless::slow
