#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "lawless/group.hpp"
#include "lawless/permutation.hpp"
#include "lawless/sparse.hpp"
#include "lawless/words.hpp"

namespace lawless::slow {

/// Nondecreasing f: N -> N with f(1) >= 2, known on [1, domain].
struct GrowthFunction {
  std::string name;
  std::function<std::uint64_t(std::uint64_t)> eval;
  std::uint64_t domain = std::uint64_t{1} << 62;

  static GrowthFunction identity();
  /// floor(log2 n) + 2.
  static GrowthFunction log2_plus_two();
  /// values[n-1] = f(n). Throws InvalidArgument unless nondecreasing with
  /// f(1) >= 2.
  static GrowthFunction table(std::vector<std::uint64_t> values);
};

/// Least n >= lo with f(n) >= target, or nullopt if f stays below target on
/// its domain.
std::optional<std::uint64_t> least_reaching(const GrowthFunction& f, std::uint64_t target,
                                            std::uint64_t lo = 1);

/// L(1..M): minimal strictly increasing L with f(L(m)) >= 2(q(m+1) - p(m+1) + 1).
/// Throws NotFound when f does not reach a target inside its domain.
std::vector<std::uint64_t> schedule_L(const GrowthFunction& f, int M);

struct DeltaWitness {
  int component = 0;  // N: the pair lives in Sym(N)
  Permutation g;
  Permutation h;
  /// Every nontrivial word of length <= verified_length is nonzero on (g, h).
  int verified_length = 0;
};

/// A pair in Sym(N): g the standard N-cycle, h a seeded random conjugate of
/// g, with v(g, h) != e for all nontrivial |v| <= l. Throws BudgetExceeded if
/// `attempts` conjugates all fail.
DeltaWitness delta_witness(int l, int N, std::uint64_t seed = 1, int attempts = 2000);

/// Factor f^(sign) conjugated by t^shift; f^(t^s)(n) = f(n - s).
struct GammaFactor {
  int type = 0;  // 0: g-hat, 1: h-hat
  int sign = 1;
  std::int64_t shift = 0;
  friend bool operator==(const GammaFactor&, const GammaFactor&) = default;
};

/// Element of Gamma(L): f_1 ... f_r t^m with factors freely reduced.
class GammaElement {
 public:
  GammaElement() = default;
  GammaElement(std::vector<GammaFactor> factors, std::int64_t t_exponent);

  static GammaElement g_hat() { return GammaElement({{0, 1, 0}}, 0); }
  static GammaElement h_hat() { return GammaElement({{1, 1, 0}}, 0); }
  static GammaElement t() { return GammaElement({}, 1); }

  const std::vector<GammaFactor>& factors() const { return factors_; }
  std::int64_t t_exponent() const { return t_; }
  GammaElement inverse() const;
  std::string str() const;

  friend GammaElement operator*(const GammaElement& a, const GammaElement& b);
  friend bool operator==(const GammaElement&, const GammaElement&) = default;

 private:
  void push(const GammaFactor& f);

  std::vector<GammaFactor> factors_;
  std::int64_t t_ = 0;
};

/// Materializes g-hat, h-hat for a schedule L: coordinate p(i) of g-hat is
/// g of the index-i witness, coordinate q(i) of h-hat is its h. Witnesses
/// are verified on words of length l_i = min(L(i), cap) and live in Sym(N_i),
/// N_i the least N >= max(N_{i-1} + 1, l_i + 1, 5) admitting a witness, so
/// witness orders strictly increase.
class GammaContext {
 public:
  explicit GammaContext(GrowthFunction f, int verify_cap = 6, std::uint64_t seed = 1);

  const GrowthFunction& f() const { return f_; }
  int verify_cap() const { return verify_cap_; }
  /// L(i), or nullopt when it lies beyond the domain of f.
  std::optional<std::uint64_t> L(int i) const;
  const SparsePair& sparse() const { return sparse_; }
  const DeltaWitness& witness(int i) const;

  /// Coordinate value of a single generator type at position x.
  DirectSumElement generator_value(int type, std::int64_t x) const;
  DirectSumElement coordinate(const GammaElement& e, std::int64_t x) const;

  /// Decision procedure: t-exponent 0, every (type, shift) class has net sign
  /// 0, and the value is trivial at every point lying in >= 2 class images.
  bool is_identity(const GammaElement& e) const;
  /// Points lying in the translated images of at least two classes of e.
  std::vector<std::int64_t> exceptional_coordinates(const GammaElement& e) const;

 private:
  GrowthFunction f_;
  int verify_cap_;
  std::uint64_t seed_;
  SparsePair sparse_;
  mutable std::mutex mutex_;
  mutable std::map<int, std::optional<std::uint64_t>> L_;
  mutable std::map<int, std::unique_ptr<DeltaWitness>> witnesses_;
};

/// Gamma(L) on S = {g-hat, h-hat, t}. No canonical key: equality is decided
/// by GammaContext::is_identity on quotients.
class GammaBackend {
 public:
  using Element = GammaElement;

  explicit GammaBackend(std::shared_ptr<const GammaContext> ctx);

  Element identity() const { return {}; }
  Element multiply(const Element& a, const Element& b) const { return a * b; }
  Element invert(const Element& a) const { return a.inverse(); }
  bool is_identity(const Element& a) const { return ctx_->is_identity(a); }
  const std::vector<Generator<Element>>& generators() const { return generators_; }
  std::string name() const { return "gamma(" + ctx_->f().name + ")"; }
  const GammaContext& context() const { return *ctx_; }

 private:
  std::shared_ptr<const GammaContext> ctx_;
  std::vector<Generator<Element>> generators_;
};

/// Oracle for is_identity: t-exponent 0 and every coordinate trivial on a
/// window covering all class images up to index `index_bound`. Exact when
/// index_bound passes every exceptional index and the witness there has
/// order exceeding every net class exponent.
bool is_identity_windowed(const GammaContext& ctx, const GammaElement& e, int index_bound);

struct SlowCertificate {
  std::uint64_t n = 0;
  int index = 0;              // least j with n <= L(j)
  std::int64_t shift = 0;     // q(j) - p(j)
  /// Total S-length of the tuple words t^-s g t^s and h.
  std::uint64_t tuple_cost = 0;
  std::uint64_t f_value = 0;
  std::size_t words = 0;
  bool ok = false;
};

struct SlowReport {
  std::string f_name;
  std::vector<std::uint64_t> L;
  std::vector<SlowCertificate> rows;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// For every nontrivial w with |w| = n <= n_max, evaluates w at
/// (g-hat^(t^(q(j)-p(j))), h-hat), built from S-words, checks the coordinate q(j) value against
/// w(g, h) computed directly in the witness component, and checks
/// that the tuple cost equals 2(q(j) - p(j) + 1) and is <= f(n).
SlowReport verify_slow(const GammaContext& ctx, int n_max);

}  // namespace lawless::slow
