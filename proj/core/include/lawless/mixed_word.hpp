#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lawless/group.hpp"
#include "lawless/words.hpp"

namespace lawless {

/// One factor a x^k of a mixed word. The coefficient is a word in the
/// backend's generators (letter i = generator i-1).
struct MixedSegment {
  FreeWord coefficient;
  long long exponent = 0;

  friend bool operator==(const MixedSegment&, const MixedSegment&) = default;
};

/// Element of Gamma * <x> in the alternating form a_1 x^k_1 ... a_l x^k_l.
///
/// Invariants: a_1 may be empty, every later coefficient is nonempty;
/// k_i != 0 except possibly the last. The identity has no segments.
class MixedWord {
 public:
  MixedWord() = default;
  explicit MixedWord(int coefficient_rank) : rank_(coefficient_rank) {}

  /// Grammar: `<ab>x^-2<B>x`. Coefficients in `<...>` use the word grammar
  /// over the backend's generators; `x` or `X` with optional `^k`. Throws
  /// InvalidArgument on syntax errors and on an interior coefficient that is
  /// syntactically trivial.
  static MixedWord parse(std::string_view text, int coefficient_rank);

  void append_coefficient(const FreeWord& a);
  void append_power(long long k);
  void append(const MixedWord& other);

  int coefficient_rank() const { return rank_; }
  const std::vector<MixedSegment>& segments() const { return segments_; }
  bool empty() const { return segments_.empty(); }
  /// True when no x occurs.
  bool is_constant() const;
  /// Sum of coefficient word lengths plus sum of |k_i|.
  std::size_t length() const;
  /// Sum of the exponents.
  long long x_degree() const;
  MixedWord inverse() const;
  std::string str() const;

  /// Cyclic rotation so that the word starts with a nonempty coefficient and
  /// ends with a nonzero power, as in a_1 x^k_1 ... a_l x^k_l. Conjugate to
  /// the input. Returns the rotated word; the input must not be constant.
  MixedWord cyclic_normal_form() const;

  /// Replaces every coefficient trivial in `b` by the empty word and
  /// re-merges until the form is stable.
  template <GroupBackend B>
  MixedWord normalized(const B& b) const {
    MixedWord cur = *this;
    for (;;) {
      MixedWord next(rank_);
      bool changed = false;
      for (const auto& s : cur.segments_) {
        if (!s.coefficient.empty() && b.is_identity(evaluate_generator_word(b, s.coefficient))) {
          changed = true;
        } else {
          next.append_coefficient(s.coefficient);
        }
        next.append_power(s.exponent);
      }
      if (!changed) return cur;
      cur = std::move(next);
    }
  }

  /// Throws InvalidArgument if an interior coefficient is trivial in `b`.
  template <GroupBackend B>
  void validate(const B& b) const {
    for (std::size_t i = 1; i < segments_.size(); ++i) {
      if (b.is_identity(evaluate_generator_word(b, segments_[i].coefficient))) {
        throw InvalidArgument("interior coefficient is trivial: " + str());
      }
    }
  }

  friend MixedWord operator*(const MixedWord& u, const MixedWord& v);
  friend bool operator==(const MixedWord&, const MixedWord&) = default;

 private:
  int rank_ = 0;
  std::vector<MixedSegment> segments_;
};

/// Image of `mw` under the retraction Gamma * <x> -> Gamma with x -> g.
template <GroupBackend B>
typename B::Element substitute_mixed(const MixedWord& mw, const typename B::Element& g,
                                     const B& b) {
  auto result = b.identity();
  for (const auto& s : mw.segments()) {
    if (!s.coefficient.empty()) result = b.multiply(result, evaluate_generator_word(b, s.coefficient));
    if (s.exponent != 0) result = b.multiply(result, power(b, g, s.exponent));
  }
  return result;
}

/// Parses and checks the interior-coefficient invariant against `b`.
template <GroupBackend B>
MixedWord parse_mixed(std::string_view text, const B& b) {
  auto mw = MixedWord::parse(text, static_cast<int>(b.generators().size()));
  mw.validate(b);
  return mw;
}

}  // namespace lawless
