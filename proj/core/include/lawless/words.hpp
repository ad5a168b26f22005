#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lawless {

/// A letter is a signed generator index: +i for x_i, -i for x_i^-1 (i >= 1).
using Letter = int;

/// Reduced word in the free group F_k on x_1..x_k.
///
/// Stored as a flat array of signed letters, always freely reduced, so
/// structural equality is group equality.
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(int rank) : rank_(rank) {}

  /// Freely reduces `letters`. Throws InvalidArgument on a letter outside
  /// +-1..+-rank.
  static FreeWord reduce(int rank, std::span<const Letter> letters);
  static FreeWord generator(int rank, int index, int sign = 1);
  /// Parses `aBa`-style (a = x1, B = x2^-1) or `x1X2x1`-style words.
  static FreeWord parse(std::string_view text, int rank);

  int rank() const { return rank_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::span<const Letter> letters() const { return letters_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter back() const { return letters_.back(); }

  FreeWord inverse() const;
  FreeWord pow(long long e) const;
  /// First m letters.
  FreeWord prefix(std::size_t m) const;
  /// The same word viewed in F_rank for rank >= this->rank().
  FreeWord with_rank(int rank) const;

  bool is_cyclically_reduced() const;

  /// Letter-mode output for rank <= 26, token mode otherwise. The empty word
  /// prints as "1".
  std::string str() const;

  friend FreeWord operator*(const FreeWord& u, const FreeWord& v);
  friend bool operator==(const FreeWord& u, const FreeWord& v) = default;
  friend auto operator<=>(const FreeWord& u, const FreeWord& v) = default;

 private:
  int rank_ = 0;
  std::vector<Letter> letters_;
};

FreeWord commutator(const FreeWord& u, const FreeWord& v);
FreeWord conjugate(const FreeWord& u, const FreeWord& by);

/// Total order on letters used for enumeration and tie-breaking:
/// x1 < X1 < x2 < X2 < ...
int letter_rank(Letter l);

/// Shortlex comparison using letter_rank.
bool shortlex_less(const FreeWord& u, const FreeWord& v);

struct CyclicDecomposition {
  FreeWord conjugator;
  FreeWord core;
};

/// w = conjugator * core * conjugator^-1 with core cyclically reduced.
CyclicDecomposition cyclic_reduce(const FreeWord& w);

struct Root {
  FreeWord root;
  long long exponent;
};

/// Maximal e with w = root^e. Throws InvalidArgument for the trivial word.
Root free_root(const FreeWord& w);

/// Number of reduced words of length exactly l in F_k.
std::uint64_t reduced_word_count(int k, int l);
/// |B(l)| in F_k with respect to a free basis.
std::uint64_t free_ball_size(int k, int l);

/// Calls `visit` on every nontrivial reduced word of length <= max_length,
/// in shortlex order. Returning false from `visit` stops the enumeration.
void for_each_reduced_word(int k, int max_length,
                           const std::function<bool(const FreeWord&)>& visit);
std::vector<FreeWord> enumerate_reduced(int k, int max_length);

struct FreeWordHash {
  std::size_t operator()(const FreeWord& w) const noexcept;
};

}  // namespace lawless
