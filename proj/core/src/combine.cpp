#include <algorithm>

#include "lawless/engine.hpp"

namespace lawless {

namespace {

FreeWord combine_pair(const FreeWord& u, const FreeWord& v, const std::vector<FreeWord>& conjugators) {
  for (const auto& c : conjugators) {
    for (const auto& d : conjugators) {
      FreeWord w = commutator(conjugate(u, c), conjugate(v, d));
      if (!w.empty()) return w;
    }
  }
  throw CertificateFailure("no conjugators of length <= 2 separate " + u.str() + " and " + v.str());
}

FreeWord combine_range(const std::vector<FreeWord>& words, std::size_t lo, std::size_t hi,
                       const std::vector<FreeWord>& conjugators) {
  if (hi - lo == 1) return words[lo];
  std::size_t mid = lo + (hi - lo + 1) / 2;
  return combine_pair(combine_range(words, lo, mid, conjugators),
                      combine_range(words, mid, hi, conjugators), conjugators);
}

}  // namespace

FreeWord combine(const std::vector<FreeWord>& words) {
  if (words.empty()) throw InvalidArgument("combine needs at least one word");
  int rank = 0;
  std::size_t longest = 0;
  for (const auto& w : words) {
    if (w.empty()) throw InvalidArgument("combine needs nontrivial words");
    rank = std::max(rank, w.rank());
    longest = std::max(longest, w.length());
  }
  if (words.size() == 1) return words.front();
  if (rank < 2) throw InvalidArgument("combining several words needs rank >= 2");
  std::vector<FreeWord> lifted;
  for (const auto& w : words) lifted.push_back(w.with_rank(rank));

  std::vector<FreeWord> conjugators{FreeWord(rank)};
  for (const auto& c : enumerate_reduced(rank, 2)) conjugators.push_back(c);

  FreeWord w = combine_range(lifted, 0, lifted.size(), conjugators);
  const std::size_t m = words.size();
  const std::size_t bound = 16 * m * m * longest;
  if (w.length() > bound) {
    throw LengthBoundViolated("combined word has length " + std::to_string(w.length()) +
                              " > 16 m^2 max|w_i| = " + std::to_string(bound));
  }
  return w;
}

}  // namespace lawless
