#pragma once

#include <string>
#include <vector>

#include "lawless/group.hpp"
#include "lawless/words.hpp"

namespace lawless {

/// F_k on its free basis. The word problem is emptiness of the reduced form.
class FreeBackend {
 public:
  using Element = FreeWord;

  explicit FreeBackend(int rank);

  Element identity() const { return FreeWord(rank_); }
  Element multiply(const Element& g, const Element& h) const { return g * h; }
  Element invert(const Element& g) const { return g.inverse(); }
  bool is_identity(const Element& g) const { return g.empty(); }
  std::string key(const Element& g) const { return g.str(); }
  const std::vector<Generator<Element>>& generators() const { return generators_; }
  std::string name() const { return "free" + std::to_string(rank_); }
  int rank() const { return rank_; }

 private:
  int rank_;
  std::vector<Generator<Element>> generators_;
};

}  // namespace lawless
