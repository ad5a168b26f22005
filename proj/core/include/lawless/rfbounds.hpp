#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lawless/ball.hpp"
#include "lawless/engine.hpp"
#include "lawless/errors.hpp"
#include "lawless/growth_table.hpp"
#include "lawless/permutation.hpp"
#include "lawless/words.hpp"

namespace lawless::rf {

/// Optimal nilpotent-law length exponent log 2 / (log(1 + sqrt 5) - log 2).
double nilpotent_law_alpha();

/// A word in F_k that is a law for every group in a class, with the reason.
struct ClassLaw {
  std::string class_name;
  /// Groups in the class have order <= order_bound.
  std::uint64_t order_bound = 0;
  FreeWord law;
  std::string argument;
};

/// lcm(1..l); throws InvalidArgument when it exceeds max_length.
std::uint64_t lcm_up_to(int l, std::uint64_t max_length = 10'000'000);
/// x1^lcm(1..l) in F_2: element orders in a group of order <= l divide the lcm.
ClassLaw exponent_law(int l);
/// x1^(p^m) in F_2: a law for every p-group of order <= p^m.
ClassLaw p_power_law(int p, int m);
/// [...[[x1, x2], x3], ..., x_{m+1}] in F_{m+1}, of length 3 * 2^m - 2:
/// vanishes on nilpotent groups of class <= m.
ClassLaw nilpotent_law(int m);

struct CatalogGroup {
  std::string name;
  std::uint64_t order = 0;
  /// Nilpotency class, or 0 when not nilpotent.
  int nilpotency_class = 0;
  /// Prime p when the order is a power of p, else 0.
  int prime = 0;
  SymBackend backend;
};

/// All groups of order <= 8 up to isomorphism (trivial group excluded), as
/// permutation groups.
std::vector<CatalogGroup> small_groups();

/// Every element of a finite group, by saturating the Cayley ball.
std::vector<Permutation> elements(const SymBackend& b, std::size_t max_elements = 100'000);

/// Exhaustive: w(tuple) = e for every tuple of group elements.
bool is_law(const SymBackend& b, const FreeWord& w);

struct RFCertificate {
  std::string group;
  ClassLaw law;
  /// Witness tuple as geodesic words over the group generators.
  std::vector<FreeWord> witness;
  std::vector<int> witness_lengths;
  /// law(witness) expanded over the group generators.
  FreeWord element_word;
  /// Exact S-length of the certificate element when the ball reached it.
  std::optional<int> element_length;
  /// |law| * max |witness_i|.
  std::uint64_t length_bound = 0;
  bool reverified = false;
  /// Reading: F_C(length) > order_bound.
  std::string statement() const;
};

/// Finds a witness tuple of minimal total length with law(tuple) != e and
/// assembles the certificate; the element is re-checked by evaluating its
/// expanded word. Throws BudgetExceeded when no witness has total length
/// <= budget, and CertificateFailure if re-verification fails.
template <KeyedBackend B>
RFCertificate rf_lower_bound(Ball<B>& ball, const ClassLaw& law, int budget,
                             int length_radius = 24) {
  const B& b = ball.backend();
  auto res = complexity(ball, law.law, budget);
  if (res.status != Status::exact) {
    throw BudgetExceeded("no witness of total length <= " + std::to_string(budget) + " for " +
                         law.law.str());
  }
  RFCertificate c;
  c.group = b.name();
  c.law = law;
  const int gens = static_cast<int>(b.generators().size());
  int longest = 0;
  for (const auto& g : res.witness) {
    auto i = ball.find(g);
    if (!i) throw CertificateFailure("witness element missing from the ball");
    c.witness.push_back(ball.word(*i));
    c.witness_lengths.push_back(ball.length(*i));
    longest = std::max(longest, ball.length(*i));
  }
  std::vector<FreeWord> images;
  for (const auto& w : c.witness) images.push_back(w.with_rank(gens));
  {
    std::vector<Letter> letters;
    for (Letter l : law.law.letters()) {
      const FreeWord& img = images[static_cast<std::size_t>(std::abs(l) - 1)];
      const FreeWord part = l > 0 ? img : img.inverse();
      letters.insert(letters.end(), part.letters().begin(), part.letters().end());
    }
    c.element_word = FreeWord::reduce(gens, letters);
  }
  c.length_bound = static_cast<std::uint64_t>(law.law.length()) * static_cast<std::uint64_t>(longest);
  const auto element = evaluate_generator_word(b, c.element_word);
  c.reverified = !b.is_identity(element) &&
                 !b.is_identity(evaluate<B>(law.law, res.witness, b));
  if (!c.reverified) throw CertificateFailure("certificate element is trivial");
  try {
    c.element_length = ball.length_of(element, length_radius);
  } catch (const BudgetExceeded&) {
  }
  if (c.element_length && static_cast<std::uint64_t>(*c.element_length) > c.length_bound) {
    throw CertificateFailure("certificate element longer than |w| * max |g_i|");
  }
  return c;
}

}  // namespace lawless::rf
