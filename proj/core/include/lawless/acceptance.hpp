#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lawless/mixed_word.hpp"

namespace lawless::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct Options {
  /// Also certify Phi_2 (word problem on million-letter images).
  bool long_running = false;
  std::uint64_t seed = 20240101;
};

CriterionResult oracle_equivalence(const Options& o);
CriterionResult bounded_free(const Options& o);
CriterionResult wreath_laws(const Options& o);
CriterionResult combiner(const Options& o);
CriterionResult grigorchuk(const Options& o);
CriterionResult thompson(const Options& o);
CriterionResult golod_shafarevich(const Options& o);
CriterionResult slow_growth(const Options& o);
CriterionResult mixed_identities(const Options& o);
CriterionResult rf_certificates(const Options& o);

/// Runs criteria 1..10 in order.
std::vector<CriterionResult> run_all(const Options& o);
/// "PASS 3 wreath laws (1.2s): detail"
std::string format(const CriterionResult& r);

/// Nontrivial reduced word with |w| <= max_length in F_rank.
FreeWord random_word(int rank, int max_length, std::mt19937_64& rng);
/// Normalized mixed word over F_rank of length <= max_length containing x
/// and not conjugate to a pure power of x.
MixedWord random_mixed_word(int rank, int max_length, std::mt19937_64& rng);

}  // namespace lawless::acceptance
