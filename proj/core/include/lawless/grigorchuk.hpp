#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lawless/group.hpp"
#include "lawless/growth_table.hpp"
#include "lawless/words.hpp"

namespace lawless::grig {

// ---- Words over {a, b, c, d} ----

/// Klein-normal form: alternating a's and single letters of {b, c, d},
/// using a^2 = b^2 = c^2 = d^2 = e and bc = d, cd = b, db = c.
std::string normalize(std::string_view word);

struct Sections {
  bool active = false;
  std::string s0;
  std::string s1;
};

/// One-level decomposition g = (g_0, g_1) a^active of a word, using
/// b = (a, c), c = (a, d), d = (e, b). Sections are normalized.
Sections sections(std::string_view word);

/// Word problem by contraction: odd a-count means nontrivial, otherwise
/// recurse on both sections. Memoized per call on normal forms.
bool is_identity_word(std::string_view word);

/// Inverse of a word (reversal, since every generator is an involution).
std::string inverse_word(std::string_view word);

/// Commutator g^-1 h^-1 g h, normalized.
std::string commutator_word(std::string_view g, std::string_view h);

/// Converts a word in the ball's generator letters (a=1..d=4) to a string.
std::string from_free_word(const FreeWord& w);

// ---- Nucleus portraits ----

enum class Nucleus : std::uint8_t { e, a, b, c, d };

/// Finite portrait over the nucleus {e, a, b, c, d}: either a leaf or a node
/// (activity, section at 0, section at 1). Canonical: no node equals a
/// nucleus element, so structural equality is group equality.
class Portrait {
 public:
  Portrait();
  static Portrait leaf(Nucleus n);
  /// Builds a node and contracts it if it equals a nucleus element.
  static Portrait node(bool active, const Portrait& s0, const Portrait& s1);
  static Portrait from_word(std::string_view word);

  bool is_leaf() const;
  Nucleus leaf_value() const;
  bool active() const;
  /// Section at letter i (after expanding a leaf one level).
  Portrait section(int i) const;
  /// Section at a vertex given as a string of '0'/'1', for an element
  /// fixing every prefix of that vertex. Throws InvalidArgument otherwise.
  Portrait section_at(std::string_view vertex) const;
  /// True if the element fixes every vertex of level n.
  bool in_level_stabilizer(int n) const;
  bool is_identity() const;
  int depth() const;
  Portrait inverse() const;
  /// Preorder serialization; equal keys iff equal elements.
  std::string key() const;
  /// Action on a finite vertex string of '0'/'1'.
  std::string act(std::string_view vertex) const;

  friend Portrait operator*(const Portrait& g, const Portrait& h);
  friend bool operator==(const Portrait& g, const Portrait& h);

  struct Node;

 private:
  explicit Portrait(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Grigorchuk's group with S = {a, b, c, d}, all involutions.
class GrigBackend {
 public:
  using Element = Portrait;

  GrigBackend();

  Element identity() const { return Portrait(); }
  Element multiply(const Element& g, const Element& h) const { return g * h; }
  Element invert(const Element& g) const { return g.inverse(); }
  bool is_identity(const Element& g) const { return g.is_identity(); }
  std::string key(const Element& g) const { return g.key(); }
  const std::vector<Generator<Element>>& generators() const { return generators_; }
  std::string name() const { return "grig"; }

 private:
  std::vector<Generator<Element>> generators_;
};

/// Exact order by repeated squaring; nullopt if g^(2^max_squarings) != e.
std::optional<std::uint64_t> order(const Portrait& g, int max_squarings = 40);

struct TorsionReport {
  GrowthTable pi;
  /// Every order in the ball was a power of two and matched a sequential
  /// order computation.
  bool all_powers_of_two = true;
  std::size_t elements = 0;
  /// max o(g) / |g|^{3/2} over nonidentity g.
  double max_ratio = 0;
};

TorsionReport torsion_growth(int n, std::size_t max_elements = 4'000'000);

/// y_0 = abab, y_1 found by BFS, y_n = [y_{n-1}, y_{n-2}].
struct RestrictedElements {
  std::vector<std::string> words;
  std::vector<Portrait> portraits;
  /// BFS radius at which y_1 was found (its exact S-length).
  int y1_length = 0;
};

/// Constructs y_0..y_n and checks the postcondition for each: y_i fixes
/// level i, its section at 0^i is x, all other level-i sections are
/// trivial. Throws CertificateFailure on failure, Error if y_1 is not found
/// within `bfs_radius`.
RestrictedElements restricted_elements(int n, int bfs_radius = 16);

/// Postcondition check for a single y_n portrait.
bool is_restricted_x(const Portrait& y, int n);

struct PhiCertificate {
  int n = 0;
  std::vector<std::string> images;  // k_1..k_{n+1}
  bool orders_two = false;
  bool rigid_sections = false;
  bool x4_sections = false;
  bool injective_portraits = false;
  bool injective_words = false;
  bool words_checked = false;
  bool homomorphism_spot_checks = false;
  std::size_t nontrivial_elements = 0;
  std::size_t longest_image = 0;
  bool ok() const;
};

/// Certificate for Phi_n: W_n -> Gamma, a_i -> y_{5i}^4. The word problem
/// check of every image runs when `check_words` is set (n <= 1 is quick;
/// n = 2 images reach about 67k letters).
PhiCertificate phi(int n, bool check_words, std::uint64_t seed = 1, int spot_checks = 100);

struct PowerComplexity {
  int m = 0;
  Status status = Status::not_applicable;
  int value = 0;
  std::string witness;
};

/// chi(x^(2^m)): least |g| with g^(2^m) != e, by direct ball scan.
PowerComplexity power_complexity(int m, int budget, std::size_t max_elements = 4'000'000);

}  // namespace lawless::grig
