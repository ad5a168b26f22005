#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lawless/group.hpp"
#include "lawless/words.hpp"

namespace lawless::wreath {

/// Element of W_n = C_2 wr ... wr C_2 ((n+1)-fold) acting on {0,1}^(n+1).
///
/// One bit per internal node in heap order: root 0, children of i are
/// 2i+1 (letter 0) and 2i+2 (letter 1). Nodes of depth <= n exist, so there
/// are 2^(n+1) - 1 bits. A vertex is acted on from the root down; a set bit
/// at node v swaps the two subtrees below v. Zero-extension embeds W_m in
/// W_n for m < n without renumbering nodes.
class Portrait {
 public:
  Portrait() = default;
  explicit Portrait(int n);

  int level() const { return n_; }
  std::size_t node_count() const { return (std::size_t{1} << (n_ + 1)) - 1; }
  bool bit(std::size_t node) const { return (bits_[node >> 6] >> (node & 63)) & 1U; }
  void set_bit(std::size_t node, bool value);
  bool is_identity() const;

  /// Image of a leaf, given as n+1 letters in {0,1}.
  std::vector<int> act(const std::vector<int>& leaf) const;
  /// Leaf as an integer with letter i at bit position n-i (so 0^(n+1) is 0).
  std::uint32_t act(std::uint32_t leaf) const;
  /// Heap index of the image of every internal node.
  std::vector<std::size_t> node_images() const;

  /// The same automorphism viewed in W_m for m >= level().
  Portrait extended(int m) const;
  Portrait inverse() const;
  std::string key() const;
  std::string str() const;

  friend Portrait operator*(const Portrait& g, const Portrait& h);
  friend bool operator==(const Portrait&, const Portrait&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Heap index of the node reached by following `path` from the root.
std::size_t node_index(const std::vector<int>& path);

/// The generator a_i of W_n: the single bit at node 0^i.
Portrait generator(int n, int i);

/// W_n with generators S_n = {a_0, ..., a_n}, all involutions.
class WreathBackend {
 public:
  using Element = Portrait;
  static constexpr int kMaxLevel = 20;

  explicit WreathBackend(int n);

  Element identity() const { return Portrait(n_); }
  Element multiply(const Element& g, const Element& h) const { return g * h; }
  Element invert(const Element& g) const { return g.inverse(); }
  bool is_identity(const Element& g) const { return g.is_identity(); }
  std::string key(const Element& g) const { return g.key(); }
  const std::vector<Generator<Element>>& generators() const { return generators_; }
  std::string name() const { return "wreath" + std::to_string(n_); }
  int level() const { return n_; }
  /// |W_n| = 2^(2^(n+1) - 1) as a string (it overflows 64 bits for n >= 6).
  std::string order_string() const;

 private:
  int n_;
  std::vector<Generator<Element>> generators_;
};

/// A word over S_n with free cancellation of equal adjacent letters
/// (generator i is letter i+1; every generator is an involution).
class InvolutionWord {
 public:
  InvolutionWord() = default;
  void push(int generator);
  void append(const InvolutionWord& other);
  InvolutionWord reversed() const;
  std::size_t length() const { return gens_.size(); }
  const std::vector<int>& generators() const { return gens_; }
  Portrait evaluate(int n) const;
  std::string str() const;

 private:
  std::vector<int> gens_;
};

/// h = a_n^e_n ... a_0^e_0 with (0^(n+1))^h = v, where v = e_0 ... e_n.
InvolutionWord schreier(const std::vector<int>& v);

struct LawWitness {
  int n = 0;
  std::vector<Portrait> tuple;
  /// Construction words; their lengths bound the S_n-lengths from above.
  std::vector<InvolutionWord> words;
  /// v_i = (0^(n+1))^{w^(i)(tuple)} for i = 0..|w|, as integers.
  std::vector<std::uint32_t> orbit;
  std::size_t construction_length = 0;
  /// Exact S_n-lengths by BFS, when the group is small enough.
  std::optional<std::size_t> exact_length;
};

/// Inductive witness: w(tuple) != e with the |w|+1 prefix-orbit points of
/// 0^(n+1) pairwise distinct and sum of lengths <= (n+1)^2. Requires
/// 1 <= |w| <= n+1. Throws CertificateFailure if an assertion fails.
LawWitness law_witness(const FreeWord& w, int n);

/// Exact S_n-lengths of all elements of W_n via a saturated BFS, n <= 3.
class LengthOracle {
 public:
  explicit LengthOracle(int n);
  std::size_t length(const Portrait& g) const;
  std::size_t group_order() const { return lengths_.size(); }
  const std::vector<Portrait>& elements() const { return elements_; }

 private:
  int n_;
  std::vector<Portrait> elements_;
  std::vector<std::uint8_t> lengths_;
  std::vector<std::uint32_t> position_;
};

/// Fills exact_length for n <= 3 using `oracle` (which must match n).
void attach_exact_length(LawWitness& witness, const LengthOracle& oracle);

struct LawSearch {
  std::optional<FreeWord> law;
  std::size_t words_checked = 0;
  std::size_t by_witness = 0;
};

/// Shortest nontrivial reduced word in F_k of length <= max_len vanishing on
/// every k-tuple of W_n, first in shortlex order. Words of length <= n+1
/// are dismissed by law_witness; longer ones by exhaustive tuple scan over
/// the full group (n <= 3).
LawSearch shortest_law(int n, int max_len, int k);

}  // namespace lawless::wreath
