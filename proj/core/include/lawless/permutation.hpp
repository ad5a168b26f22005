#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lawless/group.hpp"

namespace lawless {

/// Permutation of {1..N}, stored 0-based: image_[i] is the image of i+1, minus one.
/// Acts on the right: (g * h)(i) = h(g(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int degree);
  /// Throws InvalidArgument unless `images` (0-based) is a bijection.
  static Permutation from_images(std::vector<std::uint16_t> images);
  /// Parses cycle notation such as "(1 2 3)(4 5)"; "()" is the identity.
  static Permutation parse_cycles(std::string_view text, int degree);

  int degree() const { return static_cast<int>(image_.size()); }
  /// 1-based image.
  int operator()(int point) const { return image_[static_cast<std::size_t>(point - 1)] + 1; }
  bool is_identity() const;
  Permutation inverse() const;
  /// Least common multiple of the cycle lengths.
  std::uint64_t order() const;
  std::vector<std::vector<int>> cycles() const;
  std::string str() const;
  std::string key() const { return std::string(reinterpret_cast<const char*>(image_.data()), image_.size() * 2); }

  friend Permutation operator*(const Permutation& g, const Permutation& h);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint16_t> image_;
};

/// Sym(N) with configurable generators (default: (1 2) and (1 2 ... N)).
class SymBackend {
 public:
  using Element = Permutation;

  explicit SymBackend(int degree);
  SymBackend(int degree, const std::vector<Permutation>& generators, std::string name = "");

  Element identity() const { return Permutation(degree_); }
  Element multiply(const Element& g, const Element& h) const { return g * h; }
  Element invert(const Element& g) const { return g.inverse(); }
  bool is_identity(const Element& g) const { return g.is_identity(); }
  std::string key(const Element& g) const { return g.key(); }
  const std::vector<Generator<Element>>& generators() const { return generators_; }
  std::string name() const { return name_; }
  int degree() const { return degree_; }

 private:
  int degree_;
  std::string name_;
  std::vector<Generator<Element>> generators_;
};

/// Element of the restricted direct sum of Sym(n), n = 1, 2, ...: a finite map
/// from component n to a non-identity permutation of degree n.
class DirectSumElement {
 public:
  DirectSumElement() = default;
  static DirectSumElement single(const Permutation& p);

  const std::map<int, Permutation>& components() const { return parts_; }
  bool is_identity() const { return parts_.empty(); }
  DirectSumElement inverse() const;
  std::string key() const;
  std::string str() const;

  friend DirectSumElement operator*(const DirectSumElement& g, const DirectSumElement& h);
  friend bool operator==(const DirectSumElement&, const DirectSumElement&) = default;

 private:
  std::map<int, Permutation> parts_;
};

class DirectSumBackend {
 public:
  using Element = DirectSumElement;

  /// Default generators: a transposition and an n-cycle in each component
  /// 2..max_component.
  explicit DirectSumBackend(int max_component);
  explicit DirectSumBackend(const std::vector<DirectSumElement>& generators);

  Element identity() const { return {}; }
  Element multiply(const Element& g, const Element& h) const { return g * h; }
  Element invert(const Element& g) const { return g.inverse(); }
  bool is_identity(const Element& g) const { return g.is_identity(); }
  std::string key(const Element& g) const { return g.key(); }
  const std::vector<Generator<Element>>& generators() const { return generators_; }
  std::string name() const { return "dsum"; }

 private:
  std::vector<Generator<Element>> generators_;
};

}  // namespace lawless
