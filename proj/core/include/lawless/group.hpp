#pragma once

#include <concepts>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lawless/errors.hpp"
#include "lawless/words.hpp"

namespace lawless {

template <class E>
struct Generator {
  std::string name;
  E element;
  bool involution = false;
};

/// The backend contract every concrete group implements. Multiplication is
/// written left to right: multiply(g, h) is "g, then h".
template <class B>
concept GroupBackend = requires(const B& b, const typename B::Element& g) {
  typename B::Element;
  { b.identity() } -> std::convertible_to<typename B::Element>;
  { b.multiply(g, g) } -> std::convertible_to<typename B::Element>;
  { b.invert(g) } -> std::convertible_to<typename B::Element>;
  { b.is_identity(g) } -> std::convertible_to<bool>;
  { b.generators() } -> std::convertible_to<const std::vector<Generator<typename B::Element>>&>;
  { b.name() } -> std::convertible_to<std::string>;
};

/// Backends whose elements have a canonical form. Equal keys iff equal
/// elements.
template <class B>
concept KeyedBackend = GroupBackend<B> && requires(const B& b, const typename B::Element& g) {
  { b.key(g) } -> std::convertible_to<std::string>;
};

template <GroupBackend B>
bool equal(const B& b, const typename B::Element& g, const typename B::Element& h) {
  if constexpr (KeyedBackend<B>) {
    return b.key(g) == b.key(h);
  } else {
    return b.is_identity(b.multiply(g, b.invert(h)));
  }
}

template <GroupBackend B>
typename B::Element power(const B& b, typename B::Element g, long long e) {
  if (e < 0) {
    g = b.invert(g);
    e = -e;
  }
  auto result = b.identity();
  while (e > 0) {
    if (e & 1) result = b.multiply(result, g);
    e >>= 1;
    if (e > 0) g = b.multiply(g, g);
  }
  return result;
}

template <GroupBackend B>
typename B::Element commutator(const B& b, const typename B::Element& g,
                               const typename B::Element& h) {
  return b.multiply(b.multiply(b.invert(g), b.invert(h)), b.multiply(g, h));
}

/// Image of `w` under x_i -> tuple[i-1]. The empty word maps to the identity.
template <GroupBackend B>
typename B::Element evaluate(const FreeWord& w, std::span<const typename B::Element> tuple,
                             const B& b) {
  if (static_cast<int>(tuple.size()) < w.rank()) {
    throw InvalidArgument("evaluation tuple shorter than the word's rank");
  }
  std::vector<std::optional<typename B::Element>> inverses(tuple.size());
  auto result = b.identity();
  for (Letter l : w.letters()) {
    std::size_t i = static_cast<std::size_t>(l > 0 ? l : -l) - 1;
    if (l > 0) {
      result = b.multiply(result, tuple[i]);
    } else {
      if (!inverses[i]) inverses[i] = b.invert(tuple[i]);
      result = b.multiply(result, *inverses[i]);
    }
  }
  return result;
}

template <GroupBackend B>
typename B::Element evaluate(const FreeWord& w, const std::vector<typename B::Element>& tuple,
                             const B& b) {
  return evaluate<B>(w, std::span<const typename B::Element>(tuple), b);
}

/// Evaluates a word written in the backend's own generators (letter i is
/// generator i-1).
template <GroupBackend B>
typename B::Element evaluate_generator_word(const B& b, const FreeWord& w) {
  std::vector<typename B::Element> gens;
  for (const auto& g : b.generators()) gens.push_back(g.element);
  return evaluate<B>(w, std::span<const typename B::Element>(gens), b);
}

/// Least m >= 1 with g^m = e, using at most `budget` multiplications.
/// nullopt means the order is unknown within the budget, never a wrong value.
template <GroupBackend B>
std::optional<std::uint64_t> order(const typename B::Element& g, const B& b, std::uint64_t budget) {
  auto x = g;
  for (std::uint64_t m = 1; m <= budget + 1; ++m) {
    if (b.is_identity(x)) return m;
    if (m == budget + 1) break;
    x = b.multiply(x, g);
  }
  return std::nullopt;
}

/// Order of an element known to lie in a 2-group, by repeated squaring:
/// returns 2^j for the least j with g^(2^j) = e. Exact, since g^(2^j) = e
/// forces the order to divide 2^j while g^(2^(j-1)) != e rules out smaller
/// divisors.
template <GroupBackend B>
std::optional<std::uint64_t> order_two_power(const typename B::Element& g, const B& b,
                                             int max_squarings) {
  auto x = g;
  std::uint64_t m = 1;
  for (int j = 0; j <= max_squarings; ++j) {
    if (b.is_identity(x)) return m;
    if (j == max_squarings) break;
    x = b.multiply(x, x);
    m *= 2;
  }
  return std::nullopt;
}

}  // namespace lawless
