#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lawless/ball.hpp"
#include "lawless/errors.hpp"
#include "lawless/group.hpp"
#include "lawless/growth_table.hpp"
#include "lawless/mixed_word.hpp"
#include "lawless/parallel.hpp"
#include "lawless/words.hpp"

namespace lawless {

/// Outcome of a complexity search. For exact, `value` is chi(w) and
/// `witness` a tuple of that total length with w(witness) != e. For
/// budget_exceeded, chi(w) > value or w is a law.
template <class E>
struct ComplexityResult {
  Status status = Status::not_applicable;
  int value = 0;
  std::vector<E> witness;
};

namespace detail {

/// Calls visit(parts) for every composition of m into k nonnegative parts,
/// in lexicographic order. Stops when visit returns true.
inline bool for_each_composition(int m, int k, const std::function<bool(const std::vector<int>&)>& visit) {
  std::vector<int> parts(static_cast<std::size_t>(k), 0);
  std::function<bool(int, int)> rec = [&](int i, int left) -> bool {
    if (i == k - 1) {
      parts[static_cast<std::size_t>(i)] = left;
      return visit(parts);
    }
    for (int p = 0; p <= left; ++p) {
      parts[static_cast<std::size_t>(i)] = p;
      if (rec(i + 1, left - p)) return true;
    }
    return false;
  };
  return rec(0, m);
}

/// Iterates over every k-tuple of ball elements with lengths `parts`.
/// Stops and returns true when accept(tuple) does.
template <GroupBackend B>
bool for_each_tuple(const Ball<B>& ball, const std::vector<int>& parts,
                    const std::function<bool(const std::vector<typename B::Element>&)>& accept) {
  const std::size_t k = parts.size();
  std::vector<typename B::Element> tuple(k, ball.element(0));
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == k) return accept(tuple);
    auto s = ball.stratum(parts[i]);
    for (std::size_t j = s.begin; j < s.end; ++j) {
      tuple[i] = ball.element(j);
      if (rec(i + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

/// Least m in [1, max_m] with a k-tuple of total length m not killed by w.
/// Requires ball.radius() >= max_m.
template <GroupBackend B>
std::optional<int> search_complexity(const Ball<B>& ball, const FreeWord& w, int max_m,
                                     std::vector<typename B::Element>& witness) {
  const B& b = ball.backend();
  const int k = w.rank();
  for (int m = 1; m <= max_m; ++m) {
    bool found = for_each_composition(m, k, [&](const std::vector<int>& parts) {
      return for_each_tuple<B>(ball, parts, [&](const std::vector<typename B::Element>& t) {
        if (b.is_identity(evaluate<B>(w, t, b))) return false;
        witness = t;
        return true;
      });
    });
    if (found) return m;
  }
  return std::nullopt;
}

}  // namespace detail

/// chi(w): least total S-length of a k-tuple (k = w.rank()) with
/// w(tuple) != e, searched up to total length `budget`.
template <GroupBackend B>
ComplexityResult<typename B::Element> complexity(Ball<B>& ball, const FreeWord& w, int budget) {
  if (w.empty()) throw InvalidArgument("complexity of the trivial word is undefined");
  ComplexityResult<typename B::Element> r;
  int reachable = budget;
  try {
    ball.grow_to(budget);
  } catch (const BudgetExceeded&) {
    reachable = ball.radius();
  }
  if (auto m = detail::search_complexity(ball, w, reachable, r.witness)) {
    r.status = Status::exact;
    r.value = *m;
  } else {
    r.status = Status::budget_exceeded;
    r.value = reachable;
  }
  return r;
}

/// Complexities of many words, evaluated in parallel against one shared
/// ball. Results are in input order and independent of the schedule.
template <GroupBackend B>
std::vector<ComplexityResult<typename B::Element>> complexities(Ball<B>& ball,
                                                                const std::vector<FreeWord>& words,
                                                                int budget) {
  int reachable = budget;
  try {
    ball.grow_to(budget);
  } catch (const BudgetExceeded&) {
    reachable = ball.radius();
  }
  std::vector<ComplexityResult<typename B::Element>> out(words.size());
  const Ball<B>& shared = ball;
  parallel_for(words.size(), [&](std::size_t i) {
    if (words[i].empty()) throw InvalidArgument("complexity of the trivial word is undefined");
    auto& r = out[i];
    if (auto m = detail::search_complexity(shared, words[i], reachable, r.witness)) {
      r.status = Status::exact;
      r.value = *m;
    } else {
      r.status = Status::budget_exceeded;
      r.value = reachable;
    }
  });
  return out;
}

/// Lawlessness growth A(m) = max chi(w) over the words of `words` with
/// |w| <= m, for m = 1..n. With `words` empty, all nontrivial reduced words
/// of F_rank are used. An entry is budget_exceeded when any contributing
/// search was; its value is then a lower bound.
template <GroupBackend B>
GrowthTable lawlessness_growth(Ball<B>& ball, int n, int budget, int rank = 2,
                               std::vector<FreeWord> words = {}) {
  if (n < 1) throw InvalidArgument("growth table needs n >= 1");
  if (words.empty()) words = enumerate_reduced(rank, n);
  std::erase_if(words, [n](const FreeWord& w) { return static_cast<int>(w.length()) > n; });
  auto results = complexities(ball, words, budget);
  GrowthTable table("A");
  for (int m = 1; m <= n; ++m) {
    std::int64_t value = 0;
    Status status = Status::not_applicable;
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (static_cast<int>(words[i].length()) > m) continue;
      const auto& r = results[i];
      if (status == Status::not_applicable) status = Status::exact;
      if (r.status == Status::budget_exceeded) {
        status = Status::budget_exceeded;
        value = std::max<std::int64_t>(value, r.value + 1);
      } else {
        value = std::max<std::int64_t>(value, r.value);
      }
    }
    table.add(m, value, status);
  }
  return table;
}

/// True when no nontrivial reduced word of length <= l vanishes on `tuple`.
/// Walks the reduced-word tree carrying prefix products.
template <GroupBackend B>
bool is_spotless(const B& b, const std::vector<typename B::Element>& tuple, int l) {
  const int k = static_cast<int>(tuple.size());
  std::vector<typename B::Element> steps;
  std::vector<Letter> letters;
  for (int i = 0; i < k; ++i) {
    steps.push_back(tuple[static_cast<std::size_t>(i)]);
    letters.push_back(i + 1);
    steps.push_back(b.invert(tuple[static_cast<std::size_t>(i)]));
    letters.push_back(-(i + 1));
  }
  std::function<bool(const typename B::Element&, Letter, int)> rec =
      [&](const typename B::Element& p, Letter last, int depth) -> bool {
    for (std::size_t s = 0; s < steps.size(); ++s) {
      if (letters[s] == -last) continue;
      auto q = b.multiply(p, steps[s]);
      if (b.is_identity(q)) return false;
      if (depth + 1 < l && !rec(q, letters[s], depth + 1)) return false;
    }
    return true;
  };
  return l <= 0 || rec(b.identity(), 0, 0);
}

/// A k-tuple of least total length (at most `budget`) on which no
/// nontrivial word of length <= l vanishes. Throws NotFound otherwise.
template <GroupBackend B>
std::vector<typename B::Element> find_spotless_tuple(Ball<B>& ball, int l, int k, int budget) {
  if (k < 1) throw InvalidArgument("tuple size must be positive");
  const B& b = ball.backend();
  for (int m = 0; m <= budget; ++m) {
    ball.grow_to(m);
    std::vector<typename B::Element> found;
    bool ok = detail::for_each_composition(m, k, [&](const std::vector<int>& parts) {
      return detail::for_each_tuple<B>(ball, parts, [&](const std::vector<typename B::Element>& t) {
        if (!is_spotless(b, t, l)) return false;
        found = t;
        return true;
      });
    });
    if (ok) return found;
  }
  throw NotFound("no spotless tuple of total length <= " + std::to_string(budget));
}

/// Pairwise combiner: a nontrivial w in F_k with Z(w) containing the union
/// of the Z(w_i), built as a balanced tree of commutators [u^c, v^d].
/// Throws LengthBoundViolated if |w| > 16 m^2 max|w_i|.
FreeWord combine(const std::vector<FreeWord>& words);

// ---- Mixed identities ----

/// Least |g| <= budget with mw(g) != e.
template <GroupBackend B>
ComplexityResult<typename B::Element> mif_complexity(Ball<B>& ball, const MixedWord& mw, int budget) {
  const B& b = ball.backend();
  ComplexityResult<typename B::Element> r;
  int reachable = budget;
  try {
    ball.grow_to(budget);
  } catch (const BudgetExceeded&) {
    reachable = ball.radius();
  }
  for (int m = 0; m <= reachable; ++m) {
    auto s = ball.stratum(m);
    for (std::size_t j = s.begin; j < s.end; ++j) {
      if (!b.is_identity(substitute_mixed(mw, ball.element(j), b))) {
        r.status = Status::exact;
        r.value = m;
        r.witness = {ball.element(j)};
        return r;
      }
    }
  }
  r.status = Status::budget_exceeded;
  r.value = reachable;
  return r;
}

/// All mixed words a_1 x^k_1 ... of length <= l containing x, with
/// coefficients taken as geodesic words of nonidentity ball elements.
template <GroupBackend B>
std::vector<MixedWord> enumerate_mixed(Ball<B>& ball, int l) {
  ball.grow_to(l);
  const int rank = static_cast<int>(ball.backend().generators().size());
  std::vector<FreeWord> coeffs;
  for (std::size_t i = 1; i < ball.size(); ++i) coeffs.push_back(ball.word(i));
  std::vector<MixedWord> out;
  std::function<void(const MixedWord&, int, bool, bool)> rec = [&](const MixedWord& cur, int left,
                                                                   bool last_was_power, bool has_x) {
    if (has_x) out.push_back(cur);
    if (last_was_power || cur.empty()) {
      for (const auto& a : coeffs) {
        if (static_cast<int>(a.length()) > left) continue;
        MixedWord next = cur;
        next.append_coefficient(a);
        rec(next, left - static_cast<int>(a.length()), false, has_x);
      }
    }
    if (!last_was_power) {
      for (int k = 1; k <= left; ++k) {
        for (int sign : {1, -1}) {
          MixedWord next = cur;
          next.append_power(sign * k);
          rec(next, left - k, true, true);
        }
      }
    }
  };
  rec(MixedWord(rank), l, false, false);
  return out;
}

/// MIF growth M(n) = max mif complexity over mixed words of length <= n.
template <GroupBackend B>
GrowthTable mif_growth(Ball<B>& ball, int l, int budget) {
  auto words = enumerate_mixed(ball, l);
  try {
    ball.grow_to(budget);
  } catch (const BudgetExceeded&) {
  }
  std::vector<ComplexityResult<typename B::Element>> results(words.size());
  parallel_for(words.size(), [&](std::size_t i) {
    const B& b = ball.backend();
    const Ball<B>& shared = ball;
    auto& r = results[i];
    r.status = Status::budget_exceeded;
    r.value = shared.radius();
    for (int m = 0; m <= shared.radius(); ++m) {
      auto s = shared.stratum(m);
      for (std::size_t j = s.begin; j < s.end; ++j) {
        if (!b.is_identity(substitute_mixed(words[i], shared.element(j), b))) {
          r.status = Status::exact;
          r.value = m;
          return;
        }
      }
    }
  });
  GrowthTable table("M");
  for (int n = 1; n <= l; ++n) {
    std::int64_t value = 0;
    Status status = Status::exact;
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (static_cast<int>(words[i].length()) > n) continue;
      if (results[i].status == Status::budget_exceeded) {
        status = Status::budget_exceeded;
        value = std::max<std::int64_t>(value, results[i].value + 1);
      } else {
        value = std::max<std::int64_t>(value, results[i].value);
      }
    }
    table.add(n, value, status);
  }
  return table;
}

/// Mixed word of complexity >= l+1: the combiner applied to y_i = [g_i, x]
/// over the nonidentity g_i of B(l). Throws LengthBoundViolated if the
/// result exceeds 32 (l+1) m^2.
template <KeyedBackend B>
MixedWord mif_hard_word(Ball<B>& ball, int l) {
  if (l < 0) throw InvalidArgument("radius must be nonnegative");
  ball.grow_to(l);
  const B& b = ball.backend();
  const int rank = static_cast<int>(b.generators().size());
  const std::size_t m = ball.stratum(l).end - 1;
  if (m == 0) throw InvalidArgument("trivial group has no mixed-identity witnesses");
  std::vector<FreeWord> ys;
  for (std::size_t i = 1; i <= m; ++i) {
    ys.push_back(FreeWord::generator(static_cast<int>(std::max<std::size_t>(m, 2)), static_cast<int>(i)));
  }
  FreeWord combined = combine(ys);
  std::vector<MixedWord> images;
  for (std::size_t i = 1; i <= m; ++i) {
    FreeWord g = ball.word(i);
    MixedWord c(rank);
    c.append_coefficient(g.inverse());
    c.append_power(-1);
    c.append_coefficient(g);
    c.append_power(1);
    images.push_back(c);
  }
  MixedWord out(rank);
  for (Letter y : combined.letters()) {
    const auto& img = images[static_cast<std::size_t>(std::abs(y)) - 1];
    out.append(y > 0 ? img : img.inverse());
  }
  out = out.normalized(b);
  if (out.empty()) throw CertificateFailure("hard mixed word collapsed to the identity");
  const std::size_t bound = 32 * static_cast<std::size_t>(l + 1) * m * m;
  if (out.length() > bound) {
    throw LengthBoundViolated("hard mixed word has length " + std::to_string(out.length()) +
                              " > 32(l+1)m^2 = " + std::to_string(bound));
  }
  return out;
}

/// Witness for a mixed word over a free backend: u^m with u not a proper
/// power, [u, a_i] != e for all i, and |u^m| >= |u^2| l + sum |a_i|.
struct MifFreeWitness {
  MixedWord normal_form;
  FreeWord u;
  long long m = 0;
  FreeWord element;
  FreeWord value;
};

/// The word must contain x and not be conjugate to a pure power of x.
/// Asserts that mw(u^m) does not commute with u (CertificateFailure).
MifFreeWitness mif_free_witness(const MixedWord& mw, int rank);

}  // namespace lawless
