#include "lawless/rfbounds.hpp"

#include <cmath>
#include <numeric>

namespace lawless::rf {

double nilpotent_law_alpha() { return std::log(2.0) / (std::log(1.0 + std::sqrt(5.0)) - std::log(2.0)); }

std::uint64_t lcm_up_to(int l, std::uint64_t max_length) {
  if (l < 1) throw InvalidArgument("l must be positive");
  std::uint64_t r = 1;
  for (int i = 2; i <= l; ++i) {
    r = std::lcm(r, static_cast<std::uint64_t>(i));
    if (r > max_length) throw InvalidArgument("lcm(1.." + std::to_string(l) + ") is too long a word");
  }
  return r;
}

ClassLaw exponent_law(int l) {
  const std::uint64_t e = lcm_up_to(l);
  return {"finite groups of order <= " + std::to_string(l), static_cast<std::uint64_t>(l),
          FreeWord::generator(2, 1).pow(static_cast<long long>(e)),
          "every element order divides lcm(1.." + std::to_string(l) + ") = " + std::to_string(e)};
}

ClassLaw p_power_law(int p, int m) {
  if (p < 2 || m < 0) throw InvalidArgument("p-power law needs p >= 2, m >= 0");
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) throw InvalidArgument("p-power law needs a prime p");
  }
  std::uint64_t e = 1;
  for (int i = 0; i < m; ++i) {
    e *= static_cast<std::uint64_t>(p);
    if (e > 10'000'000) throw InvalidArgument("p^m is too long a word");
  }
  return {std::to_string(p) + "-groups of order <= " + std::to_string(p) + "^" + std::to_string(m),
          e, FreeWord::generator(2, 1).pow(static_cast<long long>(e)),
          "element orders of a group of order p^j divide p^j"};
}

ClassLaw nilpotent_law(int m) {
  if (m < 1) throw InvalidArgument("nilpotency class must be positive");
  if (m > 16) throw InvalidArgument("left-normed commutator too long");
  const int k = m + 1;
  FreeWord w = FreeWord::generator(k, 1);
  for (int i = 2; i <= k; ++i) w = commutator(w, FreeWord::generator(k, i));
  return {"nilpotent groups of class <= " + std::to_string(m), 0, w,
          "class <= m kills every (m+1)-fold commutator"};
}

namespace {

SymBackend from_cycles(int degree, const std::vector<std::string>& cycles, const std::string& name) {
  std::vector<Permutation> gens;
  for (const auto& c : cycles) gens.push_back(Permutation::parse_cycles(c, degree));
  return SymBackend(degree, gens, name);
}

SymBackend quaternion() {
  // Index 2u + s encodes (-1)^s * unit_u, units 1, i, j, k.
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  auto right_mult = [](int g) {
    std::vector<std::uint16_t> img(8);
    for (int x = 0; x < 8; ++x) {
      int u = unit[x / 2][g / 2];
      int s = (x % 2 + g % 2 + sign[x / 2][g / 2]) % 2;
      img[static_cast<std::size_t>(x)] = static_cast<std::uint16_t>(2 * u + s);
    }
    return Permutation::from_images(img);
  };
  return SymBackend(8, {right_mult(2), right_mult(4)}, "Q8");
}

}  // namespace

std::vector<CatalogGroup> small_groups() {
  std::vector<CatalogGroup> g;
  auto cyclic = [&](int n, int prime) {
    std::string c = "(";
    for (int i = 1; i <= n; ++i) c += std::to_string(i) + (i < n ? " " : ")");
    g.push_back({"C" + std::to_string(n), static_cast<std::uint64_t>(n), 1, prime,
                 from_cycles(n, {c}, "C" + std::to_string(n))});
  };
  cyclic(2, 2);
  cyclic(3, 3);
  cyclic(4, 2);
  g.push_back({"C2xC2", 4, 1, 2, from_cycles(4, {"(1 2)", "(3 4)"}, "C2xC2")});
  cyclic(5, 5);
  cyclic(6, 0);
  g.push_back({"Sym3", 6, 0, 0, from_cycles(3, {"(1 2)", "(1 2 3)"}, "Sym3")});
  cyclic(7, 7);
  cyclic(8, 2);
  g.push_back({"C2xC4", 8, 1, 2, from_cycles(6, {"(1 2)", "(3 4 5 6)"}, "C2xC4")});
  g.push_back({"C2xC2xC2", 8, 1, 2, from_cycles(6, {"(1 2)", "(3 4)", "(5 6)"}, "C2xC2xC2")});
  g.push_back({"D4", 8, 2, 2, from_cycles(4, {"(1 2 3 4)", "(1 3)"}, "D4")});
  g.push_back({"Q8", 8, 2, 2, quaternion()});
  return g;
}

std::vector<Permutation> elements(const SymBackend& b, std::size_t max_elements) {
  Ball<SymBackend> ball(b, max_elements);
  while (!ball.saturated()) ball.grow_to(ball.radius() + 1);
  std::vector<Permutation> out;
  for (std::size_t i = 0; i < ball.size(); ++i) out.push_back(ball.element(i));
  return out;
}

bool is_law(const SymBackend& b, const FreeWord& w) {
  const auto elems = elements(b);
  const int k = std::max(1, w.rank());
  std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
  std::vector<Permutation> tuple(static_cast<std::size_t>(k), elems[0]);
  for (;;) {
    for (int i = 0; i < k; ++i) tuple[static_cast<std::size_t>(i)] = elems[idx[static_cast<std::size_t>(i)]];
    if (!evaluate<SymBackend>(w, tuple, b).is_identity()) return false;
    int i = 0;
    while (i < k && ++idx[static_cast<std::size_t>(i)] == elems.size()) idx[static_cast<std::size_t>(i++)] = 0;
    if (i == k) return true;
  }
}

std::string RFCertificate::statement() const {
  std::string len = element_length ? std::to_string(*element_length)
                                   : "<= " + std::to_string(length_bound);
  if (law.order_bound == 0) {
    return "element of length " + len + " survives in " + group + " and dies in every group of " +
           law.class_name;
  }
  return "F(" + len + ") > " + std::to_string(law.order_bound) + " for " + law.class_name;
}

}  // namespace lawless::rf
