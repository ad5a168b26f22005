#include "lawless/thompson.hpp"

#include "lawless/ball.hpp"
#include "lawless/errors.hpp"
#include "lawless/parallel.hpp"
#include "lawless/words.hpp"

namespace lawless::thompson {

namespace {

// Breakpoints of T on one period [8n, 8n+8] with their images.
std::vector<PLMap::Point> period_points(std::int64_t n) {
  const std::int64_t b = 8 * n;
  return {{b, b}, {b + 1, b + 2}, {b + 2, b + 3}, {b + 6, b + 5}, {b + 7, b + 6}};
}

}  // namespace

Dyadic T_value(const Dyadic& x) {
  std::int64_t n = x.floor() >= 0 ? x.floor() / 8 : -((-x.floor() + 7) / 8);
  const Dyadic b(8 * n);
  const Dyadic r = x - b;
  if (r <= Dyadic(1)) return b + r.scaled(1);
  if (r <= Dyadic(2)) return x + Dyadic(1);
  if (r <= Dyadic(6)) return b + (r + Dyadic(4)).scaled(-1);
  if (r <= Dyadic(7)) return x - Dyadic(1);
  return b + (r - Dyadic(4)).scaled(1);
}

PLMap make_T(std::int64_t lo, std::int64_t hi) {
  if (hi <= lo) return PLMap();
  std::vector<PLMap::Point> pts;
  for (std::int64_t n = lo; n < hi; ++n) {
    for (auto p : period_points(n)) pts.push_back(p);
  }
  pts.emplace_back(8 * hi, 8 * hi);
  return PLMap::from_points(std::move(pts));
}

PLMap make_U(int n) {
  if (n < 0) throw InvalidArgument("U_n needs n >= 0");
  PLMap t = make_T(0, n + 1);
  return t * t;
}

PLMap make_V(int n) {
  PLMap a2 = PLMap::translation(2);
  return a2 * make_U(n) * a2.inverse();
}

bool check_recursion(int n) {
  PLMap a8 = PLMap::translation(8);
  return make_U(n + 1) == a8 * make_U(n) * a8.inverse() * make_U(0);
}

BrinSquierReport brin_squier_check(int n) {
  BrinSquierReport r;
  r.n = n;
  const std::vector<PLMap> tuple{make_U(n), make_V(n)};
  ThompsonBackend backend;
  auto words = enumerate_reduced(2, n);
  r.words = words.size();
  std::vector<char> bad(words.size(), 0);
  parallel_for(words.size(), [&](std::size_t i) {
    if (evaluate<ThompsonBackend>(words[i], tuple, backend).is_identity()) bad[i] = 1;
  });
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (bad[i]) r.failures.push_back(words[i].str());
  }
  return r;
}

LengthProbe probe_u0_length(int max_radius, std::size_t max_elements) {
  ThompsonBackend backend;
  Ball<ThompsonBackend> ball(backend, max_elements);
  const PLMap target = make_U(0);
  LengthProbe p;
  for (int r = 0; r <= max_radius; ++r) {
    try {
      ball.grow_to(r);
    } catch (const BudgetExceeded&) {
      break;
    }
    p.radius_searched = r;
    if (auto i = ball.find(target)) {
      p.length = ball.length(*i);
      break;
    }
  }
  p.elements = ball.size();
  return p;
}

}  // namespace lawless::thompson
