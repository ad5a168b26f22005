#include "lawless/pl_map.hpp"

#include <algorithm>
#include <sstream>

#include "lawless/errors.hpp"

namespace lawless::thompson {

namespace {

// d = odd * 2^valuation with odd odd (d != 0).
std::pair<std::int64_t, int> odd_part(const Dyadic& d) {
  std::int64_t n = d.numerator();
  int v = -d.exponent();
  while ((n & 1) == 0) {
    n /= 2;
    ++v;
  }
  return {n, v};
}

// log2 of dy/dx; throws unless the ratio is a positive power of two.
int slope_exponent(const Dyadic& dx, const Dyadic& dy) {
  if (dx <= Dyadic(0) || dy <= Dyadic(0)) throw InvalidArgument("PL map is not strictly increasing");
  auto [ox, vx] = odd_part(dx);
  auto [oy, vy] = odd_part(dy);
  if (ox != oy) throw InvalidArgument("PL map slope is not a power of two");
  return vy - vx;
}

}  // namespace

PLMap PLMap::translation(const Dyadic& shift) {
  PLMap f;
  f.shift_ = shift;
  return f;
}

PLMap PLMap::from_points(std::vector<Point> points) {
  PLMap f;
  if (points.empty()) return f;
  for (std::size_t i = 1; i < points.size(); ++i) {
    slope_exponent(points[i].first - points[i - 1].first, points[i].second - points[i - 1].second);
  }
  const Dyadic left = points.front().second - points.front().first;
  bool changed = true;
  while (changed && !points.empty()) {
    changed = false;
    std::vector<Point> kept;
    for (std::size_t i = 0; i < points.size(); ++i) {
      int before = 0;
      int after = 0;
      const Point& p = points[i];
      if (!kept.empty()) before = slope_exponent(p.first - kept.back().first, p.second - kept.back().second);
      if (i + 1 < points.size()) {
        after = slope_exponent(points[i + 1].first - p.first, points[i + 1].second - p.second);
      }
      if (before == after) {
        changed = true;
      } else {
        kept.push_back(p);
      }
    }
    points = std::move(kept);
  }
  if (points.empty()) {
    f.shift_ = left;
  } else {
    f.points_ = std::move(points);
  }
  return f;
}

Dyadic PLMap::left_shift() const {
  return points_.empty() ? shift_ : points_.front().second - points_.front().first;
}

Dyadic PLMap::right_shift() const {
  return points_.empty() ? shift_ : points_.back().second - points_.back().first;
}

Dyadic PLMap::operator()(const Dyadic& x) const {
  if (points_.empty()) return x + shift_;
  if (x <= points_.front().first) return x + left_shift();
  if (x >= points_.back().first) return x + right_shift();
  auto it = std::upper_bound(points_.begin(), points_.end(), x,
                             [](const Dyadic& v, const Point& p) { return v < p.first; });
  const Point& hi = *it;
  const Point& lo = *(it - 1);
  int j = slope_exponent(hi.first - lo.first, hi.second - lo.second);
  return lo.second + (x - lo.first).scaled(j);
}

Dyadic PLMap::preimage(const Dyadic& y) const {
  if (points_.empty()) return y - shift_;
  if (y <= points_.front().second) return y - left_shift();
  if (y >= points_.back().second) return y - right_shift();
  auto it = std::upper_bound(points_.begin(), points_.end(), y,
                             [](const Dyadic& v, const Point& p) { return v < p.second; });
  const Point& hi = *it;
  const Point& lo = *(it - 1);
  int j = slope_exponent(hi.first - lo.first, hi.second - lo.second);
  return lo.first + (y - lo.second).scaled(-j);
}

PLMap PLMap::inverse() const {
  PLMap f;
  f.shift_ = -shift_;
  for (const auto& [x, y] : points_) f.points_.emplace_back(y, x);
  return f;
}

std::string PLMap::key() const {
  std::string k;
  if (points_.empty()) return "t" + shift_.str();
  for (const auto& [x, y] : points_) k += x.str() + ":" + y.str() + ";";
  return k;
}

std::string PLMap::str() const {
  if (points_.empty()) return shift_ == Dyadic(0) ? "id" : "x+" + shift_.str();
  std::ostringstream os;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    os << (i ? " " : "") << "(" << points_[i].first.str() << "," << points_[i].second.str() << ")";
  }
  return os.str();
}

PLMap operator*(const PLMap& f, const PLMap& g) {
  if (f.points_.empty() && g.points_.empty()) return PLMap::translation(f.shift_ + g.shift_);
  std::vector<Dyadic> xs;
  for (const auto& p : g.points_) xs.push_back(p.first);
  for (const auto& p : f.points_) xs.push_back(g.preimage(p.first));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<PLMap::Point> pts;
  for (const auto& x : xs) pts.emplace_back(x, f(g(x)));
  return PLMap::from_points(std::move(pts));
}

PLCandidate PLCandidate::from_map(const PLMap& f) {
  auto to_rational = [](const Dyadic& d) {
    Rational r(d.numerator());
    for (int i = 0; i < d.exponent(); ++i) r /= 2;
    return r;
  };
  PLCandidate c;
  if (f.breakpoints().empty()) c.shift = to_rational(f.left_shift());
  for (const auto& [x, y] : f.breakpoints()) c.points.emplace_back(to_rational(x), to_rational(y));
  return c;
}

namespace {

using Rational = PLCandidate::Rational;
using boost::multiprecision::cpp_int;

bool is_power_of_two(const cpp_int& n) { return n > 0 && (n & (n - 1)) == 0; }

bool is_dyadic(const Rational& r) { return is_power_of_two(boost::multiprecision::denominator(r)); }

bool is_integer(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

bool is_two_power(const Rational& r) {
  return r > 0 && is_power_of_two(boost::multiprecision::numerator(r)) &&
         is_power_of_two(boost::multiprecision::denominator(r));
}

}  // namespace

bool is_member(const PLCandidate& f) {
  if (f.points.empty()) return is_integer(f.shift);
  for (std::size_t i = 0; i < f.points.size(); ++i) {
    const auto& [x, y] = f.points[i];
    if (!is_dyadic(x) || !is_dyadic(y)) return false;
    if (i == 0) continue;
    Rational dx = x - f.points[i - 1].first;
    Rational dy = y - f.points[i - 1].second;
    if (dx <= 0 || dy <= 0) return false;
    if (!is_two_power(dy / dx)) return false;
  }
  return is_integer(f.points.front().second - f.points.front().first) &&
         is_integer(f.points.back().second - f.points.back().first);
}

bool is_member(const PLMap& f) { return is_member(PLCandidate::from_map(f)); }

PLMap make_A() { return PLMap::translation(1); }

PLMap make_B() { return PLMap::from_points({{0, 0}, {1, 2}}); }

ThompsonBackend::ThompsonBackend() {
  generators_.push_back({"A", make_A(), false});
  generators_.push_back({"B", make_B(), false});
}

}  // namespace lawless::thompson
