#pragma once

#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lawless/dyadic.hpp"
#include "lawless/group.hpp"

namespace lawless::thompson {

/// Orientation-preserving PL homeomorphism of R with dyadic breakpoints and
/// slope 1 outside [first, last] breakpoint.
///
/// Canonical: breakpoints strictly increasing in both coordinates, no
/// breakpoint with equal slopes on both sides (the outer slopes count as 1).
/// With no breakpoints the map is x + shift. Structural equality is equality
/// of maps.
class PLMap {
 public:
  using Point = std::pair<Dyadic, Dyadic>;

  PLMap() = default;
  static PLMap translation(const Dyadic& shift);
  /// Builds from (x, f(x)) pairs, canonicalizing. Throws InvalidArgument if
  /// the points are not strictly increasing in both coordinates.
  static PLMap from_points(std::vector<Point> points);

  const std::vector<Point>& breakpoints() const { return points_; }
  bool is_identity() const { return points_.empty() && shift_ == Dyadic(0); }
  /// Tail translations: f(x) = x + left for x <= first breakpoint and
  /// x + right for x >= last.
  Dyadic left_shift() const;
  Dyadic right_shift() const;

  Dyadic operator()(const Dyadic& x) const;
  Dyadic preimage(const Dyadic& y) const;
  PLMap inverse() const;
  std::string key() const;
  std::string str() const;

  /// Composition (f * g)(x) = f(g(x)).
  friend PLMap operator*(const PLMap& f, const PLMap& g);
  friend bool operator==(const PLMap&, const PLMap&) = default;

 private:
  std::vector<Point> points_;
  Dyadic shift_;
};

/// A piecewise-linear candidate with arbitrary rational breakpoints, used to
/// test membership in F.
struct PLCandidate {
  using Rational = boost::multiprecision::cpp_rational;
  std::vector<std::pair<Rational, Rational>> points;
  /// Used only when `points` is empty.
  Rational shift = 0;

  static PLCandidate from_map(const PLMap& f);
};

/// Membership in F: strictly increasing, dyadic breakpoints, slopes powers of
/// two, integer tail translations.
bool is_member(const PLCandidate& f);
bool is_member(const PLMap& f);

/// F with generators A(x) = x + 1 and B. multiply(f, g) is the composition
/// f(g(x)), following the left-action convention for F.
class ThompsonBackend {
 public:
  using Element = PLMap;

  ThompsonBackend();

  Element identity() const { return PLMap(); }
  Element multiply(const Element& f, const Element& g) const { return f * g; }
  Element invert(const Element& f) const { return f.inverse(); }
  bool is_identity(const Element& f) const { return f.is_identity(); }
  std::string key(const Element& f) const { return f.key(); }
  const std::vector<Generator<Element>>& generators() const { return generators_; }
  std::string name() const { return "thompson"; }

 private:
  std::vector<Generator<Element>> generators_;
};

PLMap make_A();
PLMap make_B();

}  // namespace lawless::thompson
