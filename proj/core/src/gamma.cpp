#include <algorithm>
#include <set>
#include <sstream>

#include "lawless/errors.hpp"
#include "lawless/slowgrowth.hpp"

namespace lawless::slow {

GammaElement::GammaElement(std::vector<GammaFactor> factors, std::int64_t t_exponent)
    : t_(t_exponent) {
  for (const auto& f : factors) {
    if (f.type != 0 && f.type != 1) throw InvalidArgument("factor type must be 0 or 1");
    if (f.sign != 1 && f.sign != -1) throw InvalidArgument("factor sign must be +-1");
    push(f);
  }
}

void GammaElement::push(const GammaFactor& f) {
  if (!factors_.empty()) {
    const GammaFactor& b = factors_.back();
    if (b.type == f.type && b.shift == f.shift && b.sign == -f.sign) {
      factors_.pop_back();
      return;
    }
  }
  factors_.push_back(f);
}

GammaElement operator*(const GammaElement& a, const GammaElement& b) {
  // t^m f^(t^s) = f^(t^(s-m)) t^m.
  GammaElement r = a;
  for (const auto& f : b.factors_) r.push({f.type, f.sign, f.shift - a.t_});
  r.t_ = a.t_ + b.t_;
  return r;
}

GammaElement GammaElement::inverse() const {
  GammaElement r;
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) {
    r.push({it->type, -it->sign, it->shift + t_});
  }
  r.t_ = -t_;
  return r;
}

std::string GammaElement::str() const {
  if (factors_.empty() && t_ == 0) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& f : factors_) {
    if (!first) os << ' ';
    first = false;
    char c = f.type == 0 ? 'g' : 'h';
    os << static_cast<char>(f.sign > 0 ? c : c - 'a' + 'A');
    if (f.shift != 0) os << "^t" << f.shift;
  }
  if (t_ != 0) {
    if (!first) os << ' ';
    os << "t";
    if (t_ != 1) os << '^' << t_;
  }
  return os.str();
}

DirectSumElement GammaContext::generator_value(int type, std::int64_t x) const {
  auto idx = type == 0 ? sparse_.p_index(x) : sparse_.q_index(x);
  if (!idx) return {};
  const DeltaWitness& w = witness(*idx);
  return DirectSumElement::single(type == 0 ? w.g : w.h);
}

DirectSumElement GammaContext::coordinate(const GammaElement& e, std::int64_t x) const {
  DirectSumElement r;
  for (const auto& f : e.factors()) {
    DirectSumElement v = generator_value(f.type, x - f.shift);
    r = r * (f.sign > 0 ? v : v.inverse());
  }
  return r;
}

std::vector<std::int64_t> GammaContext::exceptional_coordinates(const GammaElement& e) const {
  std::set<std::pair<int, std::int64_t>> classes;
  for (const auto& f : e.factors()) classes.emplace(f.type, f.shift);
  if (classes.size() < 2) return {};
  std::int64_t lo = classes.begin()->second, hi = lo;
  for (const auto& c : classes) {
    lo = std::min(lo, c.second);
    hi = std::max(hi, c.second);
  }
  // Intersections of translated images only involve indices i with
  // p(i-1) + 1 <= hi - lo; beyond that all gaps exceed the shift spread.
  const SparsePair& s = sparse_;
  if (s.p(s.size() - 1) + 1 <= hi - lo) {
    throw InvalidArgument("shift spread exceeds the sparse pair range");
  }
  std::set<std::int64_t> points;
  for (auto a = classes.begin(); a != classes.end(); ++a) {
    for (auto b = std::next(a); b != classes.end(); ++b) {
      for (int i = 1; i <= s.size(); ++i) {
        std::int64_t x = (a->first == 0 ? s.p(i) : s.q(i)) + a->second;
        std::int64_t y = x - b->second;
        bool hit = b->first == 0 ? s.p_index(y).has_value() : s.q_index(y).has_value();
        if (hit) points.insert(x);
      }
    }
  }
  return {points.begin(), points.end()};
}

bool GammaContext::is_identity(const GammaElement& e) const {
  if (e.t_exponent() != 0) return false;
  std::map<std::pair<int, std::int64_t>, std::int64_t> net;
  for (const auto& f : e.factors()) net[{f.type, f.shift}] += f.sign;
  for (const auto& [cls, n] : net) {
    if (n != 0) return false;
  }
  for (std::int64_t x : exceptional_coordinates(e)) {
    if (!coordinate(e, x).is_identity()) return false;
  }
  return true;
}

GammaBackend::GammaBackend(std::shared_ptr<const GammaContext> ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) throw InvalidArgument("gamma backend needs a context");
  generators_ = {{"g", GammaElement::g_hat(), false},
                 {"h", GammaElement::h_hat(), false},
                 {"t", GammaElement::t(), false}};
}

}  // namespace lawless::slow
