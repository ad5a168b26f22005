#include "lawless/mixed_word.hpp"

#include <cctype>
#include <cstdlib>

namespace lawless {

namespace {

long long parse_exponent(std::string_view text, std::size_t& pos) {
  if (pos >= text.size() || text[pos] != '^') return 1;
  ++pos;
  std::size_t start = pos;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
  std::size_t digits = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == digits) throw InvalidArgument("missing exponent in mixed word: " + std::string(text));
  return std::stoll(std::string(text.substr(start, pos - start)));
}

}  // namespace

MixedWord MixedWord::parse(std::string_view text, int coefficient_rank) {
  if (coefficient_rank < 1) throw InvalidArgument("coefficient rank must be positive");
  MixedWord mw(coefficient_rank);
  std::size_t pos = 0;
  bool seen_power = false;
  while (pos < text.size()) {
    char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*' || c == '.') {
      ++pos;
    } else if (c == '<') {
      auto close = text.find('>', pos);
      if (close == std::string_view::npos) throw InvalidArgument("unterminated coefficient: " + std::string(text));
      auto inner = text.substr(pos + 1, close - pos - 1);
      FreeWord a = inner.empty() ? FreeWord(coefficient_rank) : FreeWord::parse(inner, coefficient_rank);
      if (a.empty() && seen_power) {
        throw InvalidArgument("interior coefficient is trivial: " + std::string(text));
      }
      mw.append_coefficient(a);
      pos = close + 1;
    } else if (c == 'x' || c == 'X') {
      ++pos;
      long long k = parse_exponent(text, pos);
      mw.append_power(c == 'x' ? k : -k);
      seen_power = true;
    } else if (c == '1' && text.size() == 1) {
      ++pos;
    } else {
      throw InvalidArgument("unexpected character in mixed word: " + std::string(text));
    }
  }
  return mw;
}

void MixedWord::append_coefficient(const FreeWord& a) {
  if (a.empty()) return;
  if (segments_.empty()) {
    segments_.push_back({a.with_rank(std::max(rank_, a.rank())), 0});
    return;
  }
  auto& back = segments_.back();
  if (back.exponent != 0) {
    segments_.push_back({a, 0});
    return;
  }
  back.coefficient = back.coefficient * a;
  if (back.coefficient.empty()) segments_.pop_back();
}

void MixedWord::append_power(long long k) {
  if (k == 0) return;
  if (segments_.empty()) {
    segments_.push_back({FreeWord(rank_), k});
    return;
  }
  auto& back = segments_.back();
  back.exponent += k;
  if (back.exponent == 0 && back.coefficient.empty()) segments_.pop_back();
}

void MixedWord::append(const MixedWord& other) {
  for (const auto& s : other.segments_) {
    append_coefficient(s.coefficient);
    append_power(s.exponent);
  }
}

bool MixedWord::is_constant() const {
  for (const auto& s : segments_) {
    if (s.exponent != 0) return false;
  }
  return true;
}

std::size_t MixedWord::length() const {
  std::size_t n = 0;
  for (const auto& s : segments_) n += s.coefficient.length() + static_cast<std::size_t>(std::llabs(s.exponent));
  return n;
}

long long MixedWord::x_degree() const {
  long long d = 0;
  for (const auto& s : segments_) d += s.exponent;
  return d;
}

MixedWord MixedWord::inverse() const {
  MixedWord r(rank_);
  for (auto it = segments_.rbegin(); it != segments_.rend(); ++it) {
    r.append_power(-it->exponent);
    r.append_coefficient(it->coefficient.inverse());
  }
  return r;
}

std::string MixedWord::str() const {
  if (segments_.empty()) return "1";
  std::string out;
  for (const auto& s : segments_) {
    if (!s.coefficient.empty()) out += "<" + s.coefficient.str() + ">";
    if (s.exponent == 1) {
      out += "x";
    } else if (s.exponent != 0) {
      out += "x^" + std::to_string(s.exponent);
    }
  }
  return out;
}

MixedWord MixedWord::cyclic_normal_form() const {
  if (is_constant()) throw InvalidArgument("cyclic normal form needs an occurrence of x");
  // Merge the tail coefficient into the head, then rotate a leading pure
  // power to the back.
  MixedWord w = *this;
  for (;;) {
    auto& segs = w.segments_;
    if (segs.size() >= 2 && segs.back().exponent == 0) {
      FreeWord tail = segs.back().coefficient;
      segs.pop_back();
      MixedWord r(rank_);
      r.append_coefficient(tail);
      for (const auto& s : segs) {
        r.append_coefficient(s.coefficient);
        r.append_power(s.exponent);
      }
      w = std::move(r);
      continue;
    }
    if (segs.size() >= 2 && segs.front().coefficient.empty()) {
      long long k = segs.front().exponent;
      MixedWord r(rank_);
      for (std::size_t i = 1; i < segs.size(); ++i) {
        r.append_coefficient(segs[i].coefficient);
        r.append_power(segs[i].exponent);
      }
      r.append_power(k);
      w = std::move(r);
      continue;
    }
    return w;
  }
}

MixedWord operator*(const MixedWord& u, const MixedWord& v) {
  MixedWord r = u;
  r.rank_ = std::max(u.rank_, v.rank_);
  r.append(v);
  return r;
}

}  // namespace lawless
