#include <algorithm>
#include <unordered_map>

#include "lawless/errors.hpp"
#include "lawless/grigorchuk.hpp"

namespace lawless::grig {

namespace {

bool is_bcd(char c) { return c == 'b' || c == 'c' || c == 'd'; }

char klein_product(char x, char y) {
  // x != y, both in {b, c, d}: the product is the third letter.
  return static_cast<char>('b' + 'c' + 'd' - x - y);
}

// Sections of the letters b, c, d at vertices 0 and 1; '\0' is e.
char section_letter(char l, int i) {
  switch (l) {
    case 'b':
      return i == 0 ? 'a' : 'c';
    case 'c':
      return i == 0 ? 'a' : 'd';
    case 'd':
      return i == 0 ? '\0' : 'b';
  }
  return '\0';
}

void push_normal(std::string& s, char l) {
  if (l == 'a') {
    if (!s.empty() && s.back() == 'a') {
      s.pop_back();
    } else {
      s.push_back('a');
    }
    return;
  }
  if (!s.empty() && is_bcd(s.back())) {
    if (s.back() == l) {
      s.pop_back();
    } else {
      s.back() = klein_product(s.back(), l);
    }
    return;
  }
  s.push_back(l);
}

bool identity_rec(const std::string& w, std::unordered_map<std::string, bool>& memo) {
  if (w.empty()) return true;
  if (w.size() == 1) return false;
  if (std::count(w.begin(), w.end(), 'a') % 2 != 0) return false;
  if (auto it = memo.find(w); it != memo.end()) return it->second;
  Sections s = sections(w);
  bool r = identity_rec(s.s0, memo) && identity_rec(s.s1, memo);
  memo.emplace(w, r);
  return r;
}

}  // namespace

std::string normalize(std::string_view word) {
  std::string s;
  s.reserve(word.size());
  for (char l : word) {
    if (l != 'a' && !is_bcd(l)) throw InvalidArgument("not a letter of {a,b,c,d}: " + std::string(1, l));
    push_normal(s, l);
  }
  return s;
}

Sections sections(std::string_view word) {
  Sections out;
  int parity = 0;
  for (char l : word) {
    if (l == 'a') {
      parity ^= 1;
      continue;
    }
    if (!is_bcd(l)) throw InvalidArgument("not a letter of {a,b,c,d}: " + std::string(1, l));
    char x0 = section_letter(l, parity);
    char x1 = section_letter(l, parity ^ 1);
    if (x0) push_normal(out.s0, x0);
    if (x1) push_normal(out.s1, x1);
  }
  out.active = parity != 0;
  return out;
}

bool is_identity_word(std::string_view word) {
  std::unordered_map<std::string, bool> memo;
  return identity_rec(normalize(word), memo);
}

std::string inverse_word(std::string_view word) { return std::string(word.rbegin(), word.rend()); }

std::string commutator_word(std::string_view g, std::string_view h) {
  return normalize(inverse_word(g) + inverse_word(h) + std::string(g) + std::string(h));
}

std::string from_free_word(const FreeWord& w) {
  std::string s;
  for (Letter l : w.letters()) {
    int i = std::abs(l);
    if (i < 1 || i > 4) throw InvalidArgument("letter outside {a,b,c,d}");
    s.push_back(static_cast<char>('a' + i - 1));
  }
  return normalize(s);
}

}  // namespace lawless::grig
