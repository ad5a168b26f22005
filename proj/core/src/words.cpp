#include "lawless/words.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "lawless/errors.hpp"

namespace lawless {

namespace {

void push_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back() == -l) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

}  // namespace

FreeWord FreeWord::reduce(int rank, std::span<const Letter> letters) {
  if (rank < 1) throw InvalidArgument("free group rank must be positive");
  FreeWord w(rank);
  w.letters_.reserve(letters.size());
  for (Letter l : letters) {
    if (l == 0 || std::abs(l) > rank) {
      throw InvalidArgument("generator index " + std::to_string(l) +
                            " out of range for rank " + std::to_string(rank));
    }
    push_reduced(w.letters_, l);
  }
  return w;
}

FreeWord FreeWord::generator(int rank, int index, int sign) {
  Letter l = sign < 0 ? -index : index;
  return reduce(rank, std::span<const Letter>(&l, 1));
}

FreeWord FreeWord::parse(std::string_view text, int rank) {
  std::vector<Letter> raw;
  bool token_mode = std::any_of(text.begin(), text.end(),
                                [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  if (text == "1") return FreeWord(rank);
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*' || c == '.') {
      ++i;
      continue;
    }
    if (token_mode) {
      if (c != 'x' && c != 'X') {
        throw InvalidArgument("unexpected character '" + std::string(1, c) + "' in word");
      }
      std::size_t j = i + 1;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i + 1) throw InvalidArgument("missing generator index after 'x'");
      int idx = std::stoi(std::string(text.substr(i + 1, j - i - 1)));
      raw.push_back(c == 'x' ? idx : -idx);
      i = j;
    } else {
      if (!std::isalpha(static_cast<unsigned char>(c))) {
        throw InvalidArgument("unexpected character '" + std::string(1, c) + "' in word");
      }
      int idx = std::tolower(static_cast<unsigned char>(c)) - 'a' + 1;
      raw.push_back(std::islower(static_cast<unsigned char>(c)) ? idx : -idx);
      ++i;
    }
  }
  return reduce(rank, raw);
}

FreeWord FreeWord::inverse() const {
  FreeWord w(rank_);
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(-*it);
  return w;
}

FreeWord FreeWord::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  FreeWord result(rank_);
  if (e == 0 || letters_.empty()) return result;
  auto [conj, core] = cyclic_reduce(*this);
  // conj * core^e * conj^-1 is already reduced.
  result.letters_ = conj.letters_;
  for (long long i = 0; i < e; ++i) {
    result.letters_.insert(result.letters_.end(), core.letters_.begin(), core.letters_.end());
  }
  for (auto it = conj.letters_.rbegin(); it != conj.letters_.rend(); ++it) {
    result.letters_.push_back(-*it);
  }
  return result;
}

FreeWord FreeWord::prefix(std::size_t m) const {
  FreeWord w(rank_);
  w.letters_.assign(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(std::min(m, letters_.size())));
  return w;
}

FreeWord FreeWord::with_rank(int rank) const {
  if (rank < rank_) {
    for (Letter l : letters_) {
      if (std::abs(l) > rank) throw InvalidArgument("word does not fit in the requested rank");
    }
  }
  FreeWord w(rank);
  w.letters_ = letters_;
  return w;
}

bool FreeWord::is_cyclically_reduced() const {
  return letters_.size() < 2 || letters_.front() != -letters_.back();
}

std::string FreeWord::str() const {
  if (letters_.empty()) return "1";
  std::string out;
  if (rank_ <= 26) {
    for (Letter l : letters_) {
      char c = static_cast<char>('a' + std::abs(l) - 1);
      out.push_back(l > 0 ? c : static_cast<char>(std::toupper(c)));
    }
  } else {
    for (Letter l : letters_) {
      out += (l > 0 ? 'x' : 'X');
      out += std::to_string(std::abs(l));
    }
  }
  return out;
}

FreeWord operator*(const FreeWord& u, const FreeWord& v) {
  FreeWord w(std::max(u.rank_, v.rank_));
  w.letters_.reserve(u.letters_.size() + v.letters_.size());
  w.letters_ = u.letters_;
  for (Letter l : v.letters_) push_reduced(w.letters_, l);
  return w;
}

FreeWord commutator(const FreeWord& u, const FreeWord& v) {
  return u.inverse() * v.inverse() * u * v;
}

FreeWord conjugate(const FreeWord& u, const FreeWord& by) { return by.inverse() * u * by; }

int letter_rank(Letter l) { return 2 * (std::abs(l) - 1) + (l < 0 ? 1 : 0); }

bool shortlex_less(const FreeWord& u, const FreeWord& v) {
  if (u.length() != v.length()) return u.length() < v.length();
  for (std::size_t i = 0; i < u.length(); ++i) {
    int a = letter_rank(u[i]);
    int b = letter_rank(v[i]);
    if (a != b) return a < b;
  }
  return false;
}

CyclicDecomposition cyclic_reduce(const FreeWord& w) {
  auto letters = w.letters();
  std::size_t i = 0;
  std::size_t j = letters.size();
  while (j - i >= 2 && letters[i] == -letters[j - 1]) {
    ++i;
    --j;
  }
  return {FreeWord::reduce(w.rank(), letters.subspan(0, i)),
          FreeWord::reduce(w.rank(), letters.subspan(i, j - i))};
}

Root free_root(const FreeWord& w) {
  if (w.empty()) throw InvalidArgument("free_root of the trivial word");
  auto [conj, core] = cyclic_reduce(w);
  auto letters = core.letters();
  std::size_t n = letters.size();
  for (std::size_t period = 1; period <= n; ++period) {
    if (n % period != 0) continue;
    bool periodic = true;
    for (std::size_t i = period; i < n && periodic; ++i) periodic = letters[i] == letters[i - period];
    if (periodic) {
      FreeWord base = FreeWord::reduce(w.rank(), letters.subspan(0, period));
      return {conjugate(base, conj.inverse()), static_cast<long long>(n / period)};
    }
  }
  return {w, 1};  // unreachable: period n always matches
}

std::uint64_t reduced_word_count(int k, int l) {
  if (l == 0) return 1;
  std::uint64_t c = 2 * static_cast<std::uint64_t>(k);
  for (int i = 1; i < l; ++i) c *= static_cast<std::uint64_t>(2 * k - 1);
  return c;
}

std::uint64_t free_ball_size(int k, int l) {
  std::uint64_t total = 0;
  for (int i = 0; i <= l; ++i) total += reduced_word_count(k, i);
  return total;
}

namespace {

Letter letter_from_rank(int r) {
  int idx = r / 2 + 1;
  return (r % 2) ? -idx : idx;
}

bool extend(int k, int target, std::vector<Letter>& buf,
            const std::function<bool(const FreeWord&)>& visit) {
  if (static_cast<int>(buf.size()) == target) {
    return visit(FreeWord::reduce(k, buf));
  }
  for (int r = 0; r < 2 * k; ++r) {
    Letter l = letter_from_rank(r);
    if (!buf.empty() && buf.back() == -l) continue;
    buf.push_back(l);
    bool go_on = extend(k, target, buf, visit);
    buf.pop_back();
    if (!go_on) return false;
  }
  return true;
}

}  // namespace

void for_each_reduced_word(int k, int max_length,
                           const std::function<bool(const FreeWord&)>& visit) {
  if (k < 1) throw InvalidArgument("free group rank must be positive");
  std::vector<Letter> buf;
  for (int l = 1; l <= max_length; ++l) {
    if (!extend(k, l, buf, visit)) return;
  }
}

std::vector<FreeWord> enumerate_reduced(int k, int max_length) {
  std::vector<FreeWord> out;
  for_each_reduced_word(k, max_length, [&](const FreeWord& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

std::size_t FreeWordHash::operator()(const FreeWord& w) const noexcept {
  std::size_t h = static_cast<std::size_t>(w.rank()) * 0x9e3779b97f4a7c15ULL;
  for (Letter l : w.letters()) {
    h ^= static_cast<std::size_t>(l + 1024) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace lawless
