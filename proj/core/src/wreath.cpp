#include "lawless/wreath.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "lawless/errors.hpp"

namespace lawless::wreath {

Portrait::Portrait(int n) : n_(n) {
  if (n < 0 || n > WreathBackend::kMaxLevel) throw InvalidArgument("wreath level out of range");
  bits_.assign((node_count() + 63) / 64, 0);
}

void Portrait::set_bit(std::size_t node, bool value) {
  auto mask = std::uint64_t{1} << (node & 63);
  if (value) {
    bits_[node >> 6] |= mask;
  } else {
    bits_[node >> 6] &= ~mask;
  }
}

bool Portrait::is_identity() const {
  return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
}

std::vector<int> Portrait::act(const std::vector<int>& leaf) const {
  if (static_cast<int>(leaf.size()) != n_ + 1) throw InvalidArgument("leaf has the wrong depth");
  std::vector<int> out(leaf.size());
  std::size_t node = 0;
  for (std::size_t d = 0; d < leaf.size(); ++d) {
    out[d] = leaf[d] ^ static_cast<int>(bit(node));
    node = 2 * node + 1 + static_cast<std::size_t>(leaf[d]);
  }
  return out;
}

std::uint32_t Portrait::act(std::uint32_t leaf) const {
  std::uint32_t out = 0;
  std::size_t node = 0;
  for (int d = 0; d <= n_; ++d) {
    std::uint32_t e = (leaf >> (n_ - d)) & 1U;
    out |= (e ^ static_cast<std::uint32_t>(bit(node))) << (n_ - d);
    node = 2 * node + 1 + e;
  }
  return out;
}

std::vector<std::size_t> Portrait::node_images() const {
  std::vector<std::size_t> img(node_count());
  img[0] = 0;
  const std::size_t internal_parents = node_count() / 2;
  for (std::size_t i = 0; i < internal_parents; ++i) {
    std::size_t flip = bit(i) ? 1 : 0;
    img[2 * i + 1] = 2 * img[i] + 1 + flip;
    img[2 * i + 2] = 2 * img[i] + 2 - flip;
  }
  return img;
}

Portrait Portrait::extended(int m) const {
  if (m < n_) throw InvalidArgument("cannot restrict a portrait to a lower level");
  Portrait r(m);
  for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i];
  return r;
}

Portrait Portrait::inverse() const {
  Portrait r(n_);
  auto img = node_images();
  for (std::size_t i = 0; i < node_count(); ++i) {
    if (bit(i)) r.set_bit(img[i], true);
  }
  return r;
}

std::string Portrait::key() const {
  return std::string(reinterpret_cast<const char*>(bits_.data()), bits_.size() * sizeof(std::uint64_t));
}

std::string Portrait::str() const {
  std::string s;
  for (std::size_t i = 0; i < node_count(); ++i) s.push_back(bit(i) ? '1' : '0');
  return s;
}

Portrait operator*(const Portrait& g, const Portrait& h) {
  if (g.n_ != h.n_) throw InvalidArgument("portrait level mismatch");
  Portrait r(g.n_);
  auto img = g.node_images();
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    if (g.bit(i) != h.bit(img[i])) r.set_bit(i, true);
  }
  return r;
}

std::size_t node_index(const std::vector<int>& path) {
  std::size_t node = 0;
  for (int e : path) node = 2 * node + 1 + static_cast<std::size_t>(e);
  return node;
}

Portrait generator(int n, int i) {
  if (i < 0 || i > n) throw InvalidArgument("generator index out of range");
  Portrait p(n);
  p.set_bit((std::size_t{1} << i) - 1, true);
  return p;
}

WreathBackend::WreathBackend(int n) : n_(n) {
  if (n < 0 || n > kMaxLevel) throw InvalidArgument("wreath level out of range");
  for (int i = 0; i <= n; ++i) generators_.push_back({"a" + std::to_string(i), generator(n, i), true});
}

std::string WreathBackend::order_string() const {
  // 2^(2^(n+1) - 1) in decimal by schoolbook doubling.
  std::string digits = "1";
  const std::size_t e = (std::size_t{1} << (n_ + 1)) - 1;
  for (std::size_t k = 0; k < e; ++k) {
    int carry = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
      int d = (*it - '0') * 2 + carry;
      *it = static_cast<char>('0' + d % 10);
      carry = d / 10;
    }
    if (carry) digits.insert(digits.begin(), static_cast<char>('0' + carry));
  }
  return digits;
}

void InvolutionWord::push(int generator) {
  if (!gens_.empty() && gens_.back() == generator) {
    gens_.pop_back();
  } else {
    gens_.push_back(generator);
  }
}

void InvolutionWord::append(const InvolutionWord& other) {
  for (int g : other.gens_) push(g);
}

InvolutionWord InvolutionWord::reversed() const {
  InvolutionWord r;
  for (auto it = gens_.rbegin(); it != gens_.rend(); ++it) r.push(*it);
  return r;
}

Portrait InvolutionWord::evaluate(int n) const {
  Portrait p(n);
  for (int g : gens_) p = p * generator(n, g);
  return p;
}

std::string InvolutionWord::str() const {
  if (gens_.empty()) return "e";
  std::string s;
  for (int g : gens_) {
    if (!s.empty()) s += ' ';
    s += "a" + std::to_string(g);
  }
  return s;
}

InvolutionWord schreier(const std::vector<int>& v) {
  InvolutionWord h;
  for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i) {
    if (v[static_cast<std::size_t>(i)]) h.push(i);
  }
  return h;
}

namespace {

struct Partial {
  std::vector<InvolutionWord> words;
};

std::vector<std::uint32_t> prefix_orbit(const FreeWord& w, const std::vector<Portrait>& tuple) {
  std::vector<Portrait> inverses;
  for (const auto& g : tuple) inverses.push_back(g.inverse());
  std::vector<std::uint32_t> orbit{0};
  std::uint32_t p = 0;
  for (Letter l : w.letters()) {
    auto i = static_cast<std::size_t>(std::abs(l)) - 1;
    p = l > 0 ? tuple[i].act(p) : inverses[i].act(p);
    orbit.push_back(p);
  }
  return orbit;
}

bool all_distinct(const std::vector<std::uint32_t>& pts) {
  std::set<std::uint32_t> s(pts.begin(), pts.end());
  return s.size() == pts.size();
}

std::vector<int> leaf_letters(std::uint32_t leaf, int n) {
  std::vector<int> v(static_cast<std::size_t>(n) + 1);
  for (int d = 0; d <= n; ++d) v[static_cast<std::size_t>(d)] = static_cast<int>((leaf >> (n - d)) & 1U);
  return v;
}

// Witness words for w in W_n, following the induction on |w|.
Partial build(const FreeWord& w, int n) {
  const int k = w.rank();
  Partial out;
  out.words.resize(static_cast<std::size_t>(k));
  if (w.length() == 1) {
    out.words[static_cast<std::size_t>(std::abs(w[0])) - 1].push(0);
    return out;
  }
  FreeWord u = w.prefix(w.length() - 1);
  Partial inner = build(u, n - 1);
  std::vector<Portrait> tuple;
  for (const auto& word : inner.words) tuple.push_back(word.evaluate(n));
  auto orbit = prefix_orbit(w, tuple);
  if (all_distinct(orbit)) return inner;

  // v'_{|u|} in V_n: the orbit point before the last letter, without its
  // final (zero) letter.
  std::uint32_t last = orbit[u.length()];
  auto v_prime = leaf_letters(last >> 1, n - 1);
  InvolutionWord h = schreier(v_prime);
  InvolutionWord fix = h.reversed();
  fix.push(n);
  fix.append(h);

  Letter l = w.back();
  auto j = static_cast<std::size_t>(std::abs(l)) - 1;
  if (l > 0) {
    fix.append(inner.words[j]);
    inner.words[j] = fix;
  } else {
    inner.words[j].append(fix);
  }
  return inner;
}

}  // namespace

LawWitness law_witness(const FreeWord& w, int n) {
  if (w.empty()) throw InvalidArgument("law witness needs a nontrivial word");
  if (n < 0 || n > 30) throw InvalidArgument("wreath level out of range for law witnesses");
  if (static_cast<int>(w.length()) > n + 1) {
    throw InvalidArgument("law witness needs |w| <= n+1, got |w| = " + std::to_string(w.length()) +
                          " for n = " + std::to_string(n));
  }
  // Shorter words are handled in a smaller W_m and zero-extended.
  const int m = static_cast<int>(w.length()) - 1;
  Partial p = build(w, m);
  LawWitness out;
  out.n = n;
  out.words = p.words;
  for (const auto& word : p.words) {
    out.tuple.push_back(word.evaluate(n));
    out.construction_length += word.length();
  }
  out.orbit = prefix_orbit(w, out.tuple);
  if (!all_distinct(out.orbit)) throw CertificateFailure("prefix orbit points collide for " + w.str());
  const std::size_t bound = static_cast<std::size_t>((n + 1) * (n + 1));
  if (out.construction_length > bound) {
    throw CertificateFailure("witness length " + std::to_string(out.construction_length) +
                             " exceeds (n+1)^2 for " + w.str());
  }
  if (evaluate<WreathBackend>(w, out.tuple, WreathBackend(n)).is_identity()) {
    throw CertificateFailure("witness evaluates to the identity for " + w.str());
  }
  return out;
}

LengthOracle::LengthOracle(int n) : n_(n) {
  if (n < 0 || n > 3) throw InvalidArgument("exact W_n lengths are tabulated only for n <= 3");
  const std::size_t order = std::size_t{1} << ((std::size_t{1} << (n + 1)) - 1);
  lengths_.assign(order, 0);
  position_.assign(order, 0);
  std::vector<bool> seen(order, false);
  auto code = [](const Portrait& p) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < p.node_count(); ++i) c |= static_cast<std::size_t>(p.bit(i)) << i;
    return c;
  };
  std::deque<Portrait> queue{Portrait(n)};
  seen[0] = true;
  elements_.push_back(Portrait(n));
  std::vector<Portrait> gens;
  for (int i = 0; i <= n; ++i) gens.push_back(generator(n, i));
  while (!queue.empty()) {
    Portrait g = queue.front();
    queue.pop_front();
    auto len = lengths_[code(g)];
    for (const auto& s : gens) {
      Portrait h = g * s;
      auto c = code(h);
      if (seen[c]) continue;
      seen[c] = true;
      lengths_[c] = static_cast<std::uint8_t>(len + 1);
      position_[c] = static_cast<std::uint32_t>(elements_.size());
      elements_.push_back(h);
      queue.push_back(h);
    }
  }
  if (elements_.size() != order) throw CertificateFailure("S_n does not generate W_n");
}

std::size_t LengthOracle::length(const Portrait& g) const {
  if (g.level() != n_) throw InvalidArgument("portrait level does not match the oracle");
  std::size_t c = 0;
  for (std::size_t i = 0; i < g.node_count(); ++i) c |= static_cast<std::size_t>(g.bit(i)) << i;
  return lengths_[c];
}

void attach_exact_length(LawWitness& witness, const LengthOracle& oracle) {
  std::size_t total = 0;
  for (const auto& g : witness.tuple) total += oracle.length(g);
  witness.exact_length = total;
}

LawSearch shortest_law(int n, int max_len, int k) {
  if (k < 1) throw InvalidArgument("rank must be positive");
  LawSearch out;
  std::optional<LengthOracle> oracle;
  WreathBackend backend(n);
  for_each_reduced_word(k, max_len, [&](const FreeWord& w) {
    ++out.words_checked;
    if (static_cast<int>(w.length()) <= n + 1) {
      law_witness(w, n);
      ++out.by_witness;
      return true;
    }
    if (!oracle) oracle.emplace(n);
    const auto& elems = oracle->elements();
    std::vector<Portrait> tuple(static_cast<std::size_t>(k), elems.front());
    std::function<bool(int)> nonlaw = [&](int i) -> bool {
      if (i == k) return !evaluate<WreathBackend>(w, tuple, backend).is_identity();
      for (const auto& g : elems) {
        tuple[static_cast<std::size_t>(i)] = g;
        if (nonlaw(i + 1)) return true;
      }
      return false;
    };
    if (nonlaw(0)) return true;
    out.law = w;
    return false;
  });
  return out;
}

}  // namespace lawless::wreath
