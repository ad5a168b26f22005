#include "lawless/grigorchuk.hpp"

#include <cmath>
#include <random>

#include "lawless/ball.hpp"
#include "lawless/errors.hpp"
#include "lawless/wreath.hpp"

namespace lawless::grig {

struct Portrait::Node {
  bool leaf = true;
  Nucleus value = Nucleus::e;
  bool active = false;
  std::shared_ptr<const Node> s0;
  std::shared_ptr<const Node> s1;
  std::string key;
  int depth = 0;
};

namespace {

using NodePtr = std::shared_ptr<const Portrait::Node>;

}  // namespace

static NodePtr make_leaf(Nucleus n) {
  auto p = std::make_shared<Portrait::Node>();
  p->leaf = true;
  p->value = n;
  p->key = std::string(1, "eabcd"[static_cast<int>(n)]);
  return p;
}

static const NodePtr& leaf_ptr(Nucleus n) {
  static const NodePtr kLeaves[] = {make_leaf(Nucleus::e), make_leaf(Nucleus::a), make_leaf(Nucleus::b),
                                    make_leaf(Nucleus::c), make_leaf(Nucleus::d)};
  return kLeaves[static_cast<int>(n)];
}

Portrait::Portrait() : node_(leaf_ptr(Nucleus::e)) {}

Portrait Portrait::leaf(Nucleus n) { return Portrait(leaf_ptr(n)); }

Portrait Portrait::node(bool active, const Portrait& s0, const Portrait& s1) {
  if (s0.is_leaf() && s1.is_leaf()) {
    Nucleus x = s0.leaf_value();
    Nucleus y = s1.leaf_value();
    if (active) {
      if (x == Nucleus::e && y == Nucleus::e) return leaf(Nucleus::a);
    } else {
      if (x == Nucleus::e && y == Nucleus::e) return leaf(Nucleus::e);
      if (x == Nucleus::a && y == Nucleus::c) return leaf(Nucleus::b);
      if (x == Nucleus::a && y == Nucleus::d) return leaf(Nucleus::c);
      if (x == Nucleus::e && y == Nucleus::b) return leaf(Nucleus::d);
    }
  }
  auto p = std::make_shared<Node>();
  p->leaf = false;
  p->active = active;
  p->s0 = s0.node_;
  p->s1 = s1.node_;
  p->key = std::string("(") + (active ? '1' : '0') + s0.node_->key + s1.node_->key + ")";
  p->depth = 1 + std::max(s0.node_->depth, s1.node_->depth);
  return Portrait(std::shared_ptr<const Node>(std::move(p)));
}

Portrait Portrait::from_word(std::string_view word) {
  Portrait p;
  for (char l : word) {
    if (l < 'a' || l > 'd') throw InvalidArgument("not a letter of {a,b,c,d}: " + std::string(1, l));
    p = p * leaf(static_cast<Nucleus>(l - 'a' + 1));
  }
  return p;
}

bool Portrait::is_leaf() const { return node_->leaf; }
Nucleus Portrait::leaf_value() const { return node_->value; }

bool Portrait::active() const { return node_->leaf ? node_->value == Nucleus::a : node_->active; }

Portrait Portrait::section(int i) const {
  if (!node_->leaf) return Portrait(i == 0 ? node_->s0 : node_->s1);
  switch (node_->value) {
    case Nucleus::e:
    case Nucleus::a:
      return Portrait();
    case Nucleus::b:
      return leaf(i == 0 ? Nucleus::a : Nucleus::c);
    case Nucleus::c:
      return leaf(i == 0 ? Nucleus::a : Nucleus::d);
    case Nucleus::d:
      return i == 0 ? Portrait() : leaf(Nucleus::b);
  }
  return Portrait();
}

Portrait Portrait::section_at(std::string_view vertex) const {
  Portrait p = *this;
  for (char c : vertex) {
    if (p.active()) throw InvalidArgument("element moves a prefix of the vertex");
    p = p.section(c == '1' ? 1 : 0);
  }
  return p;
}

bool Portrait::in_level_stabilizer(int n) const {
  if (n <= 0) return true;
  if (active()) return false;
  if (is_identity()) return true;
  return section(0).in_level_stabilizer(n - 1) && section(1).in_level_stabilizer(n - 1);
}

bool Portrait::is_identity() const { return node_->leaf && node_->value == Nucleus::e; }

int Portrait::depth() const { return node_->depth; }

Portrait Portrait::inverse() const {
  if (node_->leaf) return *this;
  int s = node_->active ? 1 : 0;
  return node(node_->active, section(s).inverse(), section(1 - s).inverse());
}

std::string Portrait::key() const { return node_->key; }

std::string Portrait::act(std::string_view vertex) const {
  std::string out(vertex);
  Portrait p = *this;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (p.is_identity()) break;
    int letter = out[i] == '1' ? 1 : 0;
    if (p.active()) out[i] = letter ? '0' : '1';
    p = p.section(letter);
  }
  return out;
}

Portrait operator*(const Portrait& g, const Portrait& h) {
  if (g.is_identity()) return h;
  if (h.is_identity()) return g;
  if (g.is_leaf() && h.is_leaf()) {
    Nucleus x = g.leaf_value();
    Nucleus y = h.leaf_value();
    if (x == y) return Portrait();
    if (x != Nucleus::a && y != Nucleus::a) {
      int third = 2 + 3 + 4 - static_cast<int>(x) - static_cast<int>(y);
      return Portrait::leaf(static_cast<Nucleus>(third));
    }
  }
  int ga = g.active() ? 1 : 0;
  return Portrait::node((ga ^ (h.active() ? 1 : 0)) != 0, g.section(0) * h.section(ga),
                        g.section(1) * h.section(1 - ga));
}

bool operator==(const Portrait& g, const Portrait& h) {
  return g.node_ == h.node_ || g.node_->key == h.node_->key;
}

GrigBackend::GrigBackend() {
  for (char c : std::string("abcd")) {
    generators_.push_back({std::string(1, c), Portrait::leaf(static_cast<Nucleus>(c - 'a' + 1)), true});
  }
}

std::optional<std::uint64_t> order(const Portrait& g, int max_squarings) {
  return order_two_power(g, GrigBackend(), max_squarings);
}

TorsionReport torsion_growth(int n, std::size_t max_elements) {
  GrigBackend b;
  Ball<GrigBackend> ball(b, max_elements);
  ball.grow_to(n);
  TorsionReport r;
  r.pi = GrowthTable("pi");
  r.elements = ball.size();
  std::vector<std::uint64_t> max_at(static_cast<std::size_t>(n) + 1, 1);
  for (std::size_t i = 0; i < ball.size(); ++i) {
    auto o = order(ball.element(i));
    if (!o) {
      r.all_powers_of_two = false;
      continue;
    }
    // Cross-check against the sequential definition of the order.
    auto seq = lawless::order(ball.element(i), b, *o);
    if (!seq || *seq != *o || (*o & (*o - 1)) != 0) r.all_powers_of_two = false;
    auto len = static_cast<std::size_t>(ball.length(i));
    max_at[len] = std::max(max_at[len], *o);
    if (len > 0) {
      r.max_ratio = std::max(r.max_ratio, static_cast<double>(*o) / std::pow(static_cast<double>(len), 1.5));
    }
  }
  std::uint64_t running = 1;
  for (int m = 1; m <= n; ++m) {
    running = std::max(running, max_at[static_cast<std::size_t>(m)]);
    r.pi.add(m, static_cast<std::int64_t>(running), r.all_powers_of_two ? Status::exact : Status::budget_exceeded);
  }
  return r;
}

namespace {

Portrait rigid(int depth, const Portrait& g) {
  Portrait p = g;
  for (int i = 0; i < depth; ++i) p = Portrait::node(false, p, Portrait());
  return p;
}

const std::string kX = "abab";

}  // namespace

bool is_restricted_x(const Portrait& y, int n) { return y == rigid(n, Portrait::from_word(kX)); }

RestrictedElements restricted_elements(int n, int bfs_radius) {
  if (n < 0) throw InvalidArgument("index must be nonnegative");
  RestrictedElements out;
  out.words.push_back(kX);
  out.portraits.push_back(Portrait::from_word(kX));
  if (n >= 1) {
    const Portrait target = rigid(1, out.portraits[0]);
    GrigBackend b;
    Ball<GrigBackend> ball(b);
    std::optional<std::size_t> hit;
    for (int r = 0; r <= bfs_radius && !hit; ++r) {
      ball.grow_to(r);
      hit = ball.find(target);
    }
    if (!hit) throw Error("y_1 not found within BFS radius " + std::to_string(bfs_radius));
    out.y1_length = ball.length(*hit);
    out.words.push_back(from_free_word(ball.word(*hit)));
    out.portraits.push_back(target);
  }
  for (int i = 2; i <= n; ++i) {
    auto& w = out.words;
    auto& p = out.portraits;
    w.push_back(commutator_word(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(i - 2)]));
    const auto& a = p[static_cast<std::size_t>(i - 1)];
    const auto& c = p[static_cast<std::size_t>(i - 2)];
    p.push_back(a.inverse() * c.inverse() * a * c);
  }
  for (int i = 0; i <= n; ++i) {
    const auto& p = out.portraits[static_cast<std::size_t>(i)];
    if (!is_restricted_x(p, i)) {
      throw CertificateFailure("y_" + std::to_string(i) + " is not the rigid copy of x at 0^" + std::to_string(i));
    }
    if (!(Portrait::from_word(out.words[static_cast<std::size_t>(i)]) == p)) {
      throw CertificateFailure("word and portrait of y_" + std::to_string(i) + " disagree");
    }
  }
  return out;
}

bool PhiCertificate::ok() const {
  return orders_two && rigid_sections && x4_sections && injective_portraits &&
         (!words_checked || injective_words) && homomorphism_spot_checks;
}

PhiCertificate phi(int n, bool check_words, std::uint64_t seed, int spot_checks) {
  if (n < 0 || n > 3) throw InvalidArgument("Phi_n is certified for 0 <= n <= 3");
  PhiCertificate cert;
  cert.n = n;
  auto ys = restricted_elements(5 * n);
  const Portrait x4 = [] {
    Portrait x = Portrait::from_word(kX);
    return x * x * x * x;
  }();

  std::vector<Portrait> k;
  cert.orders_two = true;
  cert.rigid_sections = true;
  for (int i = 0; i <= n; ++i) {
    const auto& y = ys.words[static_cast<std::size_t>(5 * i)];
    std::string img = normalize(y + y + y + y);
    cert.images.push_back(img);
    const auto& yp = ys.portraits[static_cast<std::size_t>(5 * i)];
    Portrait kp = yp * yp * yp * yp;
    if (kp.is_identity() || !(kp * kp).is_identity()) cert.orders_two = false;
    if (!(kp == rigid(5 * i, x4))) cert.rigid_sections = false;
    k.push_back(kp);
  }

  cert.x4_sections = x4.in_level_stabilizer(4);
  for (int v = 0; v < 8 && cert.x4_sections; ++v) {
    std::string s;
    for (int bit = 2; bit >= 0; --bit) s.push_back(((v >> bit) & 1) ? '1' : '0');
    if (!(x4.section_at(s + "0") == Portrait::leaf(Nucleus::a))) cert.x4_sections = false;
    if (!(x4.section_at(s + "1") == Portrait::leaf(Nucleus::c))) cert.x4_sections = false;
  }

  wreath::WreathBackend wb(n);
  Ball<wreath::WreathBackend> ball(wb);
  while (!ball.saturated()) ball.grow_to(ball.radius() + 1);
  auto image_of = [&](std::size_t i) {
    Portrait p;
    const FreeWord word = ball.word(i);
    for (Letter l : word.letters()) p = p * k[static_cast<std::size_t>(std::abs(l)) - 1];
    return p;
  };
  std::vector<Portrait> images(ball.size());
  cert.injective_portraits = true;
  for (std::size_t i = 0; i < ball.size(); ++i) {
    images[i] = image_of(i);
    if (i > 0) {
      ++cert.nontrivial_elements;
      if (images[i].is_identity()) cert.injective_portraits = false;
    }
  }

  cert.homomorphism_spot_checks = true;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, ball.size() - 1);
  for (int t = 0; t < spot_checks; ++t) {
    std::size_t i = pick(rng);
    std::size_t j = pick(rng);
    auto ij = ball.find(wb.multiply(ball.element(i), ball.element(j)));
    if (!ij || !(images[*ij] == images[i] * images[j])) cert.homomorphism_spot_checks = false;
  }

  if (check_words) {
    cert.words_checked = true;
    cert.injective_words = true;
    for (std::size_t i = 1; i < ball.size(); ++i) {
      std::string w;
      const FreeWord word = ball.word(i);
      for (Letter l : word.letters()) w += cert.images[static_cast<std::size_t>(std::abs(l)) - 1];
      w = normalize(w);
      cert.longest_image = std::max(cert.longest_image, w.size());
      if (is_identity_word(w)) cert.injective_words = false;
    }
  }
  return cert;
}

PowerComplexity power_complexity(int m, int budget, std::size_t max_elements) {
  if (m < 0) throw InvalidArgument("exponent index must be nonnegative");
  GrigBackend b;
  Ball<GrigBackend> ball(b, max_elements);
  PowerComplexity out;
  out.m = m;
  for (int l = 0; l <= budget; ++l) {
    try {
      ball.grow_to(l);
    } catch (const BudgetExceeded&) {
      out.status = Status::budget_exceeded;
      out.value = l - 1;
      return out;
    }
    auto s = ball.stratum(l);
    for (std::size_t i = s.begin; i < s.end; ++i) {
      Portrait p = ball.element(i);
      for (int j = 0; j < m; ++j) p = p * p;
      if (!p.is_identity()) {
        out.status = Status::exact;
        out.value = l;
        out.witness = from_free_word(ball.word(i));
        return out;
      }
    }
  }
  out.status = Status::budget_exceeded;
  out.value = budget;
  return out;
}

}  // namespace lawless::grig
