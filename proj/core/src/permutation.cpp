#include "lawless/permutation.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace lawless {

Permutation::Permutation(int degree) {
  if (degree < 0 || degree > 65535) throw InvalidArgument("permutation degree out of range");
  image_.resize(static_cast<std::size_t>(degree));
  std::iota(image_.begin(), image_.end(), std::uint16_t{0});
}

Permutation Permutation::from_images(std::vector<std::uint16_t> images) {
  std::vector<bool> hit(images.size(), false);
  for (auto i : images) {
    if (i >= images.size() || hit[i]) throw InvalidArgument("images do not form a bijection");
    hit[i] = true;
  }
  Permutation p;
  p.image_ = std::move(images);
  return p;
}

Permutation Permutation::parse_cycles(std::string_view text, int degree) {
  Permutation result(degree);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') throw InvalidArgument("malformed cycle notation: " + std::string(text));
    ++pos;
    std::vector<int> cycle;
    for (;;) {
      skip_space();
      if (pos >= text.size()) throw InvalidArgument("unterminated cycle: " + std::string(text));
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
        throw InvalidArgument("malformed cycle notation: " + std::string(text));
      }
      int v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + (text[pos] - '0');
        if (v > degree) break;
        ++pos;
      }
      if (v < 1 || v > degree) throw InvalidArgument("cycle point out of range: " + std::string(text));
      cycle.push_back(v);
    }
    std::vector<bool> seen(static_cast<std::size_t>(degree) + 1, false);
    for (int v : cycle) {
      if (seen[static_cast<std::size_t>(v)]) throw InvalidArgument("repeated point in cycle");
      seen[static_cast<std::size_t>(v)] = true;
    }
    if (cycle.size() > 1) {
      Permutation c(degree);
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        c.image_[static_cast<std::size_t>(cycle[i] - 1)] =
            static_cast<std::uint16_t>(cycle[(i + 1) % cycle.size()] - 1);
      }
      result = result * c;
    }
    skip_space();
  }
  return result;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.image_.resize(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) r.image_[image_[i]] = static_cast<std::uint16_t>(i);
  return r;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(image_.size(), false);
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (seen[i] || image_[i] == i) continue;
    std::vector<int> c;
    for (std::size_t j = i; !seen[j]; j = image_[j]) {
      seen[j] = true;
      c.push_back(static_cast<int>(j) + 1);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::uint64_t Permutation::order() const {
  std::uint64_t m = 1;
  for (const auto& c : cycles()) m = std::lcm(m, static_cast<std::uint64_t>(c.size()));
  return m;
}

std::string Permutation::str() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    os << ')';
  }
  return os.str();
}

Permutation operator*(const Permutation& g, const Permutation& h) {
  if (g.degree() != h.degree()) throw InvalidArgument("degree mismatch in permutation product");
  Permutation r;
  r.image_.resize(g.image_.size());
  for (std::size_t i = 0; i < g.image_.size(); ++i) r.image_[i] = h.image_[g.image_[i]];
  return r;
}

SymBackend::SymBackend(int degree) : degree_(degree), name_("sym" + std::to_string(degree)) {
  if (degree < 1) throw InvalidArgument("symmetric group degree must be positive");
  if (degree == 1) {
    generators_.push_back({"e", Permutation(1), true});
    return;
  }
  generators_.push_back({"(1 2)", Permutation::parse_cycles("(1 2)", degree), true});
  if (degree > 2) {
    std::string cyc = "(";
    for (int i = 1; i <= degree; ++i) cyc += std::to_string(i) + (i < degree ? " " : ")");
    generators_.push_back({cyc, Permutation::parse_cycles(cyc, degree), false});
  }
}

SymBackend::SymBackend(int degree, const std::vector<Permutation>& generators, std::string name)
    : degree_(degree), name_(name.empty() ? "perm" + std::to_string(degree) : std::move(name)) {
  if (generators.empty()) throw InvalidArgument("generator list is empty");
  for (const auto& g : generators) {
    if (g.degree() != degree) throw InvalidArgument("generator degree mismatch");
    generators_.push_back({g.str(), g, (g * g).is_identity()});
  }
}

DirectSumElement DirectSumElement::single(const Permutation& p) {
  DirectSumElement e;
  if (!p.is_identity()) e.parts_.emplace(p.degree(), p);
  return e;
}

DirectSumElement DirectSumElement::inverse() const {
  DirectSumElement r;
  for (const auto& [n, p] : parts_) r.parts_.emplace(n, p.inverse());
  return r;
}

std::string DirectSumElement::key() const {
  std::string k;
  for (const auto& [n, p] : parts_) {
    k += std::to_string(n);
    k += ':';
    k += p.key();
    k += ';';
  }
  return k;
}

std::string DirectSumElement::str() const {
  if (parts_.empty()) return "e";
  std::string s;
  for (const auto& [n, p] : parts_) {
    if (!s.empty()) s += " + ";
    s += "[" + std::to_string(n) + "]" + p.str();
  }
  return s;
}

DirectSumElement operator*(const DirectSumElement& g, const DirectSumElement& h) {
  DirectSumElement r = g;
  for (const auto& [n, p] : h.parts_) {
    auto it = r.parts_.find(n);
    if (it == r.parts_.end()) {
      r.parts_.emplace(n, p);
    } else {
      it->second = it->second * p;
      if (it->second.is_identity()) r.parts_.erase(it);
    }
  }
  return r;
}

DirectSumBackend::DirectSumBackend(int max_component) {
  if (max_component < 2) throw InvalidArgument("direct sum needs a component of degree >= 2");
  for (int n = 2; n <= max_component; ++n) {
    SymBackend s(n);
    for (const auto& g : s.generators()) {
      generators_.push_back({"[" + std::to_string(n) + "]" + g.name,
                             DirectSumElement::single(g.element), g.involution});
    }
  }
}

DirectSumBackend::DirectSumBackend(const std::vector<DirectSumElement>& generators) {
  if (generators.empty()) throw InvalidArgument("generator list is empty");
  for (const auto& g : generators) {
    generators_.push_back({g.str(), g, (g * g).is_identity()});
  }
}

}  // namespace lawless
