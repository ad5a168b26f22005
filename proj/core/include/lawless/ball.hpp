#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lawless/group.hpp"
#include "lawless/words.hpp"

namespace lawless {

/// Cayley-graph ball grown level by level. Every stored length is the BFS
/// level of first discovery, hence the exact S-length. Index 0 is the
/// identity.
template <GroupBackend B>
class Ball {
 public:
  using Element = typename B::Element;
  static constexpr std::size_t kDefaultMaxElements = 4'000'000;

  explicit Ball(const B& backend, std::size_t max_elements = kDefaultMaxElements)
      : backend_(&backend), max_elements_(max_elements) {
    const auto& gens = backend.generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Letter l = static_cast<Letter>(i + 1);
      steps_.push_back({gens[i].element, l});
      if (!gens[i].involution) steps_.push_back({backend.invert(gens[i].element), -l});
    }
    insert(backend.identity(), 0, -1, 0);
    level_start_ = {0, 1};
  }

  const B& backend() const { return *backend_; }
  int radius() const { return static_cast<int>(level_start_.size()) - 2; }
  std::size_t size() const { return elements_.size(); }
  /// True once a level added nothing: the ball is the whole (finite) group.
  bool saturated() const { return saturated_; }

  /// Extends the ball to radius r. On BudgetExceeded the partial level is
  /// discarded and the ball keeps its previous radius.
  void grow_to(int r) {
    while (radius() < r) {
      if (saturated_) {
        level_start_.push_back(elements_.size());
        continue;
      }
      grow_one();
    }
  }

  const Element& element(std::size_t i) const { return elements_[i]; }
  int length(std::size_t i) const { return lengths_[i]; }
  /// BFS parent and the generator letter leading from it (0 for the identity).
  long parent(std::size_t i) const { return parents_[i]; }
  Letter letter(std::size_t i) const { return letters_[i]; }

  /// Index range [begin, end) of the elements of length exactly l.
  struct Stratum {
    std::size_t begin = 0;
    std::size_t end = 0;
    std::size_t size() const { return end - begin; }
  };
  Stratum stratum(int l) const {
    if (l < 0 || l > radius()) return {};
    auto i = static_cast<std::size_t>(l);
    return {level_start_[i], level_start_[i + 1]};
  }

  /// A geodesic word over the backend's generators for element i.
  FreeWord word(std::size_t i) const {
    std::vector<Letter> rev;
    for (long j = static_cast<long>(i); parents_[static_cast<std::size_t>(j)] >= 0;
         j = parents_[static_cast<std::size_t>(j)]) {
      rev.push_back(letters_[static_cast<std::size_t>(j)]);
    }
    std::vector<Letter> forward(rev.rbegin(), rev.rend());
    return FreeWord::reduce(static_cast<int>(backend_->generators().size()), forward);
  }

  std::optional<std::size_t> find(const Element& g) const {
    if constexpr (KeyedBackend<B>) {
      auto it = index_.find(backend_->key(g));
      if (it == index_.end()) return std::nullopt;
      return it->second;
    } else {
      for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (equal(*backend_, elements_[i], g)) return i;
      }
      return std::nullopt;
    }
  }

  /// Exact S-length of g, growing the ball up to max_radius. nullopt when g
  /// lies outside B(max_radius).
  std::optional<int> length_of(const Element& g, int max_radius) {
    for (;;) {
      if (auto i = find(g)) return lengths_[*i];
      if (radius() >= max_radius || saturated_) return std::nullopt;
      grow_to(radius() + 1);
    }
  }

 private:
  struct Step {
    Element element;
    Letter letter;
  };

  void insert(const Element& g, int len, long parent, Letter letter) {
    if constexpr (KeyedBackend<B>) index_.emplace(backend_->key(g), elements_.size());
    elements_.push_back(g);
    lengths_.push_back(len);
    parents_.push_back(parent);
    letters_.push_back(letter);
  }

  void truncate(std::size_t n) {
    if constexpr (KeyedBackend<B>) {
      for (std::size_t i = n; i < elements_.size(); ++i) index_.erase(backend_->key(elements_[i]));
    }
    elements_.resize(n);
    lengths_.resize(n);
    parents_.resize(n);
    letters_.resize(n);
  }

  void grow_one() {
    const std::size_t begin = level_start_[level_start_.size() - 2];
    const std::size_t end = level_start_.back();
    const int len = radius() + 1;
    const std::size_t before = elements_.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (const auto& s : steps_) {
        Element h = backend_->multiply(elements_[i], s.element);
        bool fresh;
        if constexpr (KeyedBackend<B>) {
          fresh = !index_.contains(backend_->key(h));
        } else {
          fresh = true;
          for (std::size_t j = 0; j < elements_.size() && fresh; ++j) {
            if (equal(*backend_, elements_[j], h)) fresh = false;
          }
        }
        if (!fresh) continue;
        if (elements_.size() >= max_elements_) {
          truncate(before);
          throw BudgetExceeded("ball element budget of " + std::to_string(max_elements_) +
                               " exceeded at radius " + std::to_string(len));
        }
        insert(h, len, static_cast<long>(i), s.letter);
      }
    }
    if (elements_.size() == before) saturated_ = true;
    level_start_.push_back(elements_.size());
  }

  const B* backend_;
  std::size_t max_elements_;
  std::vector<Step> steps_;
  std::vector<Element> elements_;
  std::vector<int> lengths_;
  std::vector<long> parents_;
  std::vector<Letter> letters_;
  std::vector<std::size_t> level_start_;
  bool saturated_ = false;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace lawless
