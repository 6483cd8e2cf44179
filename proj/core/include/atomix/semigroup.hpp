#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "atomix/dfa.hpp"
#include "atomix/transformation.hpp"

namespace atomix {

inline constexpr std::size_t kDefaultClosureCap = 200'000;
inline constexpr std::size_t kDefaultSingularLimit = 6;

/// Columns of the transition table, one per symbol in alphabet order.
std::vector<std::pair<char, Transformation>> letter_actions(const Dfa& d);

/// The transformation semigroup {w_M : w nonempty}. Elements are kept in
/// discovery order of a breadth-first search over words (length first, then
/// alphabet order), so each element's witness is its shortest, least word.
class SemigroupClosure {
 public:
  struct Element {
    Transformation map;
    Word witness;
  };

  std::size_t degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool truncated() const noexcept { return truncated_; }
  const std::vector<Element>& elements() const noexcept { return elements_; }

  bool contains(const Transformation& t) const { return index_.contains(t); }
  /// Shortest inducing word, if `t` is an element.
  std::optional<Word> witness(const Transformation& t) const;

 private:
  friend SemigroupClosure semigroup_closure(const Dfa& d, std::size_t cap);

  std::size_t degree_ = 0;
  bool truncated_ = false;
  std::vector<Element> elements_;
  std::unordered_map<Transformation, std::size_t> index_;
};

/// Stops with truncated() set once more than `cap` elements would be needed.
SemigroupClosure semigroup_closure(const Dfa& d, std::size_t cap = kDefaultClosureCap);

/// First element (in closure order) of rank n-1. Throws Truncated.
std::optional<SemigroupClosure::Element> find_rank_n_minus_1(const SemigroupClosure& s, std::size_t n);
bool has_rank_n_minus_1(const SemigroupClosure& s, std::size_t n);

/// True iff every singular self-map of {0..n-1} is in the closure. Exhaustive
/// over n^n maps, so n is limited (LimitExceeded above `limit`).
bool contains_all_singular(const SemigroupClosure& s, std::size_t n, std::size_t limit = kDefaultSingularLimit);

/// Export as [{map, witness, rank}, ...] in closure order.
nlohmann::json to_json(const SemigroupClosure& s);

/// P(M): generated by the letters whose action is a permutation, plus the
/// identity. A word acts as a permutation only if each of its letters does,
/// so the letter generators suffice.
class PermGroup {
 public:
  std::size_t degree() const noexcept { return degree_; }
  const std::vector<std::pair<char, Transformation>>& generators() const noexcept { return generators_; }
  /// Group elements, identity first; empty when the element cap was hit.
  const std::vector<Transformation>& elements() const noexcept { return elements_; }
  std::size_t order() const noexcept { return elements_.size(); }
  bool truncated() const noexcept { return truncated_; }
  bool contains(const Transformation& t) const;

 private:
  friend PermGroup permutation_group(const Dfa& d, std::size_t cap);

  std::size_t degree_ = 0;
  std::vector<std::pair<char, Transformation>> generators_;
  std::vector<Transformation> elements_;
  bool truncated_ = false;
};

PermGroup permutation_group(const Dfa& d, std::size_t cap = kDefaultClosureCap);

/// Whether one k-subset's orbit under the generators covers every k-subset.
/// Works on generators only, so it never needs the group elements.
bool is_k_set_transitive(const PermGroup& g, std::size_t k);
bool is_set_transitive(const PermGroup& g);
/// Entry k-1 holds is_k_set_transitive(g, k) for k = 1..n.
std::vector<bool> set_transitivity_profile(const PermGroup& g);

}  // namespace atomix
