#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace atomix {

using State = std::uint32_t;

/// A subset of the states 0..width-1 of some automaton, stored as a bit
/// vector. Sets of width at most 64 live inline; those are the only ones the
/// subset constructions ever touch, but wider sets (final states of a large
/// support automaton viewed as a DFA) are supported.
///
/// Ordering is canonical: by cardinality first, then by the bit vector read
/// as an unsigned integer.
class StateSet {
 public:
  StateSet() = default;
  explicit StateSet(std::size_t width);
  StateSet(std::size_t width, std::initializer_list<State> members);

  static StateSet full(std::size_t width);
  static StateSet from_mask(std::size_t width, std::uint64_t mask);
  static StateSet from_indices(std::size_t width, std::span<const State> members);

  std::size_t width() const noexcept { return width_; }
  std::size_t size() const noexcept;
  bool empty() const noexcept;

  bool contains(State q) const noexcept;
  void insert(State q);
  void erase(State q);

  StateSet complement() const;
  bool is_subset_of(const StateSet& other) const noexcept;
  bool intersects(const StateSet& other) const noexcept;

  StateSet& operator|=(const StateSet& other);
  StateSet& operator&=(const StateSet& other);
  friend StateSet operator|(StateSet a, const StateSet& b) { return a |= b; }
  friend StateSet operator&(StateSet a, const StateSet& b) { return a &= b; }

  /// Members in increasing order.
  std::vector<State> members() const;

  /// Bit vector as an integer; only valid for width <= 64.
  std::uint64_t mask() const;

  /// "0,2,5"; the empty set renders as "{}".
  std::string to_string() const;

  std::size_t hash() const noexcept;

  friend bool operator==(const StateSet& a, const StateSet& b) noexcept = default;
  friend std::strong_ordering operator<=>(const StateSet& a, const StateSet& b) noexcept;

 private:
  void check_index(State q) const;

  std::size_t width_ = 0;
  boost::container::small_vector<std::uint64_t, 1> words_;
};

/// Parses the canonical text form (also accepting "empty" for the empty set).
StateSet parse_state_set(std::string_view text, std::size_t width);

/// Number of set bits; shared by the mask-level subset constructions.
inline int popcount(std::uint64_t mask) noexcept { return std::popcount(mask); }

}  // namespace atomix

template <>
struct std::hash<atomix::StateSet> {
  std::size_t operator()(const atomix::StateSet& s) const noexcept { return s.hash(); }
};
