#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "atomix/state_set.hpp"
#include "atomix/transformation.hpp"

namespace atomix {

/// A word is a string of alphabet symbols; the empty string is epsilon.
using Word = std::string;

/// Complete deterministic finite automaton over single-letter ASCII symbols.
/// States are 0..n-1. Instances are validated on construction and immutable.
class Dfa {
 public:
  /// `delta` is row-major: delta[q * |alphabet| + i] is the target of state q
  /// on the i-th alphabet symbol.
  Dfa(std::size_t n, std::string alphabet, std::vector<State> delta, State start, StateSet finals);

  std::size_t size() const noexcept { return n_; }
  const std::string& alphabet() const noexcept { return alphabet_; }
  std::size_t alphabet_size() const noexcept { return alphabet_.size(); }
  State start() const noexcept { return start_; }
  const StateSet& finals() const noexcept { return finals_; }
  std::span<const State> table() const noexcept { return delta_; }

  /// Position of `symbol` in the alphabet; throws UnknownSymbol.
  std::size_t symbol_index(char symbol) const;
  std::optional<std::size_t> find_symbol(char symbol) const noexcept;

  State step(State q, std::size_t symbol_index) const noexcept {
    return delta_[q * alphabet_.size() + symbol_index];
  }
  State step(State q, char symbol) const { return step(q, symbol_index(symbol)); }
  State run(State q, std::string_view word) const;

  bool is_final(State q) const noexcept { return finals_.contains(q); }

  friend bool operator==(const Dfa&, const Dfa&) = default;

 private:
  std::size_t n_;
  std::string alphabet_;
  std::vector<State> delta_;
  State start_;
  StateSet finals_;
};

bool accepts(const Dfa& d, std::string_view word);

/// The map q -> q.w induced by `word`.
Transformation word_action(const Dfa& d, std::string_view word);

/// {q : delta(q, symbol) in target}.
StateSet preimage(const Dfa& d, const StateSet& target, char symbol);

/// Elementwise image X.w of a set of states.
StateSet image(const Dfa& d, const StateSet& set, std::string_view word);

/// True iff every symbol is a single ASCII letter and none repeats.
bool is_valid_alphabet(std::string_view alphabet) noexcept;

}  // namespace atomix
