#pragma once

#include <optional>
#include <vector>

#include "atomix/dfa.hpp"

namespace atomix {

struct Minimized {
  Dfa dfa;
  /// For each input state, its state in `dfa`; empty for unreachable states.
  std::vector<std::optional<State>> state_map;
};

/// Minimal complete DFA of L(d) in canonical numbering: unreachable states
/// dropped, equivalent states merged by Hopcroft partition refinement, then
/// states renumbered breadth-first from the start state with letters taken in
/// alphabet order. Two DFAs for the same language over the same alphabet
/// minimize to identical values.
Minimized minimize_with_map(const Dfa& d);
Dfa minimize(const Dfa& d);

bool is_minimal(const Dfa& d);

/// Renumbers the reachable part of `d` breadth-first from the start state,
/// letters in alphabet order. Exposed for the regex frontend and tests.
Minimized canonical_reachable(const Dfa& d);

/// A DFA known to be minimal, together with how it relates to the automaton
/// the caller supplied. All atom-level operations take this type, since atoms
/// are defined through the quotients of the minimal automaton.
class MinimalDfa {
 public:
  /// Input that is already minimal is kept with its own numbering; anything
  /// else is minimized (or rejected with NotMinimal when `strict`).
  static MinimalDfa from(const Dfa& d, bool strict = false);

  const Dfa& dfa() const noexcept { return dfa_; }
  std::size_t size() const noexcept { return dfa_.size(); }
  std::size_t input_size() const noexcept { return state_map_.size(); }
  bool renumbered() const noexcept { return renumbered_; }
  const std::vector<std::optional<State>>& state_map() const noexcept { return state_map_; }

  operator const Dfa&() const noexcept { return dfa_; }

 private:
  MinimalDfa(Dfa dfa, std::vector<std::optional<State>> map, bool renumbered)
      : dfa_(std::move(dfa)), state_map_(std::move(map)), renumbered_(renumbered) {}

  Dfa dfa_;
  std::vector<std::optional<State>> state_map_;
  bool renumbered_;
};

}  // namespace atomix
