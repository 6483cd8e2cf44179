#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "atomix/dfa.hpp"
#include "atomix/psi.hpp"
#include "atomix/state_set.hpp"

namespace atomix {

inline constexpr std::size_t kDefaultDpsMaxN = 12;
inline constexpr std::size_t kDefaultCountMaxN = 14;

/// State of the disjoint power square automaton: a pair (S, T) of disjoint
/// state sets, or the sink. Ordered canonically: pairs by (|S|, |T|, S, T)
/// with sets compared as integers, the sink last.
class DpsState {
 public:
  static DpsState bot(std::size_t n);
  /// Throws DomainError if the sets overlap or their widths differ.
  static DpsState pair(StateSet s, StateSet t);

  bool is_bot() const noexcept { return bot_; }
  std::size_t width() const noexcept { return s_.width(); }
  const StateSet& s() const noexcept { return s_; }
  const StateSet& t() const noexcept { return t_; }

  /// "{0}|{1,2}", or "⊥" for the sink.
  std::string label() const;

  friend bool operator==(const DpsState&, const DpsState&) = default;
  friend std::strong_ordering operator<=>(const DpsState& a, const DpsState& b) noexcept;

 private:
  DpsState(bool bot, StateSet s, StateSet t) : bot_(bot), s_(std::move(s)), t_(std::move(t)) {}

  bool bot_ = true;
  StateSet s_;
  StateSet t_;
};

/// (S,T) -> (Sa, Ta) if the images are disjoint, else the sink.
DpsState dps_step(const Dfa& d, const DpsState& p, char symbol);

/// Whether `p` is an (n,k)-type state:
///   k = n:      (S, {}) with S nonempty
///   k = 0:      ({}, T) with T nonempty
///   0 < k < n:  1 <= |S| <= k, 1 <= |T| <= n-k, or the sink.
bool state_type(std::size_t n, const DpsState& p, std::size_t k);

/// Counts (n,k)-type states by enumerating every disjoint pair plus the sink.
/// Independent of the closed form in psi(); the two must agree.
std::uint64_t count_type_states(std::size_t n, std::size_t k, std::size_t limit = kDefaultCountMaxN);

/// The reachable part of the DPS automaton from (S, complement of S). It
/// recognizes the atom A_S. States are stored in canonical order.
class SupportAutomaton {
 public:
  const Dfa& base() const noexcept { return base_; }
  const StateSet& subset() const noexcept { return subset_; }
  const BigInt& size_bound() const noexcept { return bound_; }

  std::size_t size() const noexcept { return states_.size(); }
  const std::vector<DpsState>& states() const noexcept { return states_; }
  std::size_t start() const noexcept { return start_; }
  std::size_t step(std::size_t state, std::size_t symbol_index) const noexcept {
    return delta_[state * base_.alphabet_size() + symbol_index];
  }
  /// Index reached from the start state on `word`.
  std::size_t run(std::string_view word) const;
  bool is_final(std::size_t state) const noexcept { return finals_.contains(static_cast<State>(state)); }
  const StateSet& finals() const noexcept { return finals_; }
  bool has_final() const noexcept { return !finals_.empty(); }
  std::optional<std::size_t> index_of(const DpsState& p) const;

  /// The automaton as a plain complete DFA (same state numbering).
  Dfa as_dfa() const;

  /// Graphviz rendering: pair states labelled "{S}|{T}", the sink "⊥",
  /// finals double-circled, start marked by an arrow from an invisible node.
  std::string to_dot() const;

 private:
  friend SupportAutomaton build_support_automaton(const Dfa& d, const StateSet& subset, std::size_t max_n);

  SupportAutomaton(Dfa base, StateSet subset) : base_(std::move(base)), subset_(std::move(subset)) {}

  Dfa base_;
  StateSet subset_;
  BigInt bound_;
  std::vector<DpsState> states_;
  std::vector<std::size_t> delta_;
  std::size_t start_ = 0;
  StateSet finals_;
};

/// Breadth-first construction from (S, complement of S). Finals are the
/// reachable pairs (S', T') with S' inside F and T' disjoint from F.
/// Throws LimitExceeded when the base automaton has more than `max_n` states.
SupportAutomaton build_support_automaton(const Dfa& d, const StateSet& subset, std::size_t max_n = kDefaultDpsMaxN);

}  // namespace atomix
