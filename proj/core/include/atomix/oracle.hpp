#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "atomix/dfa.hpp"
#include "atomix/minimize.hpp"
#include "atomix/state_set.hpp"

namespace atomix {

// Brute-force checks that recompute the atom-level quantities along routes
// that do not share code with the main constructions.

struct OracleConfig {
  std::size_t max_word_length = 8;
  bool strict = false;
};

struct OracleVerdict {
  std::vector<StateSet> observed;
  std::vector<StateSet> enumerated;
  /// Whether observed == enumerated was required (max length >= atom count).
  bool equality_checked = false;
  std::uint64_t words_checked = 0;
};

/// {q : q.w in F}, by walking the table from every state.
StateSet oracle_atom_of_word(const Dfa& d, std::string_view word);

/// Enumerates every word up to cfg.max_word_length and checks that each
/// observed atom is enumerated, that the two sets coincide when the length
/// bound reaches the atom count, and that every word is accepted by the
/// support automaton of its atom. Throws OracleMismatch naming the word.
OracleVerdict oracle_check_atoms(const MinimalDfa& d, const OracleConfig& cfg);

struct PsiCheckRow {
  std::size_t n;
  std::size_t k;
  std::uint64_t enumerated;
};

/// count_type_states(n,k) against psi(n,k) for 0 <= k <= n <= n_max (n_max <= 10).
/// Throws OracleMismatch on the first disagreement.
std::vector<PsiCheckRow> verify_psi_by_enumeration(std::size_t n_max);

/// Deterministic automaton of the reversed language: subsets reachable from F
/// under reversed edges, final iff they contain the start state.
Dfa reversal_automaton(const Dfa& d);

/// State count of the minimized reversal automaton; equals the atom count.
std::size_t reversal_state_count(const Dfa& d);

}  // namespace atomix
