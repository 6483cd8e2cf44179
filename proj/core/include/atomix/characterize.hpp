#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "atomix/atoms.hpp"
#include "atomix/dfa.hpp"
#include "atomix/semigroup.hpp"

namespace atomix {

struct CharacterizeOptions {
  bool strict = false;
  bool parallel = false;
  std::size_t max_n = kDefaultDpsMaxN;
  std::size_t closure_cap = kDefaultClosureCap;
};

/// Verdicts on the three equivalent conditions for a minimal DFA with at
/// least three states:
///   (1) the language is maximally atomic;
///   (2) every atom has complexity psi(n, |S|);
///   (3) T(M) has a rank n-1 element and P(M) is set-transitive.
/// `consistent` records whether the three agree. They always should; a false
/// value indicates a defect and is surfaced rather than hidden.
struct CharacterizationReport {
  std::size_t n = 0;
  std::size_t input_states = 0;
  std::vector<std::optional<State>> state_map;
  bool renumbered = false;

  bool cond_maximally_atomic = false;
  bool cond_every_atom_maximal = false;
  bool cond_rank_and_transitive = false;
  bool consistent = false;

  std::optional<Word> rank_n_minus_1_witness;
  std::vector<bool> set_transitivity_per_k;
  std::size_t semigroup_size = 0;
  std::size_t group_order = 0;

  std::size_t atom_count = 0;
  std::vector<AtomReport> atoms;
};

/// Minimizes first (or rejects non-minimal input when strict). Throws
/// DomainError for n < 3 and Truncated when the semigroup cap is hit.
CharacterizationReport characterize(const Dfa& d, const CharacterizeOptions& options = {});

/// {n, conditions: {...}, consistent, atoms: [{set, is_atom, complexity,
/// bound, maximal}], ...}. Key order is fixed.
nlohmann::ordered_json to_json(const CharacterizationReport& report);

nlohmann::ordered_json to_json(const AtomReport& report);

/// Bounds of psi fit in 64 bits for every n the tool accepts; larger values
/// are written as decimal strings.
nlohmann::ordered_json big_to_json(const BigInt& value);

}  // namespace atomix
