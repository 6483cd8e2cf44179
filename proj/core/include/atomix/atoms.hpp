#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "atomix/dps.hpp"
#include "atomix/minimize.hpp"
#include "atomix/psi.hpp"
#include "atomix/state_set.hpp"

namespace atomix {

struct AtomOptions {
  std::size_t max_n = kDefaultDpsMaxN;
  /// Compute per-atom complexities on worker threads. Results are identical
  /// either way.
  bool parallel = false;
};

/// One row of the per-subset table: whether A_S is nonempty, and if so the
/// state complexity of its minimal complete DFA against the bound.
struct AtomReport {
  StateSet subset;
  bool is_atom = false;
  std::optional<std::size_t> complexity;
  BigInt bound;
  bool maximal = false;
};

/// Every subset of {0..n-1}, in canonical order (by size, then as integers).
std::vector<StateSet> all_subsets(std::size_t n);

/// The sets S_w = {q : q.w in F} over all words w, i.e. exactly the S with
/// A_S nonempty. Computed as the closure of {F} under per-letter preimages.
/// Canonically ordered.
std::vector<StateSet> enumerate_atoms(const MinimalDfa& d, std::size_t max_n = kDefaultDpsMaxN);

bool is_atom(const MinimalDfa& d, const StateSet& subset, std::size_t max_n = kDefaultDpsMaxN);

/// Number of states of the minimal complete DFA of A_S, obtained by
/// minimizing the support automaton of S. Throws NotAnAtom.
std::size_t atom_complexity(const MinimalDfa& d, const StateSet& subset, std::size_t max_n = kDefaultDpsMaxN);

bool is_maximal_atom(const MinimalDfa& d, const StateSet& subset, std::size_t max_n = kDefaultDpsMaxN);

/// All 2^n atoms present and each of complexity psi(n, |S|). Needs n >= 2.
bool is_maximally_atomic(const MinimalDfa& d, const AtomOptions& options = {});

/// Table over all 2^n subsets in canonical order.
std::vector<AtomReport> atom_reports(const MinimalDfa& d, const AtomOptions& options = {});

}  // namespace atomix
