#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "atomix/dfa.hpp"

namespace atomix {

/// Three letters over n states: a = cycle i -> i+1 mod n, b = transposition
/// of 0 and 1, c = sends 0 to 1 and fixes the rest. These generate the full
/// transformation semigroup on n points. Start state 0. gen_full_tn(3, {0})
/// is the running 3-state example. Needs n >= 3 and a proper nonempty
/// final set.
Dfa gen_full_tn(std::size_t n, const StateSet& finals);

/// gen_full_tn without the collapse letter: the permutation group is the
/// full symmetric group but no word acts as a singular map.
Dfa gen_perm_only(std::size_t n, const StateSet& finals);

/// 64-bit LCG x' = 6364136223846793005 x + 1442695040888963407 (mod 2^64),
/// seeded with the given value as the initial state. Each draw is the new
/// state shifted right by 33 bits.
using Lcg = std::linear_congruential_engine<std::uint64_t, 6364136223846793005ULL, 1442695040888963407ULL, 0>;

/// Random complete DFA over the first k letters a, b, c, ... with start 0.
/// Draws, in order: for each state q = 0..n-1 and each letter, the target is
/// draw mod n; then for each state, it is final iff draw mod 2 = 1. The
/// result need not be minimal.
Dfa gen_random(std::size_t n, std::size_t k, std::uint64_t seed);

}  // namespace atomix
