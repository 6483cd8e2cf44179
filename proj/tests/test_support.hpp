#pragma once

// Fixtures and brute-force oracles for the test suites. Nothing here calls
// into the minimization, DPS or atom code it is used to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "atomix/dfa.hpp"
#include "atomix/dfa_io.hpp"
#include "atomix/generators.hpp"

namespace atomix::testing {

inline const char* kW3Text =
    "states: 3\n"
    "alphabet: abc\n"
    "start: 0\n"
    "final: 0\n"
    "trans: 0 a 1\n"
    "trans: 0 b 1\n"
    "trans: 0 c 1\n"
    "trans: 1 a 2\n"
    "trans: 1 b 0\n"
    "trans: 1 c 1\n"
    "trans: 2 a 0\n"
    "trans: 2 b 2\n"
    "trans: 2 c 2\n";

inline Dfa w3() { return parse_dfa(kW3Text); }

inline Dfa p3() {
  return Dfa(3, "ab", {1, 1, 2, 0, 0, 2}, 0, StateSet(3, {0}));
}

/// Single letter acting as a constant map onto state 0.
inline Dfa constant_letter_dfa(std::size_t n) {
  std::vector<State> delta(n, 0);
  return Dfa(n, "a", delta, 0, StateSet(n, {1}));
}

/// Every word over `alphabet` of length at most `max_len`, by length then
/// alphabet order.
inline std::vector<Word> all_words(const std::string& alphabet, std::size_t max_len) {
  std::vector<Word> out{""};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (char c : alphabet) out.push_back(out[i] + c);
    begin = end;
  }
  return out;
}

/// Pairwise table-filling: number of Myhill-Nerode classes among the states
/// reachable from the start. Quadratic, independent of the library's
/// partition refinement.
inline std::size_t table_filling_state_count(std::size_t n, std::size_t k, const std::function<std::size_t(std::size_t, std::size_t)>& step,
                                             std::size_t start, const std::function<bool(std::size_t)>& final) {
  std::vector<bool> reach(n, false);
  std::vector<std::size_t> stack{start};
  reach[start] = true;
  while (!stack.empty()) {
    const auto q = stack.back();
    stack.pop_back();
    for (std::size_t a = 0; a < k; ++a)
      if (!reach[step(q, a)]) {
        reach[step(q, a)] = true;
        stack.push_back(step(q, a));
      }
  }
  std::vector<std::vector<bool>> distinct(n, std::vector<bool>(n, false));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) distinct[p][q] = final(p) != final(q);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        if (distinct[p][q]) continue;
        for (std::size_t a = 0; a < k; ++a)
          if (distinct[step(p, a)][step(q, a)]) {
            distinct[p][q] = true;
            changed = true;
            break;
          }
      }
  }
  std::size_t classes = 0;
  std::vector<bool> counted(n, false);
  for (std::size_t p = 0; p < n; ++p) {
    if (!reach[p] || counted[p]) continue;
    ++classes;
    for (std::size_t q = p; q < n; ++q)
      if (reach[q] && !distinct[p][q]) counted[q] = true;
  }
  return classes;
}

inline std::size_t table_filling_state_count(const Dfa& d) {
  return table_filling_state_count(
      d.size(), d.alphabet_size(), [&](std::size_t q, std::size_t a) { return d.step(static_cast<State>(q), a); },
      d.start(), [&](std::size_t q) { return d.is_final(static_cast<State>(q)); });
}

/// State complexity of A_S computed through the transformation monoid: the
/// residual of A_S after u depends only on the map u_M, so the automaton
/// over {u_M : u any word} accepting f iff {q : f(q) in F} = S recognizes
/// A_S. Its state count after table filling is the complexity.
inline std::size_t monoid_atom_complexity(const Dfa& d, const std::vector<bool>& in_s) {
  const std::size_t n = d.size();
  using Map = std::vector<State>;
  std::map<Map, std::size_t> index;
  std::vector<Map> maps;
  Map id(n);
  for (State q = 0; q < n; ++q) id[q] = q;
  index[id] = 0;
  maps.push_back(id);
  std::vector<std::size_t> delta;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    for (std::size_t a = 0; a < d.alphabet_size(); ++a) {
      Map next(n);
      for (State q = 0; q < n; ++q) next[q] = d.step(maps[i][q], a);
      auto [it, inserted] = index.emplace(next, maps.size());
      if (inserted) maps.push_back(next);
      delta.push_back(it->second);
    }
  }
  const std::size_t k = d.alphabet_size();
  return table_filling_state_count(
      maps.size(), k, [&](std::size_t q, std::size_t a) { return delta[q * k + a]; }, 0,
      [&](std::size_t m) {
        for (State q = 0; q < n; ++q)
          if (d.is_final(maps[m][q]) != in_s[q]) return false;
        return true;
      });
}

/// Psi by labelling each state 0 (in neither), 1 (in S') or 2 (in T') and
/// counting labellings whose class sizes fit the (n,s)-type bounds.
inline std::uint64_t labelling_psi(std::size_t n, std::size_t s) {
  std::uint64_t total = (s > 0 && s < n) ? 1 : 0;
  std::vector<int> label(n, 0);
  while (true) {
    const auto a = static_cast<std::size_t>(std::count(label.begin(), label.end(), 1));
    const auto b = static_cast<std::size_t>(std::count(label.begin(), label.end(), 2));
    if (s == n) total += (a >= 1 && b == 0);
    else if (s == 0) total += (a == 0 && b >= 1);
    else total += (a >= 1 && a <= s && b >= 1 && b <= n - s);
    std::size_t i = 0;
    while (i < n && ++label[i] == 3) label[i++] = 0;
    if (i == n) break;
  }
  return total;
}

/// Atoms observed from words of length at most `max_len`, as bit vectors.
/// Walks the word tree depth-first, carrying the image of every state.
inline std::set<std::vector<bool>> observed_atoms(const Dfa& d, std::size_t max_len) {
  std::set<std::vector<bool>> out;
  std::function<void(const std::vector<State>&, std::size_t)> visit = [&](const std::vector<State>& cur,
                                                                           std::size_t depth) {
    std::vector<bool> s(d.size());
    for (State q = 0; q < d.size(); ++q) s[q] = d.is_final(cur[q]);
    out.insert(std::move(s));
    if (depth == max_len) return;
    std::vector<State> next(d.size());
    for (std::size_t a = 0; a < d.alphabet_size(); ++a) {
      for (State q = 0; q < d.size(); ++q) next[q] = d.step(cur[q], a);
      visit(next, depth + 1);
    }
  };
  std::vector<State> id(d.size());
  for (State q = 0; q < d.size(); ++q) id[q] = q;
  visit(id, 0);
  return out;
}

inline std::vector<bool> to_bits(const StateSet& s) {
  std::vector<bool> out(s.width());
  for (State q : s.members()) out[q] = true;
  return out;
}

/// Small mixed corpus for property tests: the witnesses plus random DFAs.
inline std::vector<Dfa> property_corpus(std::size_t random_count, std::size_t max_n, std::size_t max_k) {
  std::vector<Dfa> out{w3(), p3(), gen_full_tn(4, StateSet(4, {0, 2})), gen_perm_only(4, StateSet(4, {1}))};
  for (std::uint64_t seed = 1; out.size() < random_count + 4; ++seed) {
    const std::size_t n = 1 + seed % max_n;
    const std::size_t k = 1 + (seed / max_n) % max_k;
    out.push_back(gen_random(n, k, seed));
  }
  return out;
}

}  // namespace atomix::testing
