#include "atomix/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "atomix/atoms.hpp"
#include "atomix/dps.hpp"
#include "atomix/error.hpp"
#include "atomix/psi.hpp"

namespace atomix {

StateSet oracle_atom_of_word(const Dfa& d, std::string_view word) {
  std::vector<std::size_t> letters;
  for (char c : word) letters.push_back(d.symbol_index(c));
  StateSet out(d.size());
  for (State q = 0; q < d.size(); ++q) {
    State p = q;
    for (auto i : letters) p = d.step(p, i);
    if (d.is_final(p)) out.insert(q);
  }
  return out;
}

OracleVerdict oracle_check_atoms(const MinimalDfa& md, const OracleConfig& cfg) {
  const Dfa& d = md.dfa();
  OracleVerdict verdict;
  verdict.enumerated = enumerate_atoms(md);

  std::unordered_map<StateSet, SupportAutomaton> supports;
  std::set<StateSet> observed;
  const std::size_t k = d.alphabet_size();
  for (std::size_t len = 0; len <= cfg.max_word_length; ++len) {
    std::vector<std::size_t> digits(len, 0);
    Word w(len, d.alphabet().front());
    while (true) {
      const StateSet s = oracle_atom_of_word(d, w);
      ++verdict.words_checked;
      if (!std::binary_search(verdict.enumerated.begin(), verdict.enumerated.end(), s))
        raise(ErrorKind::OracleMismatch,
              "word '" + w + "' lies in atom " + s.to_string() + ", which enumeration missed");
      auto it = supports.find(s);
      if (it == supports.end()) it = supports.emplace(s, build_support_automaton(d, s)).first;
      if (!it->second.is_final(it->second.run(w)))
        raise(ErrorKind::OracleMismatch,
              "word '" + w + "' rejected by the support automaton of " + s.to_string());
      observed.insert(s);

      std::size_t i = len;
      while (i > 0 && ++digits[i - 1] == k) {
        digits[i - 1] = 0;
        w[i - 1] = d.alphabet()[0];
        --i;
      }
      if (i == 0) break;
      w[i - 1] = d.alphabet()[digits[i - 1]];
    }
  }
  verdict.observed.assign(observed.begin(), observed.end());
  std::sort(verdict.observed.begin(), verdict.observed.end());
  verdict.equality_checked = cfg.max_word_length >= verdict.enumerated.size();
  if (verdict.equality_checked && verdict.observed != verdict.enumerated) {
    for (const auto& s : verdict.enumerated)
      if (!std::binary_search(verdict.observed.begin(), verdict.observed.end(), s))
        raise(ErrorKind::OracleMismatch, "enumerated atom " + s.to_string() + " has no word of length <= " +
                                             std::to_string(cfg.max_word_length));
  }
  return verdict;
}

std::vector<PsiCheckRow> verify_psi_by_enumeration(std::size_t n_max) {
  if (n_max > 10) raise(ErrorKind::LimitExceeded, "psi verification limited to n <= 10");
  std::vector<PsiCheckRow> rows;
  for (std::size_t n = 1; n <= n_max; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      const auto count = count_type_states(n, k);
      const BigInt expected = psi(static_cast<long long>(n), static_cast<long long>(k));
      if (BigInt(count) != expected)
        raise(ErrorKind::OracleMismatch, "Mismatch(" + std::to_string(n) + "," + std::to_string(k) +
                                             "): enumerated " + std::to_string(count) + ", psi " + expected.str());
      rows.push_back({n, k, count});
    }
  }
  return rows;
}

Dfa reversal_automaton(const Dfa& d) {
  const std::size_t k = d.alphabet_size();
  // Reversed edges: for each letter and target, the sources.
  std::vector<std::vector<std::vector<State>>> reversed(k, std::vector<std::vector<State>>(d.size()));
  for (State q = 0; q < d.size(); ++q)
    for (std::size_t i = 0; i < k; ++i) reversed[i][d.step(q, i)].push_back(q);

  using Subset = std::set<State>;
  const auto start_members = d.finals().members();
  std::map<Subset, State> index;
  std::vector<Subset> subsets;
  auto intern = [&](Subset s) {
    auto [it, inserted] = index.emplace(s, static_cast<State>(subsets.size()));
    if (inserted) subsets.push_back(std::move(s));
    return it->second;
  };
  intern(Subset(start_members.begin(), start_members.end()));
  std::vector<State> delta;
  for (std::size_t j = 0; j < subsets.size(); ++j) {
    for (std::size_t i = 0; i < k; ++i) {
      Subset next;
      for (State q : subsets[j]) next.insert(reversed[i][q].begin(), reversed[i][q].end());
      delta.push_back(intern(std::move(next)));
    }
  }
  StateSet finals(subsets.size());
  for (std::size_t j = 0; j < subsets.size(); ++j)
    if (subsets[j].contains(d.start())) finals.insert(static_cast<State>(j));
  return Dfa(subsets.size(), d.alphabet(), std::move(delta), 0, std::move(finals));
}

std::size_t reversal_state_count(const Dfa& d) { return minimize(reversal_automaton(d)).size(); }

}  // namespace atomix
