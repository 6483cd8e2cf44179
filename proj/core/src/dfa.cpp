#include "atomix/dfa.hpp"

#include <algorithm>
#include <cctype>

#include "atomix/error.hpp"

namespace atomix {

bool is_valid_alphabet(std::string_view alphabet) noexcept {
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    const auto c = static_cast<unsigned char>(alphabet[i]);
    if (c > 127 || std::isalpha(c) == 0) return false;
    if (alphabet.find(alphabet[i], i + 1) != std::string_view::npos) return false;
  }
  return true;
}

Dfa::Dfa(std::size_t n, std::string alphabet, std::vector<State> delta, State start, StateSet finals)
    : n_(n), alphabet_(std::move(alphabet)), delta_(std::move(delta)), start_(start), finals_(std::move(finals)) {
  if (n_ == 0) raise(ErrorKind::Domain, "automaton needs at least one state");
  if (alphabet_.empty()) raise(ErrorKind::EmptyAlphabet, "alphabet is empty");
  if (!is_valid_alphabet(alphabet_))
    raise(ErrorKind::Syntax, "alphabet '" + alphabet_ + "' must be distinct ASCII letters");
  if (delta_.size() != n_ * alphabet_.size())
    raise(ErrorKind::Domain, "transition table has " + std::to_string(delta_.size()) + " entries, expected " +
                                 std::to_string(n_ * alphabet_.size()));
  for (State q : delta_)
    if (q >= n_) raise(ErrorKind::IndexOutOfRange, "transition target " + std::to_string(q));
  if (start_ >= n_) raise(ErrorKind::IndexOutOfRange, "start state " + std::to_string(start_));
  if (finals_.width() != n_)
    raise(ErrorKind::IndexOutOfRange, "final set width " + std::to_string(finals_.width()) +
                                          " differs from state count " + std::to_string(n_));
}

std::optional<std::size_t> Dfa::find_symbol(char symbol) const noexcept {
  const auto pos = alphabet_.find(symbol);
  if (pos == std::string::npos) return std::nullopt;
  return pos;
}

std::size_t Dfa::symbol_index(char symbol) const {
  if (auto i = find_symbol(symbol)) return *i;
  raise(ErrorKind::UnknownSymbol, std::string("symbol '") + symbol + "' not in alphabet '" + alphabet_ + "'");
}

State Dfa::run(State q, std::string_view word) const {
  for (char c : word) q = step(q, symbol_index(c));
  return q;
}

bool accepts(const Dfa& d, std::string_view word) { return d.is_final(d.run(d.start(), word)); }

Transformation word_action(const Dfa& d, std::string_view word) {
  std::vector<std::size_t> letters;
  letters.reserve(word.size());
  for (char c : word) letters.push_back(d.symbol_index(c));
  std::vector<State> images(d.size());
  for (State q = 0; q < d.size(); ++q) {
    State p = q;
    for (auto i : letters) p = d.step(p, i);
    images[q] = p;
  }
  return Transformation(std::move(images));
}

StateSet preimage(const Dfa& d, const StateSet& target, char symbol) {
  const std::size_t i = d.symbol_index(symbol);
  StateSet out(d.size());
  for (State q = 0; q < d.size(); ++q)
    if (target.contains(d.step(q, i))) out.insert(q);
  return out;
}

StateSet image(const Dfa& d, const StateSet& set, std::string_view word) {
  return word_action(d, word).apply(set);
}

}  // namespace atomix
