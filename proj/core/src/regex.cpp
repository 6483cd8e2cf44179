#include "atomix/regex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "atomix/error.hpp"
#include "atomix/minimize.hpp"

namespace atomix {
namespace {

// Thompson NFA: each fragment has one entry and one exit state.
struct Nfa {
  struct Edge {
    char symbol;  // '\0' for epsilon
    std::size_t to;
  };
  std::vector<std::vector<Edge>> edges;

  std::size_t add_state() {
    edges.emplace_back();
    return edges.size() - 1;
  }
  void link(std::size_t from, char symbol, std::size_t to) { edges[from].push_back({symbol, to}); }
};

struct Fragment {
  std::size_t in;
  std::size_t out;
};

class Parser {
 public:
  Parser(std::string_view pattern, Nfa& nfa) : src_(pattern), nfa_(nfa) {}

  Fragment parse() {
    Fragment f = expr();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    raise(ErrorKind::Syntax, "regex position " + std::to_string(pos_) + ": " + what);
  }

  bool at(char c) const { return pos_ < src_.size() && src_[pos_] == c; }

  Fragment epsilon() {
    const auto s = nfa_.add_state();
    return {s, s};
  }

  Fragment expr() {
    Fragment left = term();
    if (!at('|')) return left;
    const auto in = nfa_.add_state();
    const auto out = nfa_.add_state();
    auto attach = [&](Fragment f) {
      nfa_.link(in, '\0', f.in);
      nfa_.link(f.out, '\0', out);
    };
    attach(left);
    while (at('|')) {
      ++pos_;
      attach(term());
    }
    return {in, out};
  }

  Fragment term() {
    Fragment acc = epsilon();
    while (pos_ < src_.size() && src_[pos_] != '|' && src_[pos_] != ')') {
      const Fragment f = factor();
      nfa_.link(acc.out, '\0', f.in);
      acc.out = f.out;
    }
    return acc;
  }

  Fragment factor() {
    Fragment b = base();
    if (!at('*')) return b;
    ++pos_;
    const auto hub = nfa_.add_state();
    nfa_.link(hub, '\0', b.in);
    nfa_.link(b.out, '\0', hub);
    return {hub, hub};
  }

  Fragment base() {
    const char c = src_[pos_];
    if (c >= 'a' && c <= 'z') {
      ++pos_;
      const auto in = nfa_.add_state();
      const auto out = nfa_.add_state();
      nfa_.link(in, c, out);
      return {in, out};
    }
    if (c == '(') {
      ++pos_;
      Fragment inner = expr();
      if (!at(')')) fail("missing ')'");
      ++pos_;
      return inner;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  Nfa& nfa_;
};

using Subset = std::vector<std::size_t>;

Subset closure(const Nfa& nfa, Subset seed) {
  std::set<std::size_t> seen(seed.begin(), seed.end());
  std::vector<std::size_t> stack(seed.begin(), seed.end());
  while (!stack.empty()) {
    const auto q = stack.back();
    stack.pop_back();
    for (const auto& e : nfa.edges[q])
      if (e.symbol == '\0' && seen.insert(e.to).second) stack.push_back(e.to);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

Dfa compile_regex(std::string_view pattern, std::string_view extra_alphabet) {
  Nfa nfa;
  const Fragment root = Parser(pattern, nfa).parse();

  std::set<char> letters;
  for (char c : pattern)
    if (c >= 'a' && c <= 'z') letters.insert(c);
  for (char c : extra_alphabet) letters.insert(c);
  if (letters.empty()) raise(ErrorKind::EmptyAlphabet, "pattern has no letters and no alphabet was given");
  const std::string alphabet(letters.begin(), letters.end());
  if (!is_valid_alphabet(alphabet)) raise(ErrorKind::Syntax, "alphabet must be ASCII letters");

  // Subset construction; the empty subset becomes the dead state.
  std::map<Subset, State> index;
  std::vector<Subset> subsets;
  auto intern = [&](Subset s) {
    auto [it, inserted] = index.emplace(s, static_cast<State>(subsets.size()));
    if (inserted) subsets.push_back(std::move(s));
    return it->second;
  };
  intern(closure(nfa, {root.in}));
  std::vector<State> delta;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (char a : alphabet) {
      Subset next;
      for (auto q : subsets[i])
        for (const auto& e : nfa.edges[q])
          if (e.symbol == a) next.push_back(e.to);
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      const State t = intern(closure(nfa, std::move(next)));
      delta.push_back(t);
    }
  }
  StateSet finals(subsets.size());
  for (std::size_t i = 0; i < subsets.size(); ++i)
    if (std::binary_search(subsets[i].begin(), subsets[i].end(), root.out)) finals.insert(static_cast<State>(i));

  return minimize(Dfa(subsets.size(), alphabet, std::move(delta), 0, std::move(finals)));
}

}  // namespace atomix
