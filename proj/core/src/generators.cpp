#include "atomix/generators.hpp"

#include <string>
#include <vector>

#include "atomix/error.hpp"

namespace atomix {
namespace {

void check_witness_args(std::size_t n, const StateSet& finals) {
  if (n < 3) raise(ErrorKind::Domain, "witness families need n >= 3");
  if (finals.width() != n) raise(ErrorKind::Domain, "final set width differs from n");
  if (finals.empty() || finals.size() == n) raise(ErrorKind::Domain, "final set must be nonempty and proper");
}

State cycle(std::size_t n, State q) { return static_cast<State>((q + 1) % n); }
State swap01(State q) { return q == 0 ? 1 : q == 1 ? 0 : q; }
State collapse(State q) { return q == 0 ? 1 : q; }

}  // namespace

Dfa gen_full_tn(std::size_t n, const StateSet& finals) {
  check_witness_args(n, finals);
  std::vector<State> delta;
  for (State q = 0; q < n; ++q) {
    delta.push_back(cycle(n, q));
    delta.push_back(swap01(q));
    delta.push_back(collapse(q));
  }
  return Dfa(n, "abc", std::move(delta), 0, finals);
}

Dfa gen_perm_only(std::size_t n, const StateSet& finals) {
  check_witness_args(n, finals);
  std::vector<State> delta;
  for (State q = 0; q < n; ++q) {
    delta.push_back(cycle(n, q));
    delta.push_back(swap01(q));
  }
  return Dfa(n, "ab", std::move(delta), 0, finals);
}

Dfa gen_random(std::size_t n, std::size_t k, std::uint64_t seed) {
  static constexpr std::string_view kLetters = "abcdefghijklmnopqrstuvwxyz";
  if (n < 1 || k < 1) raise(ErrorKind::Domain, "random DFA needs n >= 1 and k >= 1");
  if (k > kLetters.size()) raise(ErrorKind::Domain, "at most 26 letters");
  Lcg rng(seed);
  auto draw = [&rng] { return rng() >> 33; };
  std::vector<State> delta(n * k);
  for (auto& target : delta) target = static_cast<State>(draw() % n);
  StateSet finals(n);
  for (State q = 0; q < n; ++q)
    if (draw() % 2 == 1) finals.insert(q);
  return Dfa(n, std::string(kLetters.substr(0, k)), std::move(delta), 0, std::move(finals));
}

}  // namespace atomix
