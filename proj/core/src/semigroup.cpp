#include "atomix/semigroup.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "atomix/error.hpp"

namespace atomix {
namespace {

void require_complete(const SemigroupClosure& s) {
  if (s.truncated())
    raise(ErrorKind::Truncated, "semigroup closure stopped at " + std::to_string(s.size()) + " elements");
}

std::uint64_t image_mask(const Transformation& t, std::uint64_t set) {
  std::uint64_t out = 0;
  while (set != 0) {
    const auto q = static_cast<State>(std::countr_zero(set));
    out |= std::uint64_t{1} << t(q);
    set &= set - 1;
  }
  return out;
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::vector<std::pair<char, Transformation>> letter_actions(const Dfa& d) {
  std::vector<std::pair<char, Transformation>> out;
  out.reserve(d.alphabet_size());
  for (std::size_t i = 0; i < d.alphabet_size(); ++i) {
    std::vector<State> images(d.size());
    for (State q = 0; q < d.size(); ++q) images[q] = d.step(q, i);
    out.emplace_back(d.alphabet()[i], Transformation(std::move(images)));
  }
  return out;
}

std::optional<Word> SemigroupClosure::witness(const Transformation& t) const {
  const auto it = index_.find(t);
  if (it == index_.end()) return std::nullopt;
  return elements_[it->second].witness;
}

SemigroupClosure semigroup_closure(const Dfa& d, std::size_t cap) {
  if (cap == 0) raise(ErrorKind::Domain, "closure cap must be at least 1");
  SemigroupClosure s;
  s.degree_ = d.size();
  const auto letters = letter_actions(d);

  auto add = [&](Transformation t, Word w) {
    if (s.index_.contains(t)) return true;
    if (s.elements_.size() == cap) {
      s.truncated_ = true;
      return false;
    }
    s.index_.emplace(t, s.elements_.size());
    s.elements_.push_back({std::move(t), std::move(w)});
    return true;
  };

  for (const auto& [symbol, action] : letters)
    if (!add(action, Word(1, symbol))) return s;
  // elements_ doubles as the BFS queue; it only grows.
  for (std::size_t head = 0; head < s.elements_.size(); ++head) {
    for (const auto& [symbol, action] : letters) {
      Transformation next = s.elements_[head].map.then(action);
      if (s.index_.contains(next)) continue;
      Word w = s.elements_[head].witness + symbol;
      if (!add(std::move(next), std::move(w))) return s;
    }
  }
  return s;
}

std::optional<SemigroupClosure::Element> find_rank_n_minus_1(const SemigroupClosure& s, std::size_t n) {
  require_complete(s);
  for (const auto& e : s.elements())
    if (e.map.rank() + 1 == n) return e;
  return std::nullopt;
}

bool has_rank_n_minus_1(const SemigroupClosure& s, std::size_t n) { return find_rank_n_minus_1(s, n).has_value(); }

bool contains_all_singular(const SemigroupClosure& s, std::size_t n, std::size_t limit) {
  require_complete(s);
  if (n > limit)
    raise(ErrorKind::LimitExceeded, "singular-map scan needs n^n checks; n=" + std::to_string(n) +
                                        " exceeds limit " + std::to_string(limit));
  if (n != s.degree()) raise(ErrorKind::Domain, "closure degree differs from n");
  std::vector<State> images(n, 0);
  while (true) {
    Transformation t(images);
    if (t.rank() < n && !s.contains(t)) return false;
    std::size_t i = 0;
    while (i < n && ++images[i] == n) images[i++] = 0;
    if (i == n) return true;
  }
}

nlohmann::json to_json(const SemigroupClosure& s) {
  auto out = nlohmann::json::array();
  for (const auto& e : s.elements()) {
    out.push_back({{"map", std::vector<State>(e.map.images().begin(), e.map.images().end())},
                   {"witness", e.witness},
                   {"rank", e.map.rank()}});
  }
  return out;
}

bool PermGroup::contains(const Transformation& t) const {
  return std::find(elements_.begin(), elements_.end(), t) != elements_.end();
}

PermGroup permutation_group(const Dfa& d, std::size_t cap) {
  PermGroup g;
  g.degree_ = d.size();
  for (auto& [symbol, action] : letter_actions(d))
    if (action.is_permutation()) g.generators_.emplace_back(symbol, std::move(action));

  std::unordered_set<Transformation> seen;
  g.elements_.push_back(Transformation::identity(d.size()));
  seen.insert(g.elements_.front());
  for (std::size_t head = 0; head < g.elements_.size(); ++head) {
    for (const auto& [symbol, action] : g.generators_) {
      Transformation next = g.elements_[head].then(action);
      if (seen.contains(next)) continue;
      if (g.elements_.size() == cap) {
        g.truncated_ = true;
        g.elements_.clear();
        return g;
      }
      seen.insert(next);
      g.elements_.push_back(std::move(next));
    }
  }
  return g;
}

bool is_k_set_transitive(const PermGroup& g, std::size_t k) {
  const std::size_t n = g.degree();
  if (k < 1 || k > n) raise(ErrorKind::Domain, "k must lie in 1..n");
  if (n > 64) raise(ErrorKind::LimitExceeded, "subset orbits need n <= 64");
  const std::uint64_t first = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  std::unordered_set<std::uint64_t> orbit{first};
  std::deque<std::uint64_t> frontier{first};
  while (!frontier.empty()) {
    const auto set = frontier.front();
    frontier.pop_front();
    for (const auto& [symbol, action] : g.generators()) {
      const auto next = image_mask(action, set);
      if (orbit.insert(next).second) frontier.push_back(next);
    }
  }
  return orbit.size() == binomial(n, k);
}

bool is_set_transitive(const PermGroup& g) {
  for (std::size_t k = 1; k <= g.degree(); ++k)
    if (!is_k_set_transitive(g, k)) return false;
  return true;
}

std::vector<bool> set_transitivity_profile(const PermGroup& g) {
  std::vector<bool> out;
  for (std::size_t k = 1; k <= g.degree(); ++k) out.push_back(is_k_set_transitive(g, k));
  return out;
}

}  // namespace atomix
