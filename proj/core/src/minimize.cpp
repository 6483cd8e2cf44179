#include "atomix/minimize.hpp"

#include <deque>
#include <utility>

#include "atomix/error.hpp"

namespace atomix {
namespace {

// Refinable partition of 0..n-1. Each block is a contiguous range of `elems`;
// marking moves an element to the front of its block so a split is a cut.
class Partition {
 public:
  explicit Partition(std::size_t n) : elems_(n), pos_(n), block_of_(n) {}

  // Lays out the states with predicate true first, then the rest.
  template <class Pred>
  void init_two_way(Pred in_first) {
    std::size_t next = 0;
    for (int pass = 0; pass < 2; ++pass) {
      const std::size_t begin = next;
      for (State q = 0; q < elems_.size(); ++q) {
        if (in_first(q) == (pass == 0)) {
          elems_[next] = q;
          pos_[q] = next++;
        }
      }
      if (next > begin) add_block(begin, next);
    }
  }

  std::size_t block_count() const noexcept { return first_.size(); }
  std::size_t block_of(State q) const noexcept { return block_of_[q]; }
  std::size_t block_size(std::size_t b) const noexcept { return end_[b] - first_[b]; }
  State representative(std::size_t b) const noexcept { return elems_[first_[b]]; }
  std::span<const State> members(std::size_t b) const noexcept {
    return std::span<const State>(elems_).subspan(first_[b], block_size(b));
  }

  void mark(State q) {
    const std::size_t b = block_of_[q];
    const std::size_t boundary = first_[b] + marked_[b];
    if (pos_[q] < boundary) return;
    const State other = elems_[boundary];
    std::swap(elems_[pos_[q]], elems_[boundary]);
    pos_[other] = pos_[q];
    pos_[q] = boundary;
    if (marked_[b]++ == 0) touched_.push_back(b);
  }

  // Splits every touched block into marked and unmarked parts; returns
  // (old, new) block pairs, where the new block holds the marked part.
  std::vector<std::pair<std::size_t, std::size_t>> split() {
    std::vector<std::pair<std::size_t, std::size_t>> splits;
    for (std::size_t b : touched_) {
      const std::size_t m = std::exchange(marked_[b], 0);
      if (m == block_size(b)) continue;
      const std::size_t nb = add_block(first_[b], first_[b] + m);
      first_[b] += m;
      splits.emplace_back(b, nb);
    }
    touched_.clear();
    return splits;
  }

 private:
  std::size_t add_block(std::size_t begin, std::size_t end) {
    const std::size_t b = first_.size();
    first_.push_back(begin);
    end_.push_back(end);
    marked_.push_back(0);
    for (std::size_t i = begin; i < end; ++i) block_of_[elems_[i]] = b;
    return b;
  }

  std::vector<State> elems_;
  std::vector<std::size_t> pos_;
  std::vector<std::size_t> block_of_;
  std::vector<std::size_t> first_, end_, marked_;
  std::vector<std::size_t> touched_;
};

}  // namespace

Minimized canonical_reachable(const Dfa& d) {
  const std::size_t k = d.alphabet_size();
  std::vector<std::optional<State>> map(d.size());
  std::vector<State> order;
  order.reserve(d.size());
  map[d.start()] = 0;
  order.push_back(d.start());
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (std::size_t i = 0; i < k; ++i) {
      const State t = d.step(order[head], i);
      if (!map[t]) {
        map[t] = static_cast<State>(order.size());
        order.push_back(t);
      }
    }
  }
  std::vector<State> delta(order.size() * k);
  StateSet finals(order.size());
  for (State q = 0; q < order.size(); ++q) {
    for (std::size_t i = 0; i < k; ++i) delta[q * k + i] = *map[d.step(order[q], i)];
    if (d.is_final(order[q])) finals.insert(q);
  }
  return {Dfa(order.size(), d.alphabet(), std::move(delta), 0, std::move(finals)), std::move(map)};
}

Minimized minimize_with_map(const Dfa& d) {
  const Minimized reach = canonical_reachable(d);
  const Dfa& r = reach.dfa;
  const std::size_t n = r.size();
  const std::size_t k = r.alphabet_size();

  // Inverse transitions in CSR form, indexed by (letter, target).
  std::vector<std::size_t> inv_begin(n * k + 1, 0);
  for (State q = 0; q < n; ++q)
    for (std::size_t i = 0; i < k; ++i) ++inv_begin[i * n + r.step(q, i) + 1];
  for (std::size_t j = 1; j < inv_begin.size(); ++j) inv_begin[j] += inv_begin[j - 1];
  std::vector<State> inv(n * k);
  {
    std::vector<std::size_t> fill(inv_begin.begin(), inv_begin.end() - 1);
    for (State q = 0; q < n; ++q)
      for (std::size_t i = 0; i < k; ++i) inv[fill[i * n + r.step(q, i)]++] = q;
  }

  Partition part(n);
  part.init_two_way([&](State q) { return r.is_final(q); });

  std::deque<std::pair<std::size_t, std::size_t>> work;
  std::vector<char> queued;
  auto enqueue = [&](std::size_t b, std::size_t letter) {
    if (queued.size() < (b + 1) * k) queued.resize((b + 1) * k, 0);
    if (queued[b * k + letter] != 0) return;
    queued[b * k + letter] = 1;
    work.emplace_back(b, letter);
  };
  auto is_queued = [&](std::size_t b, std::size_t letter) {
    return b * k + letter < queued.size() && queued[b * k + letter] != 0;
  };

  if (part.block_count() == 2) {
    const std::size_t smaller = part.block_size(0) <= part.block_size(1) ? 0 : 1;
    for (std::size_t i = 0; i < k; ++i) enqueue(smaller, i);
  }

  std::vector<State> splitter;
  while (!work.empty()) {
    const auto [b, letter] = work.front();
    work.pop_front();
    queued[b * k + letter] = 0;

    const auto members = part.members(b);
    splitter.assign(members.begin(), members.end());
    for (State t : splitter)
      for (std::size_t j = inv_begin[letter * n + t]; j < inv_begin[letter * n + t + 1]; ++j) part.mark(inv[j]);

    for (const auto& [old_block, new_block] : part.split()) {
      for (std::size_t i = 0; i < k; ++i) {
        if (is_queued(old_block, i)) {
          enqueue(new_block, i);
        } else {
          enqueue(part.block_size(new_block) <= part.block_size(old_block) ? new_block : old_block, i);
        }
      }
    }
  }

  const std::size_t blocks = part.block_count();
  std::vector<State> delta(blocks * k);
  StateSet finals(blocks);
  for (std::size_t b = 0; b < blocks; ++b) {
    const State rep = part.representative(b);
    for (std::size_t i = 0; i < k; ++i) delta[b * k + i] = static_cast<State>(part.block_of(r.step(rep, i)));
    if (r.is_final(rep)) finals.insert(static_cast<State>(b));
  }
  const Dfa quotient(blocks, r.alphabet(), std::move(delta), static_cast<State>(part.block_of(r.start())),
                     std::move(finals));
  Minimized canon = canonical_reachable(quotient);

  std::vector<std::optional<State>> map(d.size());
  for (State q = 0; q < d.size(); ++q)
    if (reach.state_map[q]) map[q] = canon.state_map[part.block_of(*reach.state_map[q])];
  return {std::move(canon.dfa), std::move(map)};
}

Dfa minimize(const Dfa& d) { return minimize_with_map(d).dfa; }

bool is_minimal(const Dfa& d) { return minimize(d).size() == d.size(); }

MinimalDfa MinimalDfa::from(const Dfa& d, bool strict) {
  Minimized m = minimize_with_map(d);
  if (m.dfa.size() == d.size()) {
    std::vector<std::optional<State>> identity(d.size());
    for (State q = 0; q < d.size(); ++q) identity[q] = q;
    return MinimalDfa(d, std::move(identity), false);
  }
  if (strict)
    raise(ErrorKind::NotMinimal, "automaton has " + std::to_string(d.size()) + " states, its minimal form " +
                                     std::to_string(m.dfa.size()));
  return MinimalDfa(std::move(m.dfa), std::move(m.state_map), true);
}

}  // namespace atomix
