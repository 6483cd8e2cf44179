#include "atomix/dps.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

#include "atomix/error.hpp"

namespace atomix {
namespace {

// Mask-level pair used inside the constructions; the sink has both masks
// all-ones, which no disjoint pair can have.
struct Packed {
  std::uint64_t s;
  std::uint64_t t;
  bool operator==(const Packed&) const = default;
};

constexpr Packed kBot{~std::uint64_t{0}, ~std::uint64_t{0}};

struct PackedHash {
  std::size_t operator()(const Packed& p) const noexcept {
    return std::hash<std::uint64_t>{}(p.s * 0x9e3779b97f4a7c15ULL ^ (p.t + 0x632be59bd9b4e019ULL));
  }
};

bool canonical_less(const Packed& a, const Packed& b) {
  const bool abot = a == kBot;
  const bool bbot = b == kBot;
  if (abot || bbot) return !abot && bbot;
  const auto key = [](const Packed& p) { return std::tuple(popcount(p.s), popcount(p.t), p.s, p.t); };
  return key(a) < key(b);
}

std::uint64_t image_mask(const Dfa& d, std::uint64_t set, std::size_t letter) {
  std::uint64_t out = 0;
  while (set != 0) {
    const auto q = static_cast<State>(std::countr_zero(set));
    out |= std::uint64_t{1} << d.step(q, letter);
    set &= set - 1;
  }
  return out;
}

Packed packed_step(const Dfa& d, const Packed& p, std::size_t letter) {
  if (p == kBot) return kBot;
  const std::uint64_t s = image_mask(d, p.s, letter);
  const std::uint64_t t = image_mask(d, p.t, letter);
  if ((s & t) != 0) return kBot;
  return {s, t};
}

DpsState unpack(std::size_t n, const Packed& p) {
  if (p == kBot) return DpsState::bot(n);
  return DpsState::pair(StateSet::from_mask(n, p.s), StateSet::from_mask(n, p.t));
}

void require_mask_width(std::size_t n, std::size_t max_n) {
  if (n > max_n)
    raise(ErrorKind::LimitExceeded, "DPS construction limited to n <= " + std::to_string(max_n) + ", got " +
                                        std::to_string(n));
  if (n > 63) raise(ErrorKind::LimitExceeded, "DPS construction needs n <= 63");
}

std::string braced(const StateSet& s) { return s.empty() ? "{}" : "{" + s.to_string() + "}"; }

}  // namespace

DpsState DpsState::bot(std::size_t n) { return DpsState(true, StateSet(n), StateSet(n)); }

DpsState DpsState::pair(StateSet s, StateSet t) {
  if (s.width() != t.width()) raise(ErrorKind::Domain, "pair components have different widths");
  if (s.intersects(t)) raise(ErrorKind::Domain, "pair components " + s.to_string() + " and " + t.to_string() + " overlap");
  return DpsState(false, std::move(s), std::move(t));
}

std::string DpsState::label() const {
  if (bot_) return "⊥";
  return braced(s_) + "|" + braced(t_);
}

std::strong_ordering operator<=>(const DpsState& a, const DpsState& b) noexcept {
  if (a.bot_ || b.bot_) return a.bot_ <=> b.bot_;
  if (auto c = a.s_.size() <=> b.s_.size(); c != 0) return c;
  if (auto c = a.t_.size() <=> b.t_.size(); c != 0) return c;
  // Same cardinalities: StateSet ordering reduces to comparing the integers.
  if (auto c = a.s_ <=> b.s_; c != 0) return c;
  return a.t_ <=> b.t_;
}

DpsState dps_step(const Dfa& d, const DpsState& p, char symbol) {
  const std::size_t letter = d.symbol_index(symbol);
  if (p.is_bot()) return p;
  StateSet s(d.size());
  StateSet t(d.size());
  for (State q : p.s().members()) s.insert(d.step(q, letter));
  for (State q : p.t().members()) t.insert(d.step(q, letter));
  if (s.intersects(t)) return DpsState::bot(d.size());
  return DpsState::pair(std::move(s), std::move(t));
}

bool state_type(std::size_t n, const DpsState& p, std::size_t k) {
  if (k > n) raise(ErrorKind::Domain, "type index k=" + std::to_string(k) + " exceeds n=" + std::to_string(n));
  if (p.width() != n) return false;
  if (k == n) return !p.is_bot() && !p.s().empty() && p.t().empty();
  if (k == 0) return !p.is_bot() && p.s().empty() && !p.t().empty();
  if (p.is_bot()) return true;
  const std::size_t s = p.s().size();
  const std::size_t t = p.t().size();
  return s >= 1 && s <= k && t >= 1 && t <= n - k;
}

std::uint64_t count_type_states(std::size_t n, std::size_t k, std::size_t limit) {
  if (k > n) raise(ErrorKind::Domain, "k exceeds n");
  if (n > limit)
    raise(ErrorKind::LimitExceeded, "enumeration of (n,k)-type states limited to n <= " + std::to_string(limit));
  std::uint64_t count = state_type(n, DpsState::bot(n), k) ? 1 : 0;
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t s = 0; s <= all; ++s) {
    const std::uint64_t rest = all & ~s;
    // Every submask t of the complement, including the empty one.
    for (std::uint64_t t = rest;; t = (t - 1) & rest) {
      const auto ps = static_cast<std::size_t>(popcount(s));
      const auto pt = static_cast<std::size_t>(popcount(t));
      const bool ok = k == n   ? (ps >= 1 && pt == 0)
                      : k == 0 ? (ps == 0 && pt >= 1)
                               : (ps >= 1 && ps <= k && pt >= 1 && pt <= n - k);
      if (ok) ++count;
      if (t == 0) break;
    }
  }
  return count;
}

SupportAutomaton build_support_automaton(const Dfa& d, const StateSet& subset, std::size_t max_n) {
  const std::size_t n = d.size();
  require_mask_width(n, max_n);
  if (subset.width() != n) raise(ErrorKind::IndexOutOfRange, "subset width differs from state count");
  const std::size_t k = d.alphabet_size();
  const std::uint64_t f_mask = d.finals().mask();
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;

  std::unordered_map<Packed, std::size_t, PackedHash> index;
  std::vector<Packed> order;
  std::vector<std::size_t> raw_delta;
  const Packed start{subset.mask(), all & ~subset.mask()};
  index.emplace(start, 0);
  order.push_back(start);
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (std::size_t i = 0; i < k; ++i) {
      const Packed next = packed_step(d, order[head], i);
      auto [it, inserted] = index.emplace(next, order.size());
      if (inserted) order.push_back(next);
      raw_delta.push_back(it->second);
    }
  }

  std::vector<std::size_t> perm(order.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return canonical_less(order[a], order[b]); });
  std::vector<std::size_t> rank_of(order.size());
  for (std::size_t r = 0; r < perm.size(); ++r) rank_of[perm[r]] = r;

  SupportAutomaton m(d, subset);
  m.bound_ = psi(static_cast<long long>(n), static_cast<long long>(subset.size()));
  m.start_ = rank_of[0];
  m.delta_.resize(order.size() * k);
  m.finals_ = StateSet(order.size());
  m.states_.reserve(order.size());
  for (std::size_t r = 0; r < perm.size(); ++r) {
    const Packed& p = order[perm[r]];
    m.states_.push_back(unpack(n, p));
    for (std::size_t i = 0; i < k; ++i) m.delta_[r * k + i] = rank_of[raw_delta[perm[r] * k + i]];
    if (p != kBot && (p.s & ~f_mask) == 0 && (p.t & f_mask) == 0) m.finals_.insert(static_cast<State>(r));
  }
  return m;
}

std::size_t SupportAutomaton::run(std::string_view word) const {
  std::size_t p = start_;
  for (char c : word) p = step(p, base_.symbol_index(c));
  return p;
}

std::optional<std::size_t> SupportAutomaton::index_of(const DpsState& p) const {
  const auto it = std::lower_bound(states_.begin(), states_.end(), p);
  if (it == states_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - states_.begin());
}

Dfa SupportAutomaton::as_dfa() const {
  std::vector<State> delta(delta_.begin(), delta_.end());
  return Dfa(states_.size(), base_.alphabet(), std::move(delta), static_cast<State>(start_), finals_);
}

std::string SupportAutomaton::to_dot() const {
  std::ostringstream out;
  out << "digraph support {\n";
  out << "  rankdir=LR;\n";
  out << "  __start [shape=none, label=\"\"];\n";
  for (std::size_t i = 0; i < states_.size(); ++i) {
    out << "  s" << i << " [label=\"" << states_[i].label() << "\", shape="
        << (is_final(i) ? "doublecircle" : "circle") << "];\n";
  }
  out << "  __start -> s" << start_ << ";\n";
  for (std::size_t i = 0; i < states_.size(); ++i) {
    // Parallel edges share one arrow with a comma-separated label.
    std::map<std::size_t, std::string> targets;
    for (std::size_t a = 0; a < base_.alphabet_size(); ++a) {
      auto& label = targets[step(i, a)];
      if (!label.empty()) label += ',';
      label += base_.alphabet()[a];
    }
    for (const auto& [to, label] : targets) out << "  s" << i << " -> s" << to << " [label=\"" << label << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace atomix
