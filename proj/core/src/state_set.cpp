#include "atomix/state_set.hpp"

#include <algorithm>
#include <charconv>

#include "atomix/error.hpp"

namespace atomix {
namespace {

constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t width) { return (width + kWordBits - 1) / kWordBits; }

}  // namespace

StateSet::StateSet(std::size_t width) : width_(width), words_(word_count(width), 0) {}

StateSet::StateSet(std::size_t width, std::initializer_list<State> members) : StateSet(width) {
  for (State q : members) insert(q);
}

StateSet StateSet::full(std::size_t width) {
  StateSet s(width);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (width % kWordBits != 0) s.words_.back() &= (std::uint64_t{1} << (width % kWordBits)) - 1;
  return s;
}

StateSet StateSet::from_mask(std::size_t width, std::uint64_t mask) {
  if (width > kWordBits) raise(ErrorKind::LimitExceeded, "mask form needs width <= 64");
  if (width < kWordBits && (mask >> width) != 0)
    raise(ErrorKind::IndexOutOfRange, "mask has bits beyond width " + std::to_string(width));
  StateSet s(width);
  if (width > 0) s.words_[0] = mask;
  return s;
}

StateSet StateSet::from_indices(std::size_t width, std::span<const State> members) {
  StateSet s(width);
  for (State q : members) s.insert(q);
  return s;
}

std::size_t StateSet::size() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool StateSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool StateSet::contains(State q) const noexcept {
  if (q >= width_) return false;
  return (words_[q / kWordBits] >> (q % kWordBits)) & 1U;
}

void StateSet::check_index(State q) const {
  if (q >= width_)
    raise(ErrorKind::IndexOutOfRange,
          "state " + std::to_string(q) + " outside 0.." + std::to_string(width_) + "-1");
}

void StateSet::insert(State q) {
  check_index(q);
  words_[q / kWordBits] |= std::uint64_t{1} << (q % kWordBits);
}

void StateSet::erase(State q) {
  check_index(q);
  words_[q / kWordBits] &= ~(std::uint64_t{1} << (q % kWordBits));
}

StateSet StateSet::complement() const {
  StateSet out = full(width_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= ~words_[i];
  return out;
}

bool StateSet::is_subset_of(const StateSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const std::uint64_t o = i < other.words_.size() ? other.words_[i] : 0;
    if ((words_[i] & ~o) != 0) return false;
  }
  return true;
}

bool StateSet::intersects(const StateSet& other) const noexcept {
  const std::size_t m = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < m; ++i)
    if ((words_[i] & other.words_[i]) != 0) return true;
  return false;
}

StateSet& StateSet::operator|=(const StateSet& other) {
  if (other.width_ != width_) raise(ErrorKind::Domain, "state set widths differ");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

StateSet& StateSet::operator&=(const StateSet& other) {
  if (other.width_ != width_) raise(ErrorKind::Domain, "state set widths differ");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

std::vector<State> StateSet::members() const {
  std::vector<State> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w != 0) {
      const int bit = std::countr_zero(w);
      out.push_back(static_cast<State>(i * kWordBits + static_cast<std::size_t>(bit)));
      w &= w - 1;
    }
  }
  return out;
}

std::uint64_t StateSet::mask() const {
  if (width_ > kWordBits) raise(ErrorKind::LimitExceeded, "mask form needs width <= 64");
  return words_.empty() ? 0 : words_[0];
}

std::string StateSet::to_string() const {
  if (empty()) return "{}";
  std::string out;
  for (State q : members()) {
    if (!out.empty()) out += ',';
    out += std::to_string(q);
  }
  return out;
}

std::size_t StateSet::hash() const noexcept {
  std::size_t h = std::hash<std::size_t>{}(width_);
  for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::strong_ordering operator<=>(const StateSet& a, const StateSet& b) noexcept {
  if (auto c = a.width_ <=> b.width_; c != 0) return c;
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  for (std::size_t i = a.words_.size(); i-- > 0;)
    if (auto c = a.words_[i] <=> b.words_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

StateSet parse_state_set(std::string_view text, std::size_t width) {
  StateSet out(width);
  if (text == "empty" || text == "{}" || text.empty()) return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view item = text.substr(pos, comma - pos);
    State q = 0;
    const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), q);
    if (ec != std::errc{} || end != item.data() + item.size() || item.empty())
      raise(ErrorKind::Syntax, "bad state index '" + std::string(item) + "' in set '" +
                                   std::string(text) + "'");
    out.insert(q);
    pos = comma + 1;
  }
  return out;
}

}  // namespace atomix
