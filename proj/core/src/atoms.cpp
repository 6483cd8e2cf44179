#include "atomix/atoms.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <unordered_set>

#include "atomix/error.hpp"

namespace atomix {
namespace {

void require_size(const MinimalDfa& d, std::size_t max_n) {
  if (d.size() > max_n || d.size() > 63)
    raise(ErrorKind::LimitExceeded, "atom analysis limited to n <= " + std::to_string(std::min<std::size_t>(max_n, 63)) +
                                        ", got " + std::to_string(d.size()));
}

std::size_t complexity_of(const Dfa& d, const StateSet& subset, std::size_t max_n) {
  return minimize(build_support_automaton(d, subset, max_n).as_dfa()).size();
}

}  // namespace

std::vector<StateSet> all_subsets(std::size_t n) {
  if (n > 30) raise(ErrorKind::LimitExceeded, "subset listing limited to n <= 30");
  std::vector<StateSet> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) out.push_back(StateSet::from_mask(n, m));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<StateSet> enumerate_atoms(const MinimalDfa& md, std::size_t max_n) {
  require_size(md, max_n);
  const Dfa& d = md.dfa();
  std::unordered_set<StateSet> seen{d.finals()};
  std::vector<StateSet> order{d.finals()};
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (char a : d.alphabet()) {
      StateSet pre = preimage(d, order[head], a);
      if (seen.insert(pre).second) order.push_back(std::move(pre));
    }
  }
  std::sort(order.begin(), order.end());
  return order;
}

bool is_atom(const MinimalDfa& d, const StateSet& subset, std::size_t max_n) {
  const auto atoms = enumerate_atoms(d, max_n);
  return std::binary_search(atoms.begin(), atoms.end(), subset);
}

std::size_t atom_complexity(const MinimalDfa& d, const StateSet& subset, std::size_t max_n) {
  if (!is_atom(d, subset, max_n)) raise(ErrorKind::NotAnAtom, "A_S is empty for S = " + subset.to_string());
  return complexity_of(d.dfa(), subset, max_n);
}

bool is_maximal_atom(const MinimalDfa& d, const StateSet& subset, std::size_t max_n) {
  const std::size_t c = atom_complexity(d, subset, max_n);
  return BigInt(c) == psi(static_cast<long long>(d.size()), static_cast<long long>(subset.size()));
}

std::vector<AtomReport> atom_reports(const MinimalDfa& md, const AtomOptions& options) {
  require_size(md, options.max_n);
  const Dfa& d = md.dfa();
  const auto n = static_cast<long long>(d.size());
  const auto atoms = enumerate_atoms(md, options.max_n);

  std::vector<AtomReport> reports;
  for (auto& s : all_subsets(d.size())) {
    AtomReport r;
    r.is_atom = std::binary_search(atoms.begin(), atoms.end(), s);
    r.bound = psi(n, static_cast<long long>(s.size()));
    r.subset = std::move(s);
    reports.push_back(std::move(r));
  }

  auto fill = [&](std::size_t i) {
    AtomReport& r = reports[i];
    if (!r.is_atom) return;
    r.complexity = complexity_of(d, r.subset, options.max_n);
    r.maximal = BigInt(*r.complexity) == r.bound;
  };

  if (!options.parallel) {
    for (std::size_t i = 0; i < reports.size(); ++i) fill(i);
    return reports;
  }
  // Each worker claims indices from a shared counter and writes only its own
  // slots, so the table is the same as the sequential one.
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  const unsigned workers = std::max(2U, std::thread::hardware_concurrency());
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        try {
          for (std::size_t i = next++; i < reports.size(); i = next++) fill(i);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return reports;
}

bool is_maximally_atomic(const MinimalDfa& d, const AtomOptions& options) {
  if (d.size() < 2) raise(ErrorKind::Domain, "maximal atomicity is defined for state complexity >= 2");
  const auto atoms = enumerate_atoms(d, options.max_n);
  if (atoms.size() != (std::size_t{1} << d.size())) return false;
  for (const auto& r : atom_reports(d, options))
    if (!r.maximal) return false;
  return true;
}

}  // namespace atomix
