#include "atomix/characterize.hpp"

#include <algorithm>
#include <limits>

#include "atomix/error.hpp"
#include "atomix/minimize.hpp"

namespace atomix {

CharacterizationReport characterize(const Dfa& input, const CharacterizeOptions& options) {
  const MinimalDfa md = MinimalDfa::from(input, options.strict);
  const Dfa& d = md.dfa();
  const std::size_t n = d.size();
  if (n < 3)
    raise(ErrorKind::Domain, "the characterization needs a minimal automaton with at least 3 states, got " +
                                 std::to_string(n));
  if (n > options.max_n)
    raise(ErrorKind::LimitExceeded, "n=" + std::to_string(n) + " exceeds --max-n " + std::to_string(options.max_n));

  CharacterizationReport r;
  r.n = n;
  r.input_states = md.input_size();
  r.state_map = md.state_map();
  r.renumbered = md.renumbered();

  const SemigroupClosure closure = semigroup_closure(d, options.closure_cap);
  if (closure.truncated())
    raise(ErrorKind::Truncated, "semigroup exceeds " + std::to_string(options.closure_cap) + " elements");
  r.semigroup_size = closure.size();
  if (auto e = find_rank_n_minus_1(closure, n)) r.rank_n_minus_1_witness = e->witness;

  const PermGroup group = permutation_group(d, options.closure_cap);
  r.group_order = group.truncated() ? 0 : group.order();
  r.set_transitivity_per_k = set_transitivity_profile(group);
  const bool set_transitive =
      std::all_of(r.set_transitivity_per_k.begin(), r.set_transitivity_per_k.end(), [](bool b) { return b; });
  r.cond_rank_and_transitive = r.rank_n_minus_1_witness.has_value() && set_transitive;

  r.atoms = atom_reports(md, AtomOptions{options.max_n, options.parallel});
  r.cond_every_atom_maximal = true;
  for (const auto& a : r.atoms) {
    if (!a.is_atom) continue;
    ++r.atom_count;
    r.cond_every_atom_maximal = r.cond_every_atom_maximal && a.maximal;
  }
  r.cond_maximally_atomic = r.atom_count == (std::size_t{1} << n) && r.cond_every_atom_maximal;

  r.consistent = r.cond_maximally_atomic == r.cond_every_atom_maximal &&
                 r.cond_every_atom_maximal == r.cond_rank_and_transitive;
  return r;
}

nlohmann::ordered_json big_to_json(const BigInt& value) {
  if (value <= std::numeric_limits<std::uint64_t>::max()) return value.convert_to<std::uint64_t>();
  return value.str();
}

nlohmann::ordered_json to_json(const AtomReport& a) {
  nlohmann::ordered_json j;
  j["set"] = a.subset.members();
  j["is_atom"] = a.is_atom;
  j["complexity"] = a.complexity ? nlohmann::ordered_json(*a.complexity) : nlohmann::ordered_json(nullptr);
  j["bound"] = big_to_json(a.bound);
  j["maximal"] = a.maximal;
  return j;
}

nlohmann::ordered_json to_json(const CharacterizationReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["input_states"] = r.input_states;
  auto map = nlohmann::ordered_json::array();
  for (const auto& m : r.state_map) map.push_back(m ? nlohmann::ordered_json(*m) : nlohmann::ordered_json(nullptr));
  j["renumbering"] = map;
  j["conditions"] = {{"maximally_atomic", r.cond_maximally_atomic},
                     {"every_atom_maximal", r.cond_every_atom_maximal},
                     {"rank_and_transitive", r.cond_rank_and_transitive}};
  j["consistent"] = r.consistent;
  j["rank_n_minus_1_witness"] =
      r.rank_n_minus_1_witness ? nlohmann::ordered_json(*r.rank_n_minus_1_witness) : nlohmann::ordered_json(nullptr);
  j["set_transitivity_per_k"] = r.set_transitivity_per_k;
  j["semigroup_size"] = r.semigroup_size;
  j["group_order"] = r.group_order;
  j["atom_count"] = r.atom_count;
  auto atoms = nlohmann::ordered_json::array();
  for (const auto& a : r.atoms) atoms.push_back(to_json(a));
  j["atoms"] = atoms;
  return j;
}

}  // namespace atomix
