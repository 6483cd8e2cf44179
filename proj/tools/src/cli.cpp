#include "atomix/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "atomix/atoms.hpp"
#include "atomix/characterize.hpp"
#include "atomix/dfa_io.hpp"
#include "atomix/dps.hpp"
#include "atomix/error.hpp"
#include "atomix/generators.hpp"
#include "atomix/minimize.hpp"
#include "atomix/oracle.hpp"
#include "atomix/psi.hpp"
#include "atomix/regex.hpp"

namespace atomix {
namespace {

using Json = nlohmann::ordered_json;

/// A DFA given either as a file path or as a regular expression.
struct InputSource {
  std::string file;
  std::string regex;
  std::string alphabet;

  void attach(CLI::App& cmd) {
    auto* f = cmd.add_option("file", file, "DFA file");
    auto* r = cmd.add_option("--regex", regex, "Regular expression over a-z instead of a file");
    f->excludes(r);
    cmd.add_option("--alphabet", alphabet, "Extra letters for --regex")->needs(r);
  }

  Dfa load() const {
    if (!regex.empty()) return compile_regex(regex, alphabet);
    if (file.empty()) raise(ErrorKind::Syntax, "expected a DFA file or --regex");
    return read_dfa_file(file);
  }
};

std::string braced(const StateSet& s) { return s.empty() ? "{}" : "{" + s.to_string() + "}"; }

Json set_json(const StateSet& s) {
  Json out = Json::array();
  for (State q : s.members()) out.push_back(q);
  return out;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string renumbering_line(const std::vector<std::optional<State>>& map) {
  std::ostringstream os;
  for (std::size_t q = 0; q < map.size(); ++q) {
    if (q) os << ' ';
    os << q << "->";
    if (map[q]) os << *map[q];
    else os << '-';
  }
  return os.str();
}

Json renumbering_json(const std::vector<std::optional<State>>& map) {
  Json out = Json::array();
  for (const auto& m : map) out.push_back(m ? Json(*m) : Json(nullptr));
  return out;
}

void print_renumbering(std::ostream& out, const MinimalDfa& md) {
  if (md.renumbered()) out << "renumbering: " << renumbering_line(md.state_map()) << "\n";
}

// Command bodies. Each returns an exit code; library errors propagate.

int cmd_analyze(const InputSource& in, const CharacterizeOptions& opts, bool json, std::ostream& out) {
  const auto r = characterize(in.load(), opts);
  if (json) {
    out << to_json(r).dump(2) << "\n";
    return r.consistent ? kExitOk : kExitMismatch;
  }
  out << "states: " << r.n << " (input " << r.input_states << ")\n";
  if (r.renumbered) out << "renumbering: " << renumbering_line(r.state_map) << "\n";
  out << "maximally atomic: " << yes_no(r.cond_maximally_atomic) << "\n";
  out << "every atom maximal: " << yes_no(r.cond_every_atom_maximal) << "\n";
  out << "rank n-1 and set-transitive: " << yes_no(r.cond_rank_and_transitive) << "\n";
  out << "consistent: " << yes_no(r.consistent) << "\n";
  out << "rank n-1 witness: " << (r.rank_n_minus_1_witness ? *r.rank_n_minus_1_witness : std::string("none")) << "\n";
  out << "k-set-transitive:";
  for (std::size_t k = 0; k < r.set_transitivity_per_k.size(); ++k)
    out << ' ' << (k + 1) << '=' << yes_no(r.set_transitivity_per_k[k]);
  out << "\n";
  out << "semigroup size: " << r.semigroup_size << "\n";
  out << "group order: " << r.group_order << "\n";
  out << "atoms: " << r.atom_count << " of " << r.atoms.size() << " subsets\n";
  for (const auto& a : r.atoms) {
    out << "  " << braced(a.subset) << ": ";
    if (a.is_atom) out << "complexity " << *a.complexity << ", bound " << a.bound << (a.maximal ? ", maximal" : "");
    else out << "empty, bound " << a.bound;
    out << "\n";
  }
  return r.consistent ? kExitOk : kExitMismatch;
}

int cmd_atoms(const InputSource& in, std::size_t max_n, bool json, std::ostream& out) {
  const MinimalDfa md = MinimalDfa::from(in.load());
  const auto atoms = enumerate_atoms(md, max_n);
  if (json) {
    Json j;
    j["n"] = md.size();
    j["renumbering"] = renumbering_json(md.state_map());
    j["atoms"] = Json::array();
    for (const auto& s : atoms) j["atoms"].push_back(set_json(s));
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "states: " << md.size() << "\n";
  print_renumbering(out, md);
  out << "atoms: " << atoms.size() << "\n";
  for (const auto& s : atoms) out << "  " << braced(s) << "\n";
  return kExitOk;
}

int cmd_atom_complexity(const InputSource& in, const std::string& set, std::size_t max_n, bool json, std::ostream& out) {
  const MinimalDfa md = MinimalDfa::from(in.load());
  const StateSet s = parse_state_set(set, md.size());
  const std::size_t c = atom_complexity(md, s, max_n);
  const BigInt bound = psi(static_cast<long long>(md.size()), static_cast<long long>(s.size()));
  if (json) {
    Json j;
    j["n"] = md.size();
    j["set"] = set_json(s);
    j["complexity"] = c;
    j["bound"] = big_to_json(bound);
    j["maximal"] = BigInt(c) == bound;
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  print_renumbering(out, md);
  out << "complexity: " << c << "\n";
  out << "bound: " << bound << "\n";
  out << "maximal: " << yes_no(BigInt(c) == bound) << "\n";
  return kExitOk;
}

int cmd_psi(long long n, long long s, bool json, std::ostream& out) {
  const BigInt value = psi(n, s);
  if (json) {
    Json j;
    j["n"] = n;
    j["s"] = s;
    j["psi"] = big_to_json(value);
    out << j.dump(2) << "\n";
  } else {
    out << value << "\n";
  }
  return kExitOk;
}

int cmd_dps(const InputSource& in, const std::string& set, const std::string& dot_path, std::size_t max_n, bool json,
            std::ostream& out) {
  const MinimalDfa md = MinimalDfa::from(in.load());
  const StateSet s = parse_state_set(set, md.size());
  const auto m = build_support_automaton(md.dfa(), s, max_n);
  if (!dot_path.empty()) {
    std::ofstream f(dot_path);
    f << m.to_dot();
    if (!f) raise(ErrorKind::Syntax, "cannot write " + dot_path);
  }
  const std::string& sigma = md.dfa().alphabet();
  if (json) {
    Json j;
    j["n"] = md.size();
    j["set"] = set_json(s);
    j["size"] = m.size();
    j["bound"] = big_to_json(m.size_bound());
    j["start"] = m.start();
    j["states"] = Json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
      Json st;
      st["label"] = m.states()[i].label();
      st["final"] = m.is_final(i);
      Json next;
      for (std::size_t a = 0; a < sigma.size(); ++a) next[std::string(1, sigma[a])] = m.step(i, a);
      st["next"] = std::move(next);
      j["states"].push_back(std::move(st));
    }
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  print_renumbering(out, md);
  out << "support automaton for " << braced(s) << ": " << m.size() << " states (bound " << m.size_bound() << ")\n";
  out << "start: s" << m.start() << "\n";
  for (std::size_t i = 0; i < m.size(); ++i) {
    out << "  s" << i << " " << m.states()[i].label() << (m.is_final(i) ? " final" : "") << ":";
    for (std::size_t a = 0; a < sigma.size(); ++a) out << ' ' << sigma[a] << "->s" << m.step(i, a);
    out << "\n";
  }
  return kExitOk;
}

int cmd_check(const InputSource& in, std::size_t maxlen, bool json, std::ostream& out) {
  const MinimalDfa md = MinimalDfa::from(in.load());
  const auto v = oracle_check_atoms(md, {.max_word_length = maxlen});
  const std::size_t reversal = reversal_state_count(md.dfa());
  const bool reversal_ok = reversal == v.enumerated.size();
  if (json) {
    Json j;
    j["n"] = md.size();
    j["words_checked"] = v.words_checked;
    j["observed_atoms"] = v.observed.size();
    j["enumerated_atoms"] = v.enumerated.size();
    j["equality_checked"] = v.equality_checked;
    j["reversal_states"] = reversal;
    j["reversal_identity"] = reversal_ok;
    out << j.dump(2) << "\n";
  } else {
    print_renumbering(out, md);
    out << "words checked: " << v.words_checked << "\n";
    out << "observed atoms: " << v.observed.size() << "\n";
    out << "enumerated atoms: " << v.enumerated.size() << "\n";
    out << "equality: " << (v.equality_checked ? "checked" : "not checked (length bound below atom count)") << "\n";
    out << "reversal states: " << reversal << (reversal_ok ? "" : " (MISMATCH)") << "\n";
  }
  return reversal_ok ? kExitOk : kExitMismatch;
}

int cmd_verify_psi(std::size_t max_n, bool json, std::ostream& out) {
  const auto rows = verify_psi_by_enumeration(max_n);
  if (json) {
    Json j = Json::array();
    for (const auto& r : rows) j.push_back({{"n", r.n}, {"k", r.k}, {"count", r.enumerated}});
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  for (const auto& r : rows) out << r.n << " " << r.k << " " << r.enumerated << "\n";
  out << "all " << rows.size() << " counts equal psi\n";
  return kExitOk;
}

int emit_dfa(const Dfa& d, const std::string& path, std::ostream& out) {
  if (path.empty()) out << serialize_dfa(d);
  else write_dfa_file(d, path);
  return kExitOk;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Truncated:
    case ErrorKind::LimitExceeded:
      return kExitResource;
    case ErrorKind::OracleMismatch:
      return kExitMismatch;
    default:
      return kExitUsage;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Atoms of regular languages: enumeration, complexity and maximal atomicity", "atomix"};
  app.require_subcommand(1);
  bool json = false;

  // analyze
  InputSource analyze_in;
  CharacterizeOptions analyze_opts;
  auto* analyze = app.add_subcommand("analyze", "Decide maximal atomicity and report every atom");
  analyze_in.attach(*analyze);
  analyze->add_flag("--json", json, "Machine-readable output");
  analyze->add_flag("--strict", analyze_opts.strict, "Reject non-minimal input instead of minimizing");
  analyze->add_flag("--parallel", analyze_opts.parallel, "Analyze atoms concurrently");
  analyze->add_option("--max-n", analyze_opts.max_n, "Largest minimal state count accepted");
  analyze->add_option("--closure-cap", analyze_opts.closure_cap, "Semigroup size cap");

  // atoms
  InputSource atoms_in;
  std::size_t max_n = kDefaultDpsMaxN;
  auto* atoms = app.add_subcommand("atoms", "List the atoms as subsets of states");
  atoms_in.attach(*atoms);
  atoms->add_flag("--json", json, "Machine-readable output");
  atoms->add_option("--max-n", max_n, "Largest minimal state count accepted");

  // atom-complexity
  InputSource ac_in;
  std::string set;
  auto* ac = app.add_subcommand("atom-complexity", "State complexity of one atom");
  ac_in.attach(*ac);
  ac->add_option("--set", set, "Subset as comma-separated states, or 'empty'")->required();
  ac->add_flag("--json", json, "Machine-readable output");
  ac->add_option("--max-n", max_n, "Largest minimal state count accepted");

  // psi
  long long psi_n = 0;
  long long psi_s = 0;
  auto* psi_cmd = app.add_subcommand("psi", "Evaluate the atom complexity bound psi(n, s)");
  psi_cmd->add_option("n", psi_n, "Number of states")->required();
  psi_cmd->add_option("s", psi_s, "Subset size")->required();
  psi_cmd->add_flag("--json", json, "Machine-readable output");

  // dps
  InputSource dps_in;
  std::string dot_path;
  auto* dps = app.add_subcommand("dps", "Build the support automaton of one subset");
  dps_in.attach(*dps);
  dps->add_option("--set", set, "Subset as comma-separated states, or 'empty'")->required();
  dps->add_option("--dot", dot_path, "Write a Graphviz rendering to this path");
  dps->add_flag("--json", json, "Machine-readable output");
  dps->add_option("--max-n", max_n, "Largest minimal state count accepted");

  // gen
  std::size_t gen_n = 0;
  std::size_t gen_k = 0;
  std::uint64_t seed = 0;
  std::string finals;
  std::string out_path;
  auto* gen = app.add_subcommand("gen", "Generate a DFA");
  gen->require_subcommand(1);
  auto* full_tn = gen->add_subcommand("full-tn", "Cycle, transposition and collapse: all of T_n");
  full_tn->add_option("n", gen_n, "Number of states")->required();
  full_tn->add_option("--final", finals, "Final states")->required();
  full_tn->add_option("-o,--output", out_path, "Output file (default: standard output)");
  auto* perm = gen->add_subcommand("perm", "Cycle and transposition only");
  perm->add_option("n", gen_n, "Number of states")->required();
  perm->add_option("--final", finals, "Final states")->required();
  perm->add_option("-o,--output", out_path, "Output file (default: standard output)");
  auto* random = gen->add_subcommand("random", "Random table from the documented LCG");
  random->add_option("n", gen_n, "Number of states")->required();
  random->add_option("k", gen_k, "Alphabet size")->required();
  random->add_option("--seed", seed, "Generator seed")->required();
  random->add_option("--final", finals, "Override the generated final states");
  random->add_option("-o,--output", out_path, "Output file (default: standard output)");

  // check
  InputSource check_in;
  std::size_t maxlen = 8;
  auto* check = app.add_subcommand("check", "Cross-check atoms against exhaustive words and the reversal");
  check_in.attach(*check);
  check->add_option("--oracle-maxlen", maxlen, "Longest word enumerated");
  check->add_flag("--json", json, "Machine-readable output");

  // verify-psi
  std::size_t verify_max = 10;
  auto* verify = app.add_subcommand("verify-psi", "Count (n,k)-type states and compare with psi");
  verify->add_option("--max-n", verify_max, "Largest n checked");
  verify->add_flag("--json", json, "Machine-readable output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze) return cmd_analyze(analyze_in, analyze_opts, json, out);
    if (*atoms) return cmd_atoms(atoms_in, max_n, json, out);
    if (*ac) return cmd_atom_complexity(ac_in, set, max_n, json, out);
    if (*psi_cmd) return cmd_psi(psi_n, psi_s, json, out);
    if (*dps) return cmd_dps(dps_in, set, dot_path, max_n, json, out);
    if (*full_tn) return emit_dfa(gen_full_tn(gen_n, parse_state_set(finals, gen_n)), out_path, out);
    if (*perm) return emit_dfa(gen_perm_only(gen_n, parse_state_set(finals, gen_n)), out_path, out);
    if (*random) {
      Dfa d = gen_random(gen_n, gen_k, seed);
      if (!finals.empty()) d = Dfa(d.size(), d.alphabet(), {d.table().begin(), d.table().end()}, d.start(), parse_state_set(finals, gen_n));
      return emit_dfa(d, out_path, out);
    }
    if (*check) return cmd_check(check_in, maxlen, json, out);
    if (*verify) return cmd_verify_psi(verify_max, json, out);
  } catch (const Error& e) {
    err << "atomix: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "atomix: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace atomix
