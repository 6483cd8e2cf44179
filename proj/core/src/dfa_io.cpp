#include "atomix/dfa_io.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <vector>

#include "atomix/error.hpp"

namespace atomix {
namespace {

constexpr State kUnset = std::numeric_limits<State>::max();

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const auto start = s.find_first_not_of(" \t", pos);
    if (start == std::string_view::npos) break;
    const auto end = std::min(s.find_first_of(" \t", start), s.size());
    out.push_back(s.substr(start, end - start));
    pos = end;
  }
  return out;
}

[[noreturn]] void syntax(std::size_t line, const std::string& what) {
  raise(ErrorKind::Syntax, "line " + std::to_string(line) + ": " + what);
}

std::size_t parse_index(std::string_view token, std::size_t line) {
  std::size_t value = 0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || end != token.data() + token.size())
    syntax(line, "expected a non-negative integer, got '" + std::string(token) + "'");
  return value;
}

void check_range(std::size_t value, std::size_t n, std::string_view what) {
  if (value >= n)
    raise(ErrorKind::IndexOutOfRange, std::string(what) + " " + std::to_string(value) + " outside 0.." +
                                          std::to_string(n) + "-1");
}

}  // namespace

Dfa parse_dfa(std::string_view text) {
  std::optional<std::size_t> n;
  std::optional<std::string> alphabet;
  std::optional<std::size_t> start;
  std::optional<std::vector<std::size_t>> finals;
  struct Trans {
    std::size_t from;
    char symbol;
    std::size_t to;
    std::size_t line;
  };
  std::vector<Trans> transitions;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = std::min(text.find('\n', pos), text.size());
    const std::string_view line = trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    const auto colon = line.find(':');
    if (colon == std::string_view::npos) syntax(line_no, "expected 'key: value'");
    const std::string_view key = trim(line.substr(0, colon));
    const std::string_view value = trim(line.substr(colon + 1));
    const auto fields = split_ws(value);

    auto once = [&](bool already) {
      if (already) syntax(line_no, "duplicate '" + std::string(key) + "' line");
    };
    if (key == "states") {
      once(n.has_value());
      if (fields.size() != 1) syntax(line_no, "states takes one integer");
      n = parse_index(fields[0], line_no);
      if (*n == 0) syntax(line_no, "state count must be positive");
    } else if (key == "alphabet") {
      once(alphabet.has_value());
      if (fields.size() > 1) syntax(line_no, "alphabet symbols are written without separators");
      alphabet = std::string(value);
      if (!is_valid_alphabet(*alphabet)) syntax(line_no, "alphabet must be distinct ASCII letters");
    } else if (key == "start") {
      once(start.has_value());
      if (fields.size() != 1) syntax(line_no, "start takes one integer");
      start = parse_index(fields[0], line_no);
    } else if (key == "final") {
      once(finals.has_value());
      finals.emplace();
      for (auto f : fields) finals->push_back(parse_index(f, line_no));
    } else if (key == "trans") {
      if (fields.size() != 3 || fields[1].size() != 1) syntax(line_no, "expected 'trans: <state> <symbol> <state>'");
      transitions.push_back({parse_index(fields[0], line_no), fields[1][0], parse_index(fields[2], line_no), line_no});
    } else {
      syntax(line_no, "unknown key '" + std::string(key) + "'");
    }
  }

  if (!n) syntax(line_no, "missing 'states' line");
  if (!alphabet) syntax(line_no, "missing 'alphabet' line");
  if (alphabet->empty()) raise(ErrorKind::EmptyAlphabet, "alphabet is empty");
  if (!start) syntax(line_no, "missing 'start' line");
  if (!finals) syntax(line_no, "missing 'final' line");

  const std::size_t k = alphabet->size();
  check_range(*start, *n, "start state");
  StateSet final_set(*n);
  for (auto f : *finals) {
    check_range(f, *n, "final state");
    final_set.insert(static_cast<State>(f));
  }

  std::vector<State> delta(*n * k, kUnset);
  for (const auto& t : transitions) {
    const auto sym = alphabet->find(t.symbol);
    if (sym == std::string::npos)
      syntax(t.line, std::string("symbol '") + t.symbol + "' is not in the alphabet");
    check_range(t.from, *n, "source state");
    check_range(t.to, *n, "target state");
    State& slot = delta[t.from * k + sym];
    if (slot != kUnset)
      raise(ErrorKind::DuplicateTransition, "line " + std::to_string(t.line) + ": second transition for (" +
                                                std::to_string(t.from) + ", " + t.symbol + ")");
    slot = static_cast<State>(t.to);
  }
  for (std::size_t q = 0; q < *n; ++q)
    for (std::size_t i = 0; i < k; ++i)
      if (delta[q * k + i] == kUnset)
        raise(ErrorKind::MissingTransition,
              "no transition for (" + std::to_string(q) + ", " + (*alphabet)[i] + ")");

  return Dfa(*n, std::move(*alphabet), std::move(delta), static_cast<State>(*start), std::move(final_set));
}

std::string serialize_dfa(const Dfa& d) {
  std::ostringstream out;
  out << "states: " << d.size() << '\n';
  out << "alphabet: " << d.alphabet() << '\n';
  out << "start: " << d.start() << '\n';
  out << "final:";
  for (State q : d.finals().members()) out << ' ' << q;
  out << '\n';
  for (State q = 0; q < d.size(); ++q)
    for (std::size_t i = 0; i < d.alphabet_size(); ++i)
      out << "trans: " << q << ' ' << d.alphabet()[i] << ' ' << d.step(q, i) << '\n';
  return out.str();
}

Dfa read_dfa_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorKind::Syntax, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_dfa(buf.str());
}

void write_dfa_file(const Dfa& d, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(ErrorKind::Syntax, "cannot write '" + path + "'");
  out << serialize_dfa(d);
}

}  // namespace atomix
