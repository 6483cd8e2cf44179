#pragma once

#include <string>
#include <string_view>

#include "atomix/dfa.hpp"

namespace atomix {

/// Reads the line-oriented DFA format:
///
///     # comment
///     states: 3
///     alphabet: abc
///     start: 0
///     final: 0
///     trans: 0 a 1
///     ...
///
/// Header keys may appear in any order but only once. The transition table
/// must be complete; partial tables are rejected rather than completed with a
/// sink, since that would change the state count.
Dfa parse_dfa(std::string_view text);

/// Canonical form: header keys in the order above, then transitions sorted by
/// state and then by alphabet position. An empty final set is written "final:".
std::string serialize_dfa(const Dfa& d);

Dfa read_dfa_file(const std::string& path);
void write_dfa_file(const Dfa& d, const std::string& path);

}  // namespace atomix
