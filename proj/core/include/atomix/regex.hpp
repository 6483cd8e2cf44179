#pragma once

#include <string_view>

#include "atomix/dfa.hpp"

namespace atomix {

/// Compiles a regular expression to its minimal complete DFA.
///
///     expr   := term ('|' term)*
///     term   := factor*
///     factor := base '*'?
///     base   := letter | '(' expr ')' | '()'
///
/// Letters are a-z. The alphabet is the sorted set of letters occurring in the
/// pattern together with `extra_alphabet`; a pattern without letters needs a
/// nonempty `extra_alphabet`.
Dfa compile_regex(std::string_view pattern, std::string_view extra_alphabet = {});

}  // namespace atomix
