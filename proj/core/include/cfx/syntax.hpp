#pragma once

#include <string_view>

#include "cfx/cfe.hpp"
#include "cfx/regex.hpp"

namespace cfx {

/// Parses the textual regex syntax:
///
///     expr    ::= cat ('+' expr)?
///     cat     ::= postfix ('.'? postfix)*
///     postfix ::= atom '*'*
///     atom    ::= '0' | '1' | symbol | '(' expr ')'
///
/// `0` is φ, `1` is ε, symbols are single letters. `+` and `.` associate to
/// the right. Throws SyntaxError.
Regex parse_regex(std::string_view text);

/// Parses the context-free expression syntax, which adds
///
///     atom ::= ... | 'mu' name '.' expr | name
///
/// A `mu` body extends as far to the right as possible. Names bound by an
/// enclosing `mu` are placeholders; other single letters are symbols. `r*`
/// is desugared to `mu _sN. r._sN + 1` with a fresh binder. The result is
/// checked with `check_well_formed`.
Cfe parse_cfe(std::string_view text);

}  // namespace cfx
