#pragma once

#include <map>
#include <string>

#include "darboux3/polynomial.hpp"

namespace dbx {

using Bindings = std::map<std::string, Rational>;

// Grammar:
//   expr     := term (("+" | "-") term)*
//   term     := factor ("*" factor)*
//   factor   := rational | ident ("^" digits)? | "(" expr ")" | "-" factor
//   rational := digits ("/" digits)?
// Whitespace is insignificant. x, y, z are the variables; any other identifier
// must appear in bindings and is substituted at parse time.
Polynomial parse_polynomial(const std::string& text, const Bindings& bindings = {});

// Canonical rendering: terms in descending graded lex, "0" for the zero polynomial.
// parse_polynomial(format_polynomial(p)) == p with empty bindings.
std::string format_polynomial(const Polynomial& p);

}  // namespace dbx
