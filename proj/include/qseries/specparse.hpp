#pragma once

#include <string>

#include "qseries/etaq.hpp"

namespace qseries {

// Grammar: E<m> atoms combined with * / ^ and parentheses; exponents are
// integers or (p/q) rationals; whitespace insensitive.
//   expr   := term (('*' | '/') term)*
//   term   := factor ('^' exponent)?
//   factor := 'E' digits | '(' expr ')'
// Throws ParseError with the offending position.
EtaQuotient parse_eta_spec(const std::string& text);

// Two-line diagnostic: the input and a caret under the failure position.
std::string caret_diagnostic(const std::string& text, std::size_t pos);

}  // namespace qseries
