// Expression grammar for algebra elements:
//
//   expr    := ['-'] term (('+'|'-') term)*
//   term    := factor (['*'] factor)*            juxtaposition multiplies
//   factor  := primary postfix-adjoints
//   primary := scalar | u{...} | s | e[...] | '(' expr ')'
//
// A '*' glued directly to s, ')', '}' or ']' is the adjoint; everywhere else
// it multiplies.  Scalars are "p/q", optionally with a glued trailing 'i'.
// Element payloads: u{0:1,2:-1} (shift-z), u{1,-2} (free-shift letters),
// u{5} (times2).  Projections: e[phi^2], e[H], e[phi^2 H].
#ifndef ENDOSTAR_EXPR_HPP
#define ENDOSTAR_EXPR_HPP

#include "endostar/algebra.hpp"

namespace endostar {

// Throws Error(ParseError) with a position-tagged message.
AlgebraElement parse_expr(const GroupInstance& G, const std::string& text);

}  // namespace endostar

#endif
