#pragma once

#include <string>

#include "cliflat/operators.hpp"

namespace cliflat {

// Textual operator form, s-expression style:
//   (commutator (fdiff + 1) (weight - 2))
// print/parse round-trip exactly. The grammar is documented in
// docs/operator-grammar.md.
std::string op_print(const op_ptr& e);
op_ptr op_parse(const std::string& text);

} // namespace cliflat
