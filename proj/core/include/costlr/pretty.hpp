#pragma once

#include <string>

#include "costlr/syntax.hpp"

namespace costlr {

// Prints with the minimal parentheses that still reparse to a structurally
// equal tree.
std::string pretty(const Ty& t);
std::string pretty(const Term& t);
std::string pretty(const TyPtr& t);
std::string pretty(const TermPtr& t);

}  // namespace costlr
