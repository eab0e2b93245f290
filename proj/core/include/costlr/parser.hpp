#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "costlr/syntax.hpp"

namespace costlr {

class ParseError : public std::runtime_error {
 public:
  ParseError(SourceSpan span, const std::string& detail);
  const SourceSpan& span() const { return span_; }

 private:
  SourceSpan span_;
};

// Parses a complete term / type; trailing tokens are an error.
//
//   Type   ::= AType ("->" Type)?
//   AType  ::= "Nat" | ident | "[" Type "]" | "(" Type "," Type ")" | "(" Type ")"
//   Term   ::= "\" ident ":" Type "." Term | Cons
//   Cons   ::= Sum (":" Cons)?
//   Sum    ::= AppT ("+" AppT)*
//   AppT   ::= Atom Atom*
//   Atom   ::= ident | nat | "nil" "[" Type "]"
//            | "(" Term "," Term ")" | "(" Term ")"
//            | "ncase" Term "{" "0" "->" Term ";" ident "->" Term "}"
//            | "lcase" Term "{" "nil" "->" Term ";" ident ":" ident "->" Term "}"
//            | "pcase" Term "{" "(" ident "," ident ")" "->" Term "}"
//            | "lfold" "(" Term "," Term "," Term ")"
//            | "ifold" "(" Term "," Term "," Term ")"
//
// Identifiers are a lowercase letter followed by alphanumerics; the keywords
// ncase, lcase, pcase, lfold, ifold, nil and Nat are reserved.
TermPtr parse_term(std::string_view text);
TyPtr parse_type(std::string_view text);

}  // namespace costlr
