#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "costlr/syntax.hpp"

namespace costlr {

// Typing context: declared type variables plus term variable bindings.
// Innermost bindings win; every type variable mentioned in a term binding must
// be declared.
struct Ctx {
  std::set<std::string> type_vars;
  std::map<std::string, TyPtr> term_vars;
};

class TypeError : public std::runtime_error {
 public:
  TypeError(SourceSpan span, std::string expected, std::string found);
  const SourceSpan& span() const { return span_; }
  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  SourceSpan span_;
  std::string expected_;
  std::string found_;
};

// Computes the unique type of t under ctx, or throws TypeError pinpointing the
// first failing subterm. Annotations mentioning undeclared type variables are
// rejected.
TyPtr typecheck(const Ctx& ctx, const Term& t);
TyPtr typecheck(const Ctx& ctx, const TermPtr& t);

}  // namespace costlr
