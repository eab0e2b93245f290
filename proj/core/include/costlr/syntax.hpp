#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace costlr {

// Byte offsets into the source text a node came from. {0,0} for synthesized nodes.
struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
};

struct Ty;
using TyPtr = std::shared_ptr<const Ty>;

struct TyVar {
  std::string name;
};
struct NatTy {};
struct PairTy {
  TyPtr first;
  TyPtr second;
};
struct ListTy {
  TyPtr elem;
};
struct ArrowTy {
  TyPtr dom;
  TyPtr cod;
};

struct Ty {
  std::variant<TyVar, NatTy, PairTy, ListTy, ArrowTy> node;
  SourceSpan span;
};

namespace ty {
TyPtr var(std::string name, SourceSpan span = {});
TyPtr nat(SourceSpan span = {});
TyPtr pair(TyPtr first, TyPtr second, SourceSpan span = {});
TyPtr list(TyPtr elem, SourceSpan span = {});
TyPtr arrow(TyPtr dom, TyPtr cod, SourceSpan span = {});
}  // namespace ty

// Structural equality; spans are ignored.
bool equal(const Ty& a, const Ty& b);
bool equal(const TyPtr& a, const TyPtr& b);

std::set<std::string> free_ty_vars(const Ty& t);
bool is_closed_ty(const Ty& t);

TyPtr subst_ty(const TyPtr& t, const std::string& alpha, const TyPtr& replacement);

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Var {
  std::string name;
};
struct NatLit {
  std::int64_t value = 0;  // nonnegative
};
struct NatCase {
  TermPtr scrutinee;
  TermPtr zero_branch;
  std::string binder;  // bound to the scrutinee's own value in pos_branch
  TermPtr pos_branch;
};
struct Add {
  TermPtr lhs;
  TermPtr rhs;
};
struct Nil {
  TyPtr elem_ty;
};
struct Cons {
  TermPtr head;
  TermPtr tail;
};
struct ListCase {
  TermPtr scrutinee;
  TermPtr nil_branch;
  std::string head_binder;
  std::string tail_binder;
  TermPtr cons_branch;
};
struct PairLit {
  TermPtr first;
  TermPtr second;
};
struct PairCase {
  TermPtr scrutinee;
  std::string first_binder;
  std::string second_binder;
  TermPtr body;
};
struct Lam {
  std::string binder;
  TyPtr binder_ty;
  TermPtr body;
};
struct App {
  TermPtr fun;
  TermPtr arg;
};
struct LFold {
  TermPtr step;
  TermPtr init;
  TermPtr list;
};
struct IFold {
  TermPtr step;
  TermPtr init;
  TermPtr count;
};

struct Term {
  std::variant<Var, NatLit, NatCase, Add, Nil, Cons, ListCase, PairLit, PairCase,
               Lam, App, LFold, IFold>
      node;
  SourceSpan span;
};

namespace term {
TermPtr var(std::string name, SourceSpan span = {});
TermPtr nat(std::int64_t value, SourceSpan span = {});
TermPtr ncase(TermPtr scrutinee, TermPtr zero_branch, std::string binder,
              TermPtr pos_branch, SourceSpan span = {});
TermPtr add(TermPtr lhs, TermPtr rhs, SourceSpan span = {});
TermPtr nil(TyPtr elem_ty, SourceSpan span = {});
TermPtr cons(TermPtr head, TermPtr tail, SourceSpan span = {});
TermPtr lcase(TermPtr scrutinee, TermPtr nil_branch, std::string head_binder,
              std::string tail_binder, TermPtr cons_branch, SourceSpan span = {});
TermPtr pair(TermPtr first, TermPtr second, SourceSpan span = {});
TermPtr pcase(TermPtr scrutinee, std::string first_binder, std::string second_binder,
              TermPtr body, SourceSpan span = {});
TermPtr lam(std::string binder, TyPtr binder_ty, TermPtr body, SourceSpan span = {});
TermPtr app(TermPtr fun, TermPtr arg, SourceSpan span = {});
TermPtr lfold(TermPtr step, TermPtr init, TermPtr list, SourceSpan span = {});
TermPtr ifold(TermPtr step, TermPtr init, TermPtr count, SourceSpan span = {});
}  // namespace term

bool equal(const Term& a, const Term& b);
bool equal(const TermPtr& a, const TermPtr& b);

// Type variables occurring in annotations (lambda binder types, nil element types).
std::set<std::string> free_ty_vars(const Term& t);

// Replaces TyVar(alpha) inside every annotation. Capture cannot arise: the
// calculus has no type binders.
TermPtr subst_type_in_term(const TermPtr& t, const std::string& alpha,
                           const TyPtr& replacement);

}  // namespace costlr
