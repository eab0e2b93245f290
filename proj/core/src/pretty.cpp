#include "costlr/pretty.hpp"

#include <sstream>

#include "costlr/overloaded.hpp"

namespace costlr {

namespace {

// Binding strength, loosest first: lambda, cons, sum, application, atoms.
enum Level : int { kTerm = 0, kCons = 1, kSum = 2, kApp = 3, kAtom = 4 };

int level_of(const Term& t) {
  return std::visit(overloaded{
                        [](const Lam&) { return int(kTerm); },
                        [](const Cons&) { return int(kCons); },
                        [](const Add&) { return int(kSum); },
                        [](const App&) { return int(kApp); },
                        [](const auto&) { return int(kAtom); },
                    },
                    t.node);
}

void print_term(std::ostream& os, const Term& t, int min_level);

void print_bare(std::ostream& os, const Term& t) {
  std::visit(
      overloaded{
          [&](const Var& v) { os << v.name; },
          [&](const NatLit& n) { os << n.value; },
          [&](const NatCase& c) {
            os << "ncase ";
            print_term(os, *c.scrutinee, kTerm);
            os << " {0 -> ";
            print_term(os, *c.zero_branch, kTerm);
            os << "; " << c.binder << " -> ";
            print_term(os, *c.pos_branch, kTerm);
            os << "}";
          },
          [&](const Add& a) {
            print_term(os, *a.lhs, kSum);
            os << " + ";
            print_term(os, *a.rhs, kApp);
          },
          [&](const Nil& n) { os << "nil[" << pretty(*n.elem_ty) << "]"; },
          [&](const Cons& c) {
            print_term(os, *c.head, kSum);
            os << " : ";
            print_term(os, *c.tail, kCons);
          },
          [&](const ListCase& c) {
            os << "lcase ";
            print_term(os, *c.scrutinee, kTerm);
            os << " {nil -> ";
            print_term(os, *c.nil_branch, kTerm);
            os << "; " << c.head_binder << ":" << c.tail_binder << " -> ";
            print_term(os, *c.cons_branch, kTerm);
            os << "}";
          },
          [&](const PairLit& p) {
            os << "(";
            print_term(os, *p.first, kTerm);
            os << ", ";
            print_term(os, *p.second, kTerm);
            os << ")";
          },
          [&](const PairCase& c) {
            os << "pcase ";
            print_term(os, *c.scrutinee, kTerm);
            os << " {(" << c.first_binder << ", " << c.second_binder << ") -> ";
            print_term(os, *c.body, kTerm);
            os << "}";
          },
          [&](const Lam& l) {
            os << "\\" << l.binder << ":" << pretty(*l.binder_ty) << ". ";
            print_term(os, *l.body, kTerm);
          },
          [&](const App& a) {
            print_term(os, *a.fun, kApp);
            os << " ";
            print_term(os, *a.arg, kAtom);
          },
          [&](const LFold& f) {
            os << "lfold(";
            print_term(os, *f.step, kTerm);
            os << ", ";
            print_term(os, *f.init, kTerm);
            os << ", ";
            print_term(os, *f.list, kTerm);
            os << ")";
          },
          [&](const IFold& f) {
            os << "ifold(";
            print_term(os, *f.step, kTerm);
            os << ", ";
            print_term(os, *f.init, kTerm);
            os << ", ";
            print_term(os, *f.count, kTerm);
            os << ")";
          },
      },
      t.node);
}

void print_term(std::ostream& os, const Term& t, int min_level) {
  bool parens = level_of(t) < min_level;
  if (parens) os << "(";
  print_bare(os, t);
  if (parens) os << ")";
}

// Types: 0 = full (arrows), 1 = atomic.
void print_ty(std::ostream& os, const Ty& t, int min_level) {
  std::visit(overloaded{
                 [&](const TyVar& v) { os << v.name; },
                 [&](const NatTy&) { os << "Nat"; },
                 [&](const PairTy& p) {
                   os << "(";
                   print_ty(os, *p.first, 0);
                   os << ", ";
                   print_ty(os, *p.second, 0);
                   os << ")";
                 },
                 [&](const ListTy& l) {
                   os << "[";
                   print_ty(os, *l.elem, 0);
                   os << "]";
                 },
                 [&](const ArrowTy& a) {
                   bool parens = min_level > 0;
                   if (parens) os << "(";
                   print_ty(os, *a.dom, 1);
                   os << " -> ";
                   print_ty(os, *a.cod, 0);
                   if (parens) os << ")";
                 },
             },
             t.node);
}

}  // namespace

std::string pretty(const Ty& t) {
  std::ostringstream os;
  print_ty(os, t, 0);
  return os.str();
}

std::string pretty(const Term& t) {
  std::ostringstream os;
  print_term(os, t, kTerm);
  return os.str();
}

std::string pretty(const TyPtr& t) { return pretty(*t); }
std::string pretty(const TermPtr& t) { return pretty(*t); }

}  // namespace costlr
