#include "costlr/syntax.hpp"

#include <cassert>

#include "costlr/overloaded.hpp"

namespace costlr {

namespace ty {

TyPtr var(std::string name, SourceSpan span) {
  return std::make_shared<Ty>(Ty{TyVar{std::move(name)}, span});
}
TyPtr nat(SourceSpan span) { return std::make_shared<Ty>(Ty{NatTy{}, span}); }
TyPtr pair(TyPtr first, TyPtr second, SourceSpan span) {
  return std::make_shared<Ty>(Ty{PairTy{std::move(first), std::move(second)}, span});
}
TyPtr list(TyPtr elem, SourceSpan span) {
  return std::make_shared<Ty>(Ty{ListTy{std::move(elem)}, span});
}
TyPtr arrow(TyPtr dom, TyPtr cod, SourceSpan span) {
  return std::make_shared<Ty>(Ty{ArrowTy{std::move(dom), std::move(cod)}, span});
}

}  // namespace ty

bool equal(const Ty& a, const Ty& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      overloaded{
          [&](const TyVar& x) { return x.name == std::get<TyVar>(b.node).name; },
          [&](const NatTy&) { return true; },
          [&](const PairTy& x) {
            const auto& y = std::get<PairTy>(b.node);
            return equal(*x.first, *y.first) && equal(*x.second, *y.second);
          },
          [&](const ListTy& x) { return equal(*x.elem, *std::get<ListTy>(b.node).elem); },
          [&](const ArrowTy& x) {
            const auto& y = std::get<ArrowTy>(b.node);
            return equal(*x.dom, *y.dom) && equal(*x.cod, *y.cod);
          },
      },
      a.node);
}

bool equal(const TyPtr& a, const TyPtr& b) { return equal(*a, *b); }

namespace {

void collect_ty_vars(const Ty& t, std::set<std::string>& out) {
  std::visit(overloaded{
                 [&](const TyVar& v) { out.insert(v.name); },
                 [&](const NatTy&) {},
                 [&](const PairTy& p) {
                   collect_ty_vars(*p.first, out);
                   collect_ty_vars(*p.second, out);
                 },
                 [&](const ListTy& l) { collect_ty_vars(*l.elem, out); },
                 [&](const ArrowTy& a) {
                   collect_ty_vars(*a.dom, out);
                   collect_ty_vars(*a.cod, out);
                 },
             },
             t.node);
}

}  // namespace

std::set<std::string> free_ty_vars(const Ty& t) {
  std::set<std::string> out;
  collect_ty_vars(t, out);
  return out;
}

bool is_closed_ty(const Ty& t) { return free_ty_vars(t).empty(); }

TyPtr subst_ty(const TyPtr& t, const std::string& alpha, const TyPtr& replacement) {
  return std::visit(
      overloaded{
          [&](const TyVar& v) { return v.name == alpha ? replacement : t; },
          [&](const NatTy&) { return t; },
          [&](const PairTy& p) {
            TyPtr f = subst_ty(p.first, alpha, replacement);
            TyPtr s = subst_ty(p.second, alpha, replacement);
            if (f == p.first && s == p.second) return t;
            return ty::pair(std::move(f), std::move(s), t->span);
          },
          [&](const ListTy& l) {
            TyPtr e = subst_ty(l.elem, alpha, replacement);
            if (e == l.elem) return t;
            return ty::list(std::move(e), t->span);
          },
          [&](const ArrowTy& a) {
            TyPtr d = subst_ty(a.dom, alpha, replacement);
            TyPtr c = subst_ty(a.cod, alpha, replacement);
            if (d == a.dom && c == a.cod) return t;
            return ty::arrow(std::move(d), std::move(c), t->span);
          },
      },
      t->node);
}

namespace term {

TermPtr var(std::string name, SourceSpan span) {
  return std::make_shared<Term>(Term{Var{std::move(name)}, span});
}
TermPtr nat(std::int64_t value, SourceSpan span) {
  assert(value >= 0);
  return std::make_shared<Term>(Term{NatLit{value}, span});
}
TermPtr ncase(TermPtr scrutinee, TermPtr zero_branch, std::string binder,
              TermPtr pos_branch, SourceSpan span) {
  return std::make_shared<Term>(Term{
      NatCase{std::move(scrutinee), std::move(zero_branch), std::move(binder),
              std::move(pos_branch)},
      span});
}
TermPtr add(TermPtr lhs, TermPtr rhs, SourceSpan span) {
  return std::make_shared<Term>(Term{Add{std::move(lhs), std::move(rhs)}, span});
}
TermPtr nil(TyPtr elem_ty, SourceSpan span) {
  return std::make_shared<Term>(Term{Nil{std::move(elem_ty)}, span});
}
TermPtr cons(TermPtr head, TermPtr tail, SourceSpan span) {
  return std::make_shared<Term>(Term{Cons{std::move(head), std::move(tail)}, span});
}
TermPtr lcase(TermPtr scrutinee, TermPtr nil_branch, std::string head_binder,
              std::string tail_binder, TermPtr cons_branch, SourceSpan span) {
  return std::make_shared<Term>(
      Term{ListCase{std::move(scrutinee), std::move(nil_branch), std::move(head_binder),
                    std::move(tail_binder), std::move(cons_branch)},
           span});
}
TermPtr pair(TermPtr first, TermPtr second, SourceSpan span) {
  return std::make_shared<Term>(Term{PairLit{std::move(first), std::move(second)}, span});
}
TermPtr pcase(TermPtr scrutinee, std::string first_binder, std::string second_binder,
              TermPtr body, SourceSpan span) {
  return std::make_shared<Term>(
      Term{PairCase{std::move(scrutinee), std::move(first_binder),
                    std::move(second_binder), std::move(body)},
           span});
}
TermPtr lam(std::string binder, TyPtr binder_ty, TermPtr body, SourceSpan span) {
  return std::make_shared<Term>(
      Term{Lam{std::move(binder), std::move(binder_ty), std::move(body)}, span});
}
TermPtr app(TermPtr fun, TermPtr arg, SourceSpan span) {
  return std::make_shared<Term>(Term{App{std::move(fun), std::move(arg)}, span});
}
TermPtr lfold(TermPtr step, TermPtr init, TermPtr list, SourceSpan span) {
  return std::make_shared<Term>(
      Term{LFold{std::move(step), std::move(init), std::move(list)}, span});
}
TermPtr ifold(TermPtr step, TermPtr init, TermPtr count, SourceSpan span) {
  return std::make_shared<Term>(
      Term{IFold{std::move(step), std::move(init), std::move(count)}, span});
}

}  // namespace term

bool equal(const Term& a, const Term& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      overloaded{
          [&](const Var& x) { return x.name == std::get<Var>(b.node).name; },
          [&](const NatLit& x) { return x.value == std::get<NatLit>(b.node).value; },
          [&](const NatCase& x) {
            const auto& y = std::get<NatCase>(b.node);
            return equal(*x.scrutinee, *y.scrutinee) &&
                   equal(*x.zero_branch, *y.zero_branch) && x.binder == y.binder &&
                   equal(*x.pos_branch, *y.pos_branch);
          },
          [&](const Add& x) {
            const auto& y = std::get<Add>(b.node);
            return equal(*x.lhs, *y.lhs) && equal(*x.rhs, *y.rhs);
          },
          [&](const Nil& x) { return equal(*x.elem_ty, *std::get<Nil>(b.node).elem_ty); },
          [&](const Cons& x) {
            const auto& y = std::get<Cons>(b.node);
            return equal(*x.head, *y.head) && equal(*x.tail, *y.tail);
          },
          [&](const ListCase& x) {
            const auto& y = std::get<ListCase>(b.node);
            return equal(*x.scrutinee, *y.scrutinee) &&
                   equal(*x.nil_branch, *y.nil_branch) &&
                   x.head_binder == y.head_binder && x.tail_binder == y.tail_binder &&
                   equal(*x.cons_branch, *y.cons_branch);
          },
          [&](const PairLit& x) {
            const auto& y = std::get<PairLit>(b.node);
            return equal(*x.first, *y.first) && equal(*x.second, *y.second);
          },
          [&](const PairCase& x) {
            const auto& y = std::get<PairCase>(b.node);
            return equal(*x.scrutinee, *y.scrutinee) && x.first_binder == y.first_binder &&
                   x.second_binder == y.second_binder && equal(*x.body, *y.body);
          },
          [&](const Lam& x) {
            const auto& y = std::get<Lam>(b.node);
            return x.binder == y.binder && equal(*x.binder_ty, *y.binder_ty) &&
                   equal(*x.body, *y.body);
          },
          [&](const App& x) {
            const auto& y = std::get<App>(b.node);
            return equal(*x.fun, *y.fun) && equal(*x.arg, *y.arg);
          },
          [&](const LFold& x) {
            const auto& y = std::get<LFold>(b.node);
            return equal(*x.step, *y.step) && equal(*x.init, *y.init) &&
                   equal(*x.list, *y.list);
          },
          [&](const IFold& x) {
            const auto& y = std::get<IFold>(b.node);
            return equal(*x.step, *y.step) && equal(*x.init, *y.init) &&
                   equal(*x.count, *y.count);
          },
      },
      a.node);
}

bool equal(const TermPtr& a, const TermPtr& b) { return equal(*a, *b); }

namespace {

void collect_ty_vars_into(const TyPtr& t, std::set<std::string>& out) {
  for (auto& v : free_ty_vars(*t)) out.insert(v);
}

void collect_term_ty_vars(const Term& t, std::set<std::string>& out) {
  std::visit(overloaded{
                 [&](const Var&) {},
                 [&](const NatLit&) {},
                 [&](const NatCase& x) {
                   collect_term_ty_vars(*x.scrutinee, out);
                   collect_term_ty_vars(*x.zero_branch, out);
                   collect_term_ty_vars(*x.pos_branch, out);
                 },
                 [&](const Add& x) {
                   collect_term_ty_vars(*x.lhs, out);
                   collect_term_ty_vars(*x.rhs, out);
                 },
                 [&](const Nil& x) { collect_ty_vars_into(x.elem_ty, out); },
                 [&](const Cons& x) {
                   collect_term_ty_vars(*x.head, out);
                   collect_term_ty_vars(*x.tail, out);
                 },
                 [&](const ListCase& x) {
                   collect_term_ty_vars(*x.scrutinee, out);
                   collect_term_ty_vars(*x.nil_branch, out);
                   collect_term_ty_vars(*x.cons_branch, out);
                 },
                 [&](const PairLit& x) {
                   collect_term_ty_vars(*x.first, out);
                   collect_term_ty_vars(*x.second, out);
                 },
                 [&](const PairCase& x) {
                   collect_term_ty_vars(*x.scrutinee, out);
                   collect_term_ty_vars(*x.body, out);
                 },
                 [&](const Lam& x) {
                   collect_ty_vars_into(x.binder_ty, out);
                   collect_term_ty_vars(*x.body, out);
                 },
                 [&](const App& x) {
                   collect_term_ty_vars(*x.fun, out);
                   collect_term_ty_vars(*x.arg, out);
                 },
                 [&](const LFold& x) {
                   collect_term_ty_vars(*x.step, out);
                   collect_term_ty_vars(*x.init, out);
                   collect_term_ty_vars(*x.list, out);
                 },
                 [&](const IFold& x) {
                   collect_term_ty_vars(*x.step, out);
                   collect_term_ty_vars(*x.init, out);
                   collect_term_ty_vars(*x.count, out);
                 },
             },
             t.node);
}

}  // namespace

std::set<std::string> free_ty_vars(const Term& t) {
  std::set<std::string> out;
  collect_term_ty_vars(t, out);
  return out;
}

TermPtr subst_type_in_term(const TermPtr& t, const std::string& alpha,
                           const TyPtr& replacement) {
  auto go = [&](const TermPtr& s) { return subst_type_in_term(s, alpha, replacement); };
  return std::visit(
      overloaded{
          [&](const Var&) { return t; },
          [&](const NatLit&) { return t; },
          [&](const NatCase& x) {
            TermPtr s = go(x.scrutinee), z = go(x.zero_branch), p = go(x.pos_branch);
            if (s == x.scrutinee && z == x.zero_branch && p == x.pos_branch) return t;
            return term::ncase(std::move(s), std::move(z), x.binder, std::move(p), t->span);
          },
          [&](const Add& x) {
            TermPtr l = go(x.lhs), r = go(x.rhs);
            if (l == x.lhs && r == x.rhs) return t;
            return term::add(std::move(l), std::move(r), t->span);
          },
          [&](const Nil& x) {
            TyPtr e = subst_ty(x.elem_ty, alpha, replacement);
            if (e == x.elem_ty) return t;
            return term::nil(std::move(e), t->span);
          },
          [&](const Cons& x) {
            TermPtr h = go(x.head), tl = go(x.tail);
            if (h == x.head && tl == x.tail) return t;
            return term::cons(std::move(h), std::move(tl), t->span);
          },
          [&](const ListCase& x) {
            TermPtr s = go(x.scrutinee), n = go(x.nil_branch), c = go(x.cons_branch);
            if (s == x.scrutinee && n == x.nil_branch && c == x.cons_branch) return t;
            return term::lcase(std::move(s), std::move(n), x.head_binder, x.tail_binder,
                               std::move(c), t->span);
          },
          [&](const PairLit& x) {
            TermPtr f = go(x.first), s = go(x.second);
            if (f == x.first && s == x.second) return t;
            return term::pair(std::move(f), std::move(s), t->span);
          },
          [&](const PairCase& x) {
            TermPtr s = go(x.scrutinee), b = go(x.body);
            if (s == x.scrutinee && b == x.body) return t;
            return term::pcase(std::move(s), x.first_binder, x.second_binder,
                               std::move(b), t->span);
          },
          [&](const Lam& x) {
            TyPtr bt = subst_ty(x.binder_ty, alpha, replacement);
            TermPtr b = go(x.body);
            if (bt == x.binder_ty && b == x.body) return t;
            return term::lam(x.binder, std::move(bt), std::move(b), t->span);
          },
          [&](const App& x) {
            TermPtr f = go(x.fun), a = go(x.arg);
            if (f == x.fun && a == x.arg) return t;
            return term::app(std::move(f), std::move(a), t->span);
          },
          [&](const LFold& x) {
            TermPtr s = go(x.step), i = go(x.init), l = go(x.list);
            if (s == x.step && i == x.init && l == x.list) return t;
            return term::lfold(std::move(s), std::move(i), std::move(l), t->span);
          },
          [&](const IFold& x) {
            TermPtr s = go(x.step), i = go(x.init), c = go(x.count);
            if (s == x.step && i == x.init && c == x.count) return t;
            return term::ifold(std::move(s), std::move(i), std::move(c), t->span);
          },
      },
      t->node);
}

}  // namespace costlr
