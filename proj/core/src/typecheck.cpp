#include "costlr/typecheck.hpp"

#include "costlr/overloaded.hpp"
#include "costlr/pretty.hpp"

namespace costlr {

namespace {

std::string span_text(SourceSpan s) {
  return std::to_string(s.begin) + ".." + std::to_string(s.end);
}

}  // namespace

TypeError::TypeError(SourceSpan span, std::string expected, std::string found)
    : std::runtime_error("type error at " + span_text(span) + ": expected " + expected +
                         ", found " + found),
      span_(span),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

namespace {

struct Checker {
  const std::set<std::string>& type_vars;

  void check_annotation(const TyPtr& ty) const {
    for (const auto& v : free_ty_vars(*ty)) {
      if (!type_vars.count(v))
        throw TypeError(ty->span, "a type variable declared in the context",
                        "'" + v + "'");
    }
  }

  TyPtr check(const std::map<std::string, TyPtr>& env, const Term& t) const {
    return std::visit(
        overloaded{
            [&](const Var& v) -> TyPtr {
              auto it = env.find(v.name);
              if (it == env.end())
                throw TypeError(t.span, "a bound variable", "'" + v.name + "'");
              return it->second;
            },
            [&](const NatLit&) { return ty::nat(); },
            [&](const NatCase& c) {
              require(ty::nat(), check(env, *c.scrutinee), c.scrutinee->span);
              TyPtr zero = check(env, *c.zero_branch);
              auto inner = env;
              inner[c.binder] = ty::nat();
              TyPtr pos = check(inner, *c.pos_branch);
              require(zero, pos, c.pos_branch->span);
              return zero;
            },
            [&](const Add& a) {
              require(ty::nat(), check(env, *a.lhs), a.lhs->span);
              require(ty::nat(), check(env, *a.rhs), a.rhs->span);
              return ty::nat();
            },
            [&](const Nil& n) {
              check_annotation(n.elem_ty);
              return ty::list(n.elem_ty);
            },
            [&](const Cons& c) {
              TyPtr head = check(env, *c.head);
              TyPtr tail = check(env, *c.tail);
              require(ty::list(head), tail, c.tail->span);
              return ty::list(head);
            },
            [&](const ListCase& c) -> TyPtr {
              TyPtr scrut = check(env, *c.scrutinee);
              const auto* lst = std::get_if<ListTy>(&scrut->node);
              if (!lst)
                throw TypeError(c.scrutinee->span, "a list type", pretty(scrut));
              TyPtr nil_ty = check(env, *c.nil_branch);
              auto inner = env;
              inner[c.head_binder] = lst->elem;
              inner[c.tail_binder] = scrut;
              TyPtr cons_ty = check(inner, *c.cons_branch);
              require(nil_ty, cons_ty, c.cons_branch->span);
              return nil_ty;
            },
            [&](const PairLit& p) {
              return ty::pair(check(env, *p.first), check(env, *p.second));
            },
            [&](const PairCase& c) -> TyPtr {
              TyPtr scrut = check(env, *c.scrutinee);
              const auto* pr = std::get_if<PairTy>(&scrut->node);
              if (!pr)
                throw TypeError(c.scrutinee->span, "a pair type", pretty(scrut));
              auto inner = env;
              inner[c.first_binder] = pr->first;
              inner[c.second_binder] = pr->second;
              return check(inner, *c.body);
            },
            [&](const Lam& l) {
              check_annotation(l.binder_ty);
              auto inner = env;
              inner[l.binder] = l.binder_ty;
              return ty::arrow(l.binder_ty, check(inner, *l.body));
            },
            [&](const App& a) -> TyPtr {
              TyPtr fun = check(env, *a.fun);
              const auto* arrow = std::get_if<ArrowTy>(&fun->node);
              if (!arrow)
                throw TypeError(a.fun->span, "a function type", pretty(fun));
              require(arrow->dom, check(env, *a.arg), a.arg->span);
              return arrow->cod;
            },
            [&](const LFold& f) -> TyPtr {
              // step :: t1 -> t2 -> t2, init :: t2, list :: [t1]
              TyPtr step = check(env, *f.step);
              const auto* outer = std::get_if<ArrowTy>(&step->node);
              const auto* innerA =
                  outer ? std::get_if<ArrowTy>(&outer->cod->node) : nullptr;
              if (!outer || !innerA || !equal(*innerA->dom, *innerA->cod))
                throw TypeError(f.step->span, "a step of type t1 -> t2 -> t2",
                                pretty(step));
              require(innerA->dom, check(env, *f.init), f.init->span);
              require(ty::list(outer->dom), check(env, *f.list), f.list->span);
              return innerA->dom;
            },
            [&](const IFold& f) -> TyPtr {
              // step :: t -> t, init :: t, count :: Nat
              TyPtr step = check(env, *f.step);
              const auto* arrow = std::get_if<ArrowTy>(&step->node);
              if (!arrow || !equal(*arrow->dom, *arrow->cod))
                throw TypeError(f.step->span, "a step of type t -> t", pretty(step));
              require(arrow->dom, check(env, *f.init), f.init->span);
              require(ty::nat(), check(env, *f.count), f.count->span);
              return arrow->dom;
            },
        },
        t.node);
  }

  static void require(const TyPtr& expected, const TyPtr& found, SourceSpan where) {
    if (!equal(*expected, *found))
      throw TypeError(where, pretty(expected), pretty(found));
  }
};

}  // namespace

TyPtr typecheck(const Ctx& ctx, const Term& t) {
  for (const auto& [name, ty] : ctx.term_vars) {
    for (const auto& v : free_ty_vars(*ty)) {
      if (!ctx.type_vars.count(v))
        throw TypeError(ty->span, "context binding '" + name +
                                      "' to use declared type variables only",
                        "'" + v + "'");
    }
  }
  Checker checker{ctx.type_vars};
  return checker.check(ctx.term_vars, t);
}

TyPtr typecheck(const Ctx& ctx, const TermPtr& t) { return typecheck(ctx, *t); }

}  // namespace costlr
