#include "costlr/eval.hpp"

#include <memory>

#include "costlr/overloaded.hpp"

namespace costlr {

ValuePtr eval_std(const Env& env, const Term& t) {
  return std::visit(
      overloaded{
          [&](const Var& v) -> ValuePtr {
            if (const ValuePtr* bound = env.find(v.name)) return *bound;
            throw ShapeFault("unbound variable '" + v.name + "'");
          },
          [&](const NatLit& n) { return val::nat(n.value); },
          [&](const NatCase& c) -> ValuePtr {
            ValuePtr s = eval_std(env, *c.scrutinee);
            std::int64_t n = as_vnat(s);
            if (n == 0) return eval_std(env, *c.zero_branch);
            return eval_std(env.with(c.binder, s), *c.pos_branch);
          },
          [&](const Add& a) {
            std::int64_t l = as_vnat(eval_std(env, *a.lhs));
            std::int64_t r = as_vnat(eval_std(env, *a.rhs));
            return val::nat(add_checked(l, r));
          },
          [&](const Nil&) { return val::list({}); },
          [&](const Cons& c) {
            ValuePtr h = eval_std(env, *c.head);
            ValuePtr t = eval_std(env, *c.tail);
            const VList& tl = as_vlist(t);
            std::vector<ValuePtr> elems;
            elems.reserve(tl.elems.size() + 1);
            elems.push_back(std::move(h));
            elems.insert(elems.end(), tl.elems.begin(), tl.elems.end());
            return val::list(std::move(elems));
          },
          [&](const ListCase& c) -> ValuePtr {
            ValuePtr s = eval_std(env, *c.scrutinee);
            const VList& l = as_vlist(s);
            if (l.elems.empty()) return eval_std(env, *c.nil_branch);
            std::vector<ValuePtr> rest(l.elems.begin() + 1, l.elems.end());
            Env inner = env.with(c.head_binder, l.elems.front())
                            .with(c.tail_binder, val::list(std::move(rest)));
            return eval_std(inner, *c.cons_branch);
          },
          [&](const PairLit& p) {
            return val::pair(eval_std(env, *p.first), eval_std(env, *p.second));
          },
          [&](const PairCase& c) {
            ValuePtr s = eval_std(env, *c.scrutinee);
            const VPair& p = as_vpair(s);
            Env inner = env.with(c.first_binder, p.first).with(c.second_binder, p.second);
            return eval_std(inner, *c.body);
          },
          [&](const Lam& l) {
            return val::fun(
                [env, binder = l.binder, body = l.body](const ValuePtr& v) {
                  return eval_std(env.with(binder, v), *body);
                });
          },
          [&](const App& a) {
            ValuePtr f = eval_std(env, *a.fun);
            ValuePtr x = eval_std(env, *a.arg);
            return as_vfun(f).fn(x);
          },
          [&](const LFold& f) {
            ValuePtr step = eval_std(env, *f.step);
            ValuePtr acc = eval_std(env, *f.init);
            ValuePtr lst = eval_std(env, *f.list);
            const VList& l = as_vlist(lst);
            const VFun& g = as_vfun(step);
            for (auto it = l.elems.rbegin(); it != l.elems.rend(); ++it)
              acc = as_vfun(g.fn(*it)).fn(acc);
            return acc;
          },
          [&](const IFold& f) {
            ValuePtr step = eval_std(env, *f.step);
            ValuePtr acc = eval_std(env, *f.init);
            std::int64_t n = as_vnat(eval_std(env, *f.count));
            const VFun& g = as_vfun(step);
            for (std::int64_t i = 0; i < n; ++i) acc = g.fn(acc);
            return acc;
          },
      },
      t.node);
}

ValuePtr eval_std(const Env& env, const TermPtr& t) { return eval_std(env, *t); }

Costed add_cost(std::int64_t c, Costed x) {
  x.cost = add_checked(x.cost, c);
  return x;
}

Costed ccons(const Costed& head, const Costed& tail) {
  const CList& tl = as_clist(tail.val);
  std::vector<CostValPtr> elems;
  elems.reserve(tl.elems.size() + 1);
  elems.push_back(head.val);
  elems.insert(elems.end(), tl.elems.begin(), tl.elems.end());
  return Costed{cv::list(std::move(elems)), add_checked(head.cost, tail.cost)};
}

Costed cpair(const Costed& first, const Costed& second) {
  return Costed{cv::pair(first.val, second.val), add_checked(first.cost, second.cost)};
}

Costed capp(const Costed& f, const Costed& x) {
  const CFun& g = as_cfun(f.val);
  return add_cost(add_checked(f.cost, x.cost), g.fn(x.val));
}

std::int64_t app_cost(const Costed& f, const Costed& x) {
  return capp(f, x).cost - x.cost;
}

Costed eval_cost(const CostEnv& env, const Term& t, const CostModel& model) {
  return std::visit(
      overloaded{
          [&](const Var& v) -> Costed {
            if (const CostValPtr* bound = env.find(v.name)) return Costed{*bound, 0};
            throw ShapeFault("unbound variable '" + v.name + "'");
          },
          [&](const NatLit& n) { return Costed{cv::nat(n.value), model.constructor}; },
          [&](const NatCase& c) {
            Costed s = eval_cost(env, *c.scrutinee, model);
            std::int64_t n = as_cnat(s.val);
            Costed branch = n == 0
                                ? eval_cost(env, *c.zero_branch, model)
                                : eval_cost(env.with(c.binder, s.val), *c.pos_branch, model);
            return add_cost(add_checked(s.cost, model.case_split), branch);
          },
          [&](const Add& a) {
            Costed l = eval_cost(env, *a.lhs, model);
            Costed r = eval_cost(env, *a.rhs, model);
            return Costed{cv::nat(add_checked(as_cnat(l.val), as_cnat(r.val))),
                          add_checked(l.cost, r.cost)};
          },
          [&](const Nil&) { return Costed{cv::list({}), model.constructor}; },
          [&](const Cons& c) {
            Costed h = eval_cost(env, *c.head, model);
            Costed tl = eval_cost(env, *c.tail, model);
            return add_cost(model.constructor, ccons(h, tl));
          },
          [&](const ListCase& c) {
            Costed s = eval_cost(env, *c.scrutinee, model);
            const CList& l = as_clist(s.val);
            Costed branch;
            if (l.elems.empty()) {
              branch = eval_cost(env, *c.nil_branch, model);
            } else {
              std::vector<CostValPtr> rest(l.elems.begin() + 1, l.elems.end());
              CostEnv inner = env.with(c.head_binder, l.elems.front())
                                  .with(c.tail_binder, cv::list(std::move(rest)));
              branch = eval_cost(inner, *c.cons_branch, model);
            }
            return add_cost(add_checked(s.cost, model.case_split), branch);
          },
          [&](const PairLit& p) {
            Costed f = eval_cost(env, *p.first, model);
            Costed s = eval_cost(env, *p.second, model);
            return add_cost(model.constructor, cpair(f, s));
          },
          [&](const PairCase& c) {
            Costed s = eval_cost(env, *c.scrutinee, model);
            const CPair& p = as_cpair(s.val);
            CostEnv inner =
                env.with(c.first_binder, p.first).with(c.second_binder, p.second);
            Costed body = eval_cost(inner, *c.body, model);
            return add_cost(add_checked(s.cost, model.case_split), body);
          },
          [&](const Lam& l) {
            return Costed{
                cv::fun([env, binder = l.binder, body = l.body,
                         m = model](const CostValPtr& v) {
                  return add_cost(m.beta, eval_cost(env.with(binder, v), *body, m));
                }),
                0};
          },
          [&](const App& a) {
            Costed f = eval_cost(env, *a.fun, model);
            Costed x = eval_cost(env, *a.arg, model);
            return capp(f, x);
          },
          [&](const LFold& f) {
            Costed step = eval_cost(env, *f.step, model);
            Costed init = eval_cost(env, *f.init, model);
            Costed lst = eval_cost(env, *f.list, model);
            const CFun& g = as_cfun(step.val);
            const CList& l = as_clist(lst.val);
            Costed acc = init;
            for (auto it = l.elems.rbegin(); it != l.elems.rend(); ++it)
              acc = capp(g.fn(*it), acc);
            return add_cost(add_checked(step.cost, lst.cost), acc);
          },
          [&](const IFold& f) {
            Costed step = eval_cost(env, *f.step, model);
            Costed init = eval_cost(env, *f.init, model);
            Costed cnt = eval_cost(env, *f.count, model);
            std::int64_t n = as_cnat(cnt.val);
            // The step function is applied with cost 0 each round; its own
            // creation cost is charged exactly once below.
            Costed g0{step.val, 0};
            Costed acc = init;
            for (std::int64_t i = 0; i < n; ++i) acc = capp(g0, acc);
            return add_cost(add_checked(step.cost, cnt.cost), acc);
          },
      },
      t.node);
}

Costed eval_cost(const CostEnv& env, const TermPtr& t, const CostModel& model) {
  return eval_cost(env, *t, model);
}

namespace {

using Counter = std::shared_ptr<std::int64_t>;

ValuePtr oracle_eval(const Env& env, const Term& t, const Counter& betas) {
  return std::visit(
      overloaded{
          [&](const Var& v) -> ValuePtr {
            if (const ValuePtr* bound = env.find(v.name)) return *bound;
            throw ShapeFault("unbound variable '" + v.name + "'");
          },
          [&](const NatLit& n) { return val::nat(n.value); },
          [&](const NatCase& c) -> ValuePtr {
            ValuePtr s = oracle_eval(env, *c.scrutinee, betas);
            if (as_vnat(s) == 0) return oracle_eval(env, *c.zero_branch, betas);
            return oracle_eval(env.with(c.binder, s), *c.pos_branch, betas);
          },
          [&](const Add& a) {
            return val::nat(add_checked(as_vnat(oracle_eval(env, *a.lhs, betas)),
                                        as_vnat(oracle_eval(env, *a.rhs, betas))));
          },
          [&](const Nil&) { return val::list({}); },
          [&](const Cons& c) {
            ValuePtr h = oracle_eval(env, *c.head, betas);
            ValuePtr t = oracle_eval(env, *c.tail, betas);
            const VList& tl = as_vlist(t);
            std::vector<ValuePtr> elems;
            elems.reserve(tl.elems.size() + 1);
            elems.push_back(std::move(h));
            elems.insert(elems.end(), tl.elems.begin(), tl.elems.end());
            return val::list(std::move(elems));
          },
          [&](const ListCase& c) -> ValuePtr {
            ValuePtr s = oracle_eval(env, *c.scrutinee, betas);
            const VList& l = as_vlist(s);
            if (l.elems.empty()) return oracle_eval(env, *c.nil_branch, betas);
            std::vector<ValuePtr> rest(l.elems.begin() + 1, l.elems.end());
            Env inner = env.with(c.head_binder, l.elems.front())
                            .with(c.tail_binder, val::list(std::move(rest)));
            return oracle_eval(inner, *c.cons_branch, betas);
          },
          [&](const PairLit& p) {
            return val::pair(oracle_eval(env, *p.first, betas),
                             oracle_eval(env, *p.second, betas));
          },
          [&](const PairCase& c) {
            ValuePtr s = oracle_eval(env, *c.scrutinee, betas);
            const VPair& p = as_vpair(s);
            Env inner = env.with(c.first_binder, p.first).with(c.second_binder, p.second);
            return oracle_eval(inner, *c.body, betas);
          },
          [&](const Lam& l) {
            return val::fun([env, binder = l.binder, body = l.body,
                             ctr = betas](const ValuePtr& v) {
              ++*ctr;
              return oracle_eval(env.with(binder, v), *body, ctr);
            });
          },
          [&](const App& a) {
            ValuePtr f = oracle_eval(env, *a.fun, betas);
            ValuePtr x = oracle_eval(env, *a.arg, betas);
            return as_vfun(f).fn(x);
          },
          [&](const LFold& f) {
            ValuePtr step = oracle_eval(env, *f.step, betas);
            ValuePtr acc = oracle_eval(env, *f.init, betas);
            ValuePtr lst = oracle_eval(env, *f.list, betas);
            const VList& l = as_vlist(lst);
            const VFun& g = as_vfun(step);
            for (auto it = l.elems.rbegin(); it != l.elems.rend(); ++it)
              acc = as_vfun(g.fn(*it)).fn(acc);
            return acc;
          },
          [&](const IFold& f) {
            ValuePtr step = oracle_eval(env, *f.step, betas);
            ValuePtr acc = oracle_eval(env, *f.init, betas);
            std::int64_t n = as_vnat(oracle_eval(env, *f.count, betas));
            const VFun& g = as_vfun(step);
            for (std::int64_t i = 0; i < n; ++i) acc = g.fn(acc);
            return acc;
          },
      },
      t.node);
}

}  // namespace

BetaCount beta_count_oracle(const Env& env, const Term& t) {
  auto ctr = std::make_shared<std::int64_t>(0);
  ValuePtr v = oracle_eval(env, t, ctr);
  return BetaCount{std::move(v), *ctr};
}

BetaCount beta_count_oracle(const Env& env, const TermPtr& t) {
  return beta_count_oracle(env, *t);
}

}  // namespace costlr
