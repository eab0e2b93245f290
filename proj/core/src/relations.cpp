#include "costlr/relations.hpp"

#include "costlr/overloaded.hpp"
#include "costlr/prelude.hpp"
#include "costlr/pretty.hpp"

namespace costlr {

Rel::Rel(std::vector<Pair> pairs) {
  for (auto& [x, y] : pairs) {
    if (!is_ground(*x) || !is_ground(*y))
      throw GroundnessError("relation pairs must be ground");
    if (!contains(x, y)) pairs_.emplace_back(std::move(x), std::move(y));
  }
}

bool Rel::contains(const CostValPtr& x, const CostValPtr& y) const {
  for (const auto& [a, b] : pairs_)
    if (equal_ground(*a, *x) && equal_ground(*b, *y)) return true;
  return false;
}

json rel_to_json(const Rel& r) {
  json pairs = json::array();
  for (const auto& [a, b] : r.pairs())
    pairs.push_back(json::array({cost_val_to_json(a), cost_val_to_json(b)}));
  return json{{"pairs", pairs}};
}

bool ValueRel::contains(const ValuePtr& x, const ValuePtr& y) const {
  for (const auto& [a, b] : pairs)
    if (equal_ground(*a, *x) && equal_ground(*b, *y)) return true;
  return false;
}

const EnumBounds& EnumBounds::defaults() {
  static const EnumBounds bounds;
  return bounds;
}

namespace {

// Costs given to synthesized constant functions and to lifted copies of
// embedded pairs. Any nonempty set is sound; relatedness downstream is
// invariant under a common shift.
constexpr std::int64_t kFnShifts[] = {0, 1};

const Rel& lookup(const RelEnv& rho, const std::string& name) {
  auto it = rho.find(name);
  if (it == rho.end()) throw UnboundTypeVar("type variable '" + name + "' not in scope");
  return it->second;
}

const ValueRel& lookup(const ValueRelEnv& rho, const std::string& name) {
  auto it = rho.find(name);
  if (it == rho.end()) throw UnboundTypeVar("type variable '" + name + "' not in scope");
  return it->second;
}

template <typename P>
void truncate(std::vector<P>& v, std::size_t cap) {
  if (v.size() > cap) v.resize(cap);
}

}  // namespace

std::vector<std::pair<CostValPtr, CostValPtr>> enumerate_embedded(const Ty& ty,
                                                                  const RelEnv& rho,
                                                                  const EnumBounds& b) {
  using Pairs = std::vector<std::pair<CostValPtr, CostValPtr>>;
  Pairs out = std::visit(
      overloaded{
          [&](const TyVar& v) -> Pairs {
            const Rel& r = lookup(rho, v.name);
            return {r.pairs().begin(), r.pairs().end()};
          },
          [&](const NatTy&) -> Pairs {
            Pairs p;
            for (std::int64_t n = 0; n <= b.nat_max; ++n)
              p.emplace_back(cv::nat(n), cv::nat(n));
            return p;
          },
          [&](const ListTy& l) -> Pairs {
            Pairs elems = enumerate_embedded(*l.elem, rho, b);
            Pairs out{{cv::list({}), cv::list({})}};
            // breadth-first over lengths, zipping related element pairs
            std::vector<std::pair<std::vector<CostValPtr>, std::vector<CostValPtr>>> level{
                {{}, {}}};
            for (std::size_t len = 1;
                 len <= b.list_len_max && out.size() < b.samples_max; ++len) {
              decltype(level) next;
              for (const auto& [ls, rs] : level) {
                for (const auto& [e1, e2] : elems) {
                  auto l2 = ls;
                  auto r2 = rs;
                  l2.push_back(e1);
                  r2.push_back(e2);
                  out.emplace_back(cv::list(l2), cv::list(r2));
                  next.emplace_back(std::move(l2), std::move(r2));
                  if (out.size() >= b.samples_max) break;
                }
                if (out.size() >= b.samples_max) break;
              }
              level = std::move(next);
            }
            return out;
          },
          [&](const PairTy& p) -> Pairs {
            Pairs firsts = enumerate_embedded(*p.first, rho, b);
            Pairs seconds = enumerate_embedded(*p.second, rho, b);
            Pairs out;
            for (const auto& [f1, f2] : firsts) {
              for (const auto& [s1, s2] : seconds) {
                out.emplace_back(cv::pair(f1, s1), cv::pair(f2, s2));
                if (out.size() >= b.samples_max) return out;
              }
            }
            return out;
          },
          [&](const ArrowTy& a) -> Pairs {
            // Constant functions over related results are related at any arrow
            // type, which is all the finite quantification needs.
            Pairs results = enumerate_embedded(*a.cod, rho, b);
            Pairs out;
            for (const auto& [u, w] : results) {
              for (std::int64_t c : kFnShifts) {
                CostValPtr uc = u;
                CostValPtr wc = w;
                out.emplace_back(
                    cv::fun([uc, c](const CostValPtr&) { return Costed{uc, c}; }),
                    cv::fun([wc, c](const CostValPtr&) { return Costed{wc, c}; }));
                if (out.size() >= b.samples_max) return out;
              }
            }
            return out;
          },
      },
      ty.node);
  truncate(out, b.samples_max);
  return out;
}

std::vector<std::pair<Costed, Costed>> enumerate_lifted(const Ty& ty, const RelEnv& rho,
                                                        const EnumBounds& b) {
  std::vector<std::pair<Costed, Costed>> out;
  for (const auto& [x, y] : enumerate_embedded(ty, rho, b)) {
    for (std::int64_t c : kFnShifts) {
      out.emplace_back(Costed{x, c}, Costed{y, c});
      if (out.size() >= b.samples_max) return out;
    }
  }
  return out;
}

std::vector<std::pair<ValuePtr, ValuePtr>> enumerate_std(const Ty& ty,
                                                         const ValueRelEnv& rho,
                                                         const EnumBounds& b) {
  using Pairs = std::vector<std::pair<ValuePtr, ValuePtr>>;
  Pairs out = std::visit(
      overloaded{
          [&](const TyVar& v) -> Pairs {
            const ValueRel& r = lookup(rho, v.name);
            return r.pairs;
          },
          [&](const NatTy&) -> Pairs {
            Pairs p;
            for (std::int64_t n = 0; n <= b.nat_max; ++n)
              p.emplace_back(val::nat(n), val::nat(n));
            return p;
          },
          [&](const ListTy& l) -> Pairs {
            Pairs elems = enumerate_std(*l.elem, rho, b);
            Pairs out{{val::list({}), val::list({})}};
            std::vector<std::pair<std::vector<ValuePtr>, std::vector<ValuePtr>>> level{
                {{}, {}}};
            for (std::size_t len = 1;
                 len <= b.list_len_max && out.size() < b.samples_max; ++len) {
              decltype(level) next;
              for (const auto& [ls, rs] : level) {
                for (const auto& [e1, e2] : elems) {
                  auto l2 = ls;
                  auto r2 = rs;
                  l2.push_back(e1);
                  r2.push_back(e2);
                  out.emplace_back(val::list(l2), val::list(r2));
                  next.emplace_back(std::move(l2), std::move(r2));
                  if (out.size() >= b.samples_max) break;
                }
                if (out.size() >= b.samples_max) break;
              }
              level = std::move(next);
            }
            return out;
          },
          [&](const PairTy& p) -> Pairs {
            Pairs firsts = enumerate_std(*p.first, rho, b);
            Pairs seconds = enumerate_std(*p.second, rho, b);
            Pairs out;
            for (const auto& [f1, f2] : firsts) {
              for (const auto& [s1, s2] : seconds) {
                out.emplace_back(val::pair(f1, s1), val::pair(f2, s2));
                if (out.size() >= b.samples_max) return out;
              }
            }
            return out;
          },
          [&](const ArrowTy& a) -> Pairs {
            Pairs results = enumerate_std(*a.cod, rho, b);
            Pairs out;
            for (const auto& [u, w] : results) {
              ValuePtr uc = u;
              ValuePtr wc = w;
              out.emplace_back(val::fun([uc](const ValuePtr&) { return uc; }),
                               val::fun([wc](const ValuePtr&) { return wc; }));
              if (out.size() >= b.samples_max) return out;
            }
            return out;
          },
      },
      ty.node);
  truncate(out, b.samples_max);
  return out;
}

bool member_std(const Ty& ty, const ValueRelEnv& rho, const ValuePtr& x,
                const ValuePtr& y, const EnumBounds& bounds) {
  return std::visit(
      overloaded{
          [&](const TyVar& v) { return lookup(rho, v.name).contains(x, y); },
          [&](const NatTy&) {
            const auto* a = std::get_if<VNat>(&x->node);
            const auto* b = std::get_if<VNat>(&y->node);
            return a && b && a->value == b->value;
          },
          [&](const ListTy& l) {
            const auto* a = std::get_if<VList>(&x->node);
            const auto* b = std::get_if<VList>(&y->node);
            if (!a || !b || a->elems.size() != b->elems.size()) return false;
            for (std::size_t i = 0; i < a->elems.size(); ++i)
              if (!member_std(*l.elem, rho, a->elems[i], b->elems[i], bounds))
                return false;
            return true;
          },
          [&](const PairTy& p) {
            const auto* a = std::get_if<VPair>(&x->node);
            const auto* b = std::get_if<VPair>(&y->node);
            return a && b && member_std(*p.first, rho, a->first, b->first, bounds) &&
                   member_std(*p.second, rho, a->second, b->second, bounds);
          },
          [&](const ArrowTy& arr) {
            const auto* f = std::get_if<VFun>(&x->node);
            const auto* g = std::get_if<VFun>(&y->node);
            if (!f || !g) return false;
            for (const auto& [a, b] : enumerate_std(*arr.dom, rho, bounds))
              if (!member_std(*arr.cod, rho, f->fn(a), g->fn(b), bounds)) return false;
            return true;
          },
      },
      ty.node);
}

bool member_embedded(const Ty& ty, const RelEnv& rho, const CostValPtr& x,
                     const CostValPtr& y, const EnumBounds& bounds) {
  return std::visit(
      overloaded{
          [&](const TyVar& v) { return lookup(rho, v.name).contains(x, y); },
          [&](const NatTy&) {
            const auto* a = std::get_if<CNat>(&x->node);
            const auto* b = std::get_if<CNat>(&y->node);
            return a && b && a->value == b->value;
          },
          [&](const ListTy& l) {
            const auto* a = std::get_if<CList>(&x->node);
            const auto* b = std::get_if<CList>(&y->node);
            if (!a || !b || a->elems.size() != b->elems.size()) return false;
            for (std::size_t i = 0; i < a->elems.size(); ++i)
              if (!member_embedded(*l.elem, rho, a->elems[i], b->elems[i], bounds))
                return false;
            return true;
          },
          [&](const PairTy& p) {
            const auto* a = std::get_if<CPair>(&x->node);
            const auto* b = std::get_if<CPair>(&y->node);
            return a && b && member_embedded(*p.first, rho, a->first, b->first, bounds) &&
                   member_embedded(*p.second, rho, a->second, b->second, bounds);
          },
          [&](const ArrowTy& arr) {
            // Results must agree on cost and be related on value: membership in
            // the cost-lifting of the result relation.
            const auto* f = std::get_if<CFun>(&x->node);
            const auto* g = std::get_if<CFun>(&y->node);
            if (!f || !g) return false;
            for (const auto& [a, b] : enumerate_embedded(*arr.dom, rho, bounds)) {
              Costed fa = f->fn(a);
              Costed gb = g->fn(b);
              if (fa.cost != gb.cost) return false;
              if (!member_embedded(*arr.cod, rho, fa.val, gb.val, bounds)) return false;
            }
            return true;
          },
      },
      ty.node);
}

bool member_lifted(const Ty& ty, const RelEnv& rho, const Costed& x, const Costed& y,
                   const EnumBounds& bounds) {
  return std::visit(
      overloaded{
          [&](const TyVar& v) {
            return x.cost == y.cost && lookup(rho, v.name).contains(x.val, y.val);
          },
          [&](const NatTy&) {
            const auto* a = std::get_if<CNat>(&x.val->node);
            const auto* b = std::get_if<CNat>(&y.val->node);
            return a && b && x.cost == y.cost && a->value == b->value;
          },
          [&](const ListTy& l) {
            // Decomposition through the cost-summing cons: element relatedness
            // is invariant under a common shift, so elements are compared at
            // cost 0 and the totals at the top.
            const auto* a = std::get_if<CList>(&x.val->node);
            const auto* b = std::get_if<CList>(&y.val->node);
            if (!a || !b || a->elems.size() != b->elems.size()) return false;
            if (x.cost != y.cost) return false;
            for (std::size_t i = 0; i < a->elems.size(); ++i)
              if (!member_lifted(*l.elem, rho, Costed{a->elems[i], 0},
                                 Costed{b->elems[i], 0}, bounds))
                return false;
            return true;
          },
          [&](const PairTy& p) {
            const auto* a = std::get_if<CPair>(&x.val->node);
            const auto* b = std::get_if<CPair>(&y.val->node);
            return a && b && x.cost == y.cost &&
                   member_lifted(*p.first, rho, Costed{a->first, 0}, Costed{b->first, 0},
                                 bounds) &&
                   member_lifted(*p.second, rho, Costed{a->second, 0},
                                 Costed{b->second, 0}, bounds);
          },
          [&](const ArrowTy& arr) {
            const auto* f = std::get_if<CFun>(&x.val->node);
            const auto* g = std::get_if<CFun>(&y.val->node);
            if (!f || !g || x.cost != y.cost) return false;
            for (const auto& [a, b] : enumerate_lifted(*arr.dom, rho, bounds))
              if (!member_lifted(*arr.cod, rho, capp(x, a), capp(y, b), bounds))
                return false;
            return true;
          },
      },
      ty.node);
}

GraphRel::GraphRel(Costed g, std::vector<Costed> points)
    : g_(std::move(g)), points_(std::move(points)) {
  as_cfun(g_.val);
  std::vector<Rel::Pair> pairs;
  pairs.reserve(points_.size());
  for (const Costed& x : points_) {
    Costed out = capp(g_, x);
    if (!is_ground(*x.val) || !is_ground(*out.val))
      throw GroundnessError("graph relation needs ground points and outputs");
    app_costs_.push_back(out.cost - x.cost);
    pairs.emplace_back(x.val, out.val);
    outputs_.push_back(std::move(out));
  }
  rel_ = Rel(std::move(pairs));
}

GraphRel graph_rel(Costed g, std::vector<Costed> points) {
  return GraphRel(std::move(g), std::move(points));
}

std::optional<BaseWitness> witness_base(const GraphRel& r, const Costed& x,
                                        const Costed& y) {
  for (std::size_t i = 0; i < r.size(); ++i) {
    const Costed& xi = r.points()[i];
    const Costed& out = r.outputs()[i];
    std::int64_t c = x.cost - r.app_costs()[i] - xi.cost;
    if (equal_ground(*x.val, *xi.val) && equal_ground(*y.val, *out.val) &&
        y.cost == c + out.cost)
      return BaseWitness{i + 1, c};
  }
  return std::nullopt;
}

bool base_transport_holds(const GraphRel& r, const BaseWitness& w, const Costed& x,
                          const Costed& y) {
  Costed lhs = capp(r.fn(), x);
  Costed rhs = add_cost(r.app_costs()[w.index - 1], y);
  return equal_costed(lhs, rhs);
}

std::optional<PairWitness> witness_pair(const GraphRel& rg, const GraphRel& rh,
                                        const Costed& p, const Costed& q,
                                        const CostModel& model) {
  if (!std::get_if<CPair>(&p.val->node) || !std::get_if<CPair>(&q.val->node))
    return std::nullopt;
  Costed mpgh = capp(map_pair_costed(model), cpair(rg.fn(), rh.fn()));
  for (std::size_t i = 0; i < rg.size(); ++i) {
    for (std::size_t j = 0; j < rh.size(); ++j) {
      Costed base = cpair(rg.points()[i], rh.points()[j]);
      Costed out = capp(mpgh, base);
      std::int64_t ac = out.cost - base.cost;
      std::int64_t c = p.cost - ac - base.cost;
      if (equal_ground(*p.val, *base.val) && equal_ground(*q.val, *out.val) &&
          q.cost == c + out.cost)
        return PairWitness{i + 1, j + 1, c};
    }
  }
  return std::nullopt;
}

bool pair_transport_holds(const GraphRel& rg, const GraphRel& rh, const PairWitness& w,
                          const Costed& p, const Costed& q, const CostModel& model) {
  Costed mpgh = capp(map_pair_costed(model), cpair(rg.fn(), rh.fn()));
  Costed base = cpair(rg.points()[w.first_index - 1], rh.points()[w.second_index - 1]);
  std::int64_t ac = app_cost(mpgh, base);
  return equal_costed(capp(mpgh, p), add_cost(ac, q));
}

Costed select_points(const GraphRel& r, const std::vector<std::size_t>& indices) {
  Costed out{cv::list({}), 0};
  for (auto it = indices.rbegin(); it != indices.rend(); ++it)
    out = ccons(r.points()[*it - 1], out);
  return out;
}

std::optional<ListWitness> witness_list(const GraphRel& r, const Costed& xs,
                                        const Costed& ys, const CostModel& model) {
  const auto* a = std::get_if<CList>(&xs.val->node);
  const auto* b = std::get_if<CList>(&ys.val->node);
  if (!a || !b || a->elems.size() != b->elems.size()) return std::nullopt;
  const std::size_t m = a->elems.size();

  // Pointwise choice: position k needs a point whose input matches xs and
  // whose output matches ys. The shift c absorbs everything else, so choices
  // are independent and the pointwise minimum is the lexicographically least
  // solution.
  std::vector<std::size_t> indices;
  indices.reserve(m);
  for (std::size_t k = 0; k < m; ++k) {
    bool found = false;
    for (std::size_t i = 0; i < r.size() && !found; ++i) {
      if (equal_ground(*a->elems[k], *r.points()[i].val) &&
          equal_ground(*b->elems[k], *r.outputs()[i].val)) {
        indices.push_back(i + 1);
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }

  Costed selected = select_points(r, indices);
  Costed mlg = capp(map_list_costed(model), r.fn());
  Costed out = capp(mlg, selected);
  std::int64_t ac = out.cost - selected.cost;
  std::int64_t c = xs.cost - ac - selected.cost;
  if (ys.cost != c + out.cost) return std::nullopt;
  if (!equal_ground(*ys.val, *out.val)) return std::nullopt;
  return ListWitness{std::move(indices), c};
}

bool list_transport_holds(const GraphRel& r, const ListWitness& w, const Costed& xs,
                          const Costed& ys, const CostModel& model) {
  Costed selected = select_points(r, w.indices);
  Costed mlg = capp(map_list_costed(model), r.fn());
  std::int64_t ac = app_cost(mlg, selected);
  return equal_costed(capp(mlg, xs), add_cost(ac, ys)) &&
         equal_ground(*selected.val, *xs.val);
}

bool param_check(const Ctx& ctx, const Term& t, const RelEnv& rho, const CostEnv& env1,
                 const CostEnv& env2, const ParamCheckOptions& options) {
  TyPtr tau = typecheck(ctx, t);
  for (const auto& [name, var_ty] : ctx.term_vars) {
    const CostValPtr* v1 = env1.find(name);
    const CostValPtr* v2 = env2.find(name);
    if (!v1 || !v2)
      throw PreconditionViolation("environment missing a binding for '" + name + "'");
    bool related;
    try {
      related = member_lifted(*var_ty, rho, Costed{*v1, 0}, Costed{*v2, 0},
                              options.bounds);
    } catch (const UnboundTypeVar& e) {
      throw PreconditionViolation(e.what());
    }
    if (!related)
      throw PreconditionViolation("environments unrelated at '" + name +
                                  "' :: " + pretty(var_ty));
  }
  Costed lhs = eval_cost(env1, t, options.lhs_model);
  Costed rhs = eval_cost(env2, t, options.rhs_model);
  return member_lifted(*tau, rho, lhs, rhs, options.bounds);
}

}  // namespace costlr
