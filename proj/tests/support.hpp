#pragma once

// Shared helpers for the test suites: random tree generators, ground-value
// grids, and brute-force oracles that spell out the lifted-relation
// definitions by exhaustive enumeration. The oracles deliberately share no
// logic with the witness procedures they check.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "costlr/eval.hpp"
#include "costlr/parser.hpp"
#include "costlr/relations.hpp"
#include "costlr/syntax.hpp"
#include "costlr/value.hpp"

namespace costlr::testing {

inline TyPtr random_ty(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 4 : 1);
  switch (pick(rng)) {
    case 0: return ty::nat();
    case 1: {
      static const char* names[] = {"a", "b", "c"};
      return ty::var(names[rng() % 3]);
    }
    case 2: return ty::list(random_ty(rng, depth - 1));
    case 3: return ty::pair(random_ty(rng, depth - 1), random_ty(rng, depth - 1));
    default:
      return ty::arrow(random_ty(rng, depth - 1), random_ty(rng, depth - 1));
  }
}

inline std::string random_ident(std::mt19937_64& rng) {
  static const char* names[] = {"x", "y", "zz", "ab1", "k"};
  return names[rng() % 5];
}

// Arbitrary tree, not necessarily well typed; the parser and printer do not
// care.
inline TermPtr random_term(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 12 : 2);
  switch (pick(rng)) {
    case 0: return term::var(random_ident(rng));
    case 1: return term::nat(static_cast<std::int64_t>(rng() % 10));
    case 2: return term::nil(random_ty(rng, 1));
    case 3:
      return term::add(random_term(rng, depth - 1), random_term(rng, depth - 1));
    case 4:
      return term::cons(random_term(rng, depth - 1), random_term(rng, depth - 1));
    case 5:
      return term::pair(random_term(rng, depth - 1), random_term(rng, depth - 1));
    case 6:
      return term::lam(random_ident(rng), random_ty(rng, 1),
                       random_term(rng, depth - 1));
    case 7:
      return term::app(random_term(rng, depth - 1), random_term(rng, depth - 1));
    case 8:
      return term::ncase(random_term(rng, depth - 1), random_term(rng, depth - 1),
                         random_ident(rng), random_term(rng, depth - 1));
    case 9:
      return term::lcase(random_term(rng, depth - 1), random_term(rng, depth - 1),
                         random_ident(rng), random_ident(rng),
                         random_term(rng, depth - 1));
    case 10:
      return term::pcase(random_term(rng, depth - 1), random_ident(rng),
                         random_ident(rng), random_term(rng, depth - 1));
    case 11:
      return term::lfold(random_term(rng, depth - 1), random_term(rng, depth - 1),
                         random_term(rng, depth - 1));
    default:
      return term::ifold(random_term(rng, depth - 1), random_term(rng, depth - 1),
                         random_term(rng, depth - 1));
  }
}

inline CostValPtr random_ground_cost_val(std::mt19937_64& rng, int depth = 2) {
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 2 : 0);
  std::uniform_int_distribution<std::int64_t> nat(0, 9);
  switch (pick(rng)) {
    case 0: return cv::nat(nat(rng));
    case 1: {
      std::vector<CostValPtr> elems;
      std::size_t n = rng() % 3;
      for (std::size_t i = 0; i < n; ++i)
        elems.push_back(random_ground_cost_val(rng, depth - 1));
      return cv::list(std::move(elems));
    }
    default:
      return cv::pair(random_ground_cost_val(rng, depth - 1),
                      random_ground_cost_val(rng, depth - 1));
  }
}

inline Costed random_ground_costed(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> cost(-5, 5);
  return Costed{random_ground_cost_val(rng), cost(rng)};
}

inline Costed random_list_costed(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> cost(-5, 5);
  std::vector<CostValPtr> elems;
  std::size_t n = rng() % 4;
  for (std::size_t i = 0; i < n; ++i)
    elems.push_back(random_ground_cost_val(rng, 1));
  return Costed{cv::list(std::move(elems)), cost(rng)};
}

// Functions safe to apply to any value, for exercising the application laws.
inline std::vector<Costed> law_function_pool() {
  std::vector<Costed> pool;
  pool.push_back(eval_cost(CostEnv{}, parse_term("\\x:a. x")));
  pool.push_back(eval_cost(CostEnv{}, parse_term("\\x:a. (\\y:a. y) x")));
  pool.push_back(eval_cost(CostEnv{}, parse_term("\\x:a. 7")));
  pool.push_back(Costed{cv::fun([](const CostValPtr& v) { return Costed{v, 3}; }), 2});
  pool.push_back(Costed{cv::fun([](const CostValPtr&) {
                          return Costed{cv::nat(0), -1};
                        }),
                        -2});
  return pool;
}

// ---- brute-force oracles, straight from the lifting definitions ----

inline constexpr std::int64_t kBruteWindow = 9;

// (x, y) in Cost{R}: some pair of R tagged with one shared cost.
inline bool brute_cost_lift(const Rel& r, const Costed& x, const Costed& y) {
  for (const auto& [u, w] : r.pairs()) {
    for (std::int64_t c = -kBruteWindow; c <= kBruteWindow; ++c) {
      if (x.cost == c && y.cost == c && equal_ground(*x.val, *u) &&
          equal_ground(*y.val, *w))
        return true;
    }
  }
  return false;
}

// (p, q) in the pair lifting of Cost{R1} and Cost{R2}: componentwise members
// recombined with the cost-summing pair constructor.
inline bool brute_pair_lift(const Rel& r1, const Rel& r2, const Costed& p,
                            const Costed& q) {
  for (const auto& [u1, w1] : r1.pairs()) {
    for (const auto& [u2, w2] : r2.pairs()) {
      for (std::int64_t c1 = -kBruteWindow; c1 <= kBruteWindow; ++c1) {
        for (std::int64_t c2 = -kBruteWindow; c2 <= kBruteWindow; ++c2) {
          Costed left = cpair(Costed{u1, c1}, Costed{u2, c2});
          Costed right = cpair(Costed{w1, c1}, Costed{w2, c2});
          if (equal_costed(p, left) && equal_costed(q, right)) return true;
        }
      }
    }
  }
  return false;
}

// (xs, ys) in the list lifting of Cost{R}: some chain of members composed with
// the cost-summing cons, up to a shared cost shift. The shift mirrors how the
// lifting is consumed: it is absorbable into element costs whenever the chain
// is nonempty, and it is what relates equal-cost empty lists.
inline bool brute_list_lift(const Rel& r, const Costed& xs, const Costed& ys,
                            std::int64_t window = 2) {
  const auto* a = std::get_if<CList>(&xs.val->node);
  const auto* b = std::get_if<CList>(&ys.val->node);
  if (!a || !b || a->elems.size() != b->elems.size()) return false;
  const std::size_t m = a->elems.size();

  if (m == 0) return xs.cost == ys.cost;
  if (r.pairs().empty()) return false;

  std::vector<std::size_t> pair_idx(m, 0);
  std::vector<std::int64_t> costs(m, -window);

  auto rebuild = [&](const std::vector<std::size_t>& pi,
                     const std::vector<std::int64_t>& cs, bool right) {
    Costed acc{cv::list({}), 0};
    for (std::size_t k = m; k-- > 0;) {
      const auto& [u, w] = r.pairs()[pi[k]];
      acc = ccons(Costed{right ? w : u, cs[k]}, acc);
    }
    return acc;
  };

  // Enumerate every pair choice and cost assignment; the shift is then forced.
  while (true) {
    Costed left = rebuild(pair_idx, costs, false);
    std::int64_t shift = xs.cost - left.cost;
    if (equal_ground(*xs.val, *left.val)) {
      Costed right = rebuild(pair_idx, costs, true);
      if (equal_ground(*ys.val, *right.val) && ys.cost == shift + right.cost)
        return true;
    }
    std::size_t k = 0;
    while (k < m && ++costs[k] > window) costs[k++] = -window;
    if (k < m) continue;
    k = 0;
    while (k < m && ++pair_idx[k] >= r.pairs().size()) pair_idx[k++] = 0;
    if (k == m) return false;
  }
}

// Behavioral comparison of costed denotations at a type with no free type
// variables: ground parts structurally, functions by probing.
inline std::vector<CostValPtr> ground_probes(const Ty& t);

inline bool probe_equal(const Ty& t, const Costed& a, const Costed& b) {
  if (const auto* arrow = std::get_if<ArrowTy>(&t.node)) {
    if (a.cost != b.cost) return false;
    for (const CostValPtr& p : ground_probes(*arrow->dom))
      if (!probe_equal(*arrow->cod, capp(a, Costed{p, 0}), capp(b, Costed{p, 0})))
        return false;
    return true;
  }
  if (const auto* lst = std::get_if<ListTy>(&t.node)) {
    const auto* x = std::get_if<CList>(&a.val->node);
    const auto* y = std::get_if<CList>(&b.val->node);
    if (!x || !y || x->elems.size() != y->elems.size() || a.cost != b.cost)
      return false;
    for (std::size_t i = 0; i < x->elems.size(); ++i)
      if (!probe_equal(*lst->elem, Costed{x->elems[i], 0}, Costed{y->elems[i], 0}))
        return false;
    return true;
  }
  if (const auto* pr = std::get_if<PairTy>(&t.node)) {
    const auto* x = std::get_if<CPair>(&a.val->node);
    const auto* y = std::get_if<CPair>(&b.val->node);
    return x && y && a.cost == b.cost &&
           probe_equal(*pr->first, Costed{x->first, 0}, Costed{y->first, 0}) &&
           probe_equal(*pr->second, Costed{x->second, 0}, Costed{y->second, 0});
  }
  return equal_costed(a, b);
}

inline std::vector<CostValPtr> ground_probes(const Ty& t) {
  if (std::get_if<NatTy>(&t.node)) return {cv::nat(0), cv::nat(1), cv::nat(3)};
  if (const auto* lst = std::get_if<ListTy>(&t.node)) {
    auto inner = ground_probes(*lst->elem);
    std::vector<CostValPtr> out{cv::list({})};
    if (!inner.empty()) {
      out.push_back(cv::list({inner[0]}));
      if (inner.size() > 1) out.push_back(cv::list({inner[0], inner[1]}));
    }
    return out;
  }
  if (const auto* pr = std::get_if<PairTy>(&t.node)) {
    auto f = ground_probes(*pr->first);
    auto s = ground_probes(*pr->second);
    std::vector<CostValPtr> out;
    for (std::size_t i = 0; i < f.size() && i < 2; ++i)
      for (std::size_t j = 0; j < s.size() && j < 2; ++j)
        out.push_back(cv::pair(f[i], s[j]));
    return out;
  }
  if (const auto* arrow = std::get_if<ArrowTy>(&t.node)) {
    std::vector<CostValPtr> out;
    auto results = ground_probes(*arrow->cod);
    for (std::size_t i = 0; i < results.size() && i < 2; ++i) {
      CostValPtr r = results[i];
      out.push_back(cv::fun([r](const CostValPtr&) { return Costed{r, 1}; }));
    }
    return out;
  }
  return {cv::nat(0)};  // type variables are instantiated before probing
}

}  // namespace costlr::testing
