#include "costlr/theorems.hpp"

#include <sstream>

#include "costlr/prelude.hpp"
#include "costlr/pretty.hpp"
#include "costlr/typecheck.hpp"

namespace costlr {

std::string_view shape_name(Shape s) {
  switch (s) {
    case Shape::ConstNat: return "const-nat";
    case Shape::Proj: return "proj";
    case Shape::Dup: return "dup";
    case Shape::PairConsume: return "pair-consume";
    case Shape::ListLen: return "list-len";
    case Shape::ListToList: return "list-to-list";
  }
  return "?";
}

std::optional<Shape> shape_from_name(std::string_view name) {
  for (Shape s : {Shape::ConstNat, Shape::Proj, Shape::Dup, Shape::PairConsume,
                  Shape::ListLen, Shape::ListToList})
    if (name == shape_name(s)) return s;
  return std::nullopt;
}

TyPtr shape_type(Shape s, const std::string& alpha) {
  TyPtr a = ty::var(alpha);
  switch (s) {
    case Shape::ConstNat: return ty::arrow(a, ty::nat());
    case Shape::Proj: return ty::arrow(a, ty::arrow(a, a));
    case Shape::Dup: return ty::arrow(a, ty::pair(a, a));
    case Shape::PairConsume: return ty::arrow(ty::pair(a, a), a);
    case Shape::ListLen: return ty::arrow(ty::list(a), ty::nat());
    case Shape::ListToList: return ty::arrow(ty::list(a), ty::list(a));
  }
  return a;
}

json report_json(const TheoremReport& r) {
  return json{{"shape", std::string(shape_name(r.shape))},
              {"lhs", costed_to_json(r.lhs)},
              {"rhs", costed_to_json(r.rhs)},
              {"valueEqual", r.value_equal},
              {"delta", r.delta},
              {"witness", r.delta_witness},
              {"verdict", r.verdict == Verdict::Holds ? "holds" : "violated"}};
}

const StdLib& std_lib() {
  static const StdLib lib{map_list_term(), map_pair_term(), length_term()};
  return lib;
}

bool sqsubseteq(const Costed& a, const Costed& b) {
  return equal_ground(*a.val, *b.val) && a.cost <= b.cost;
}

namespace {

TermPtr the_single_ty_var(const TermPtr& t, std::string& alpha) {
  auto vars = free_ty_vars(*t);
  if (vars.size() != 1)
    throw TypeError(t->span, "a term with exactly one free type variable",
                    vars.empty() ? std::string("none") : "several");
  alpha = *vars.begin();
  return t;
}

TyPtr check_closed(const TyPtr& t, const char* what) {
  if (!is_closed_ty(*t))
    throw TypeError(t->span, std::string(what) + " to be a closed type", pretty(t));
  return t;
}

void check_type(const Ctx& ctx, const TermPtr& t, const TyPtr& expected) {
  TyPtr found = typecheck(ctx, t);
  if (!equal(*found, *expected)) throw TypeError(t->span, pretty(expected), pretty(found));
}

// mapPair instantiated for two copies of g :: tau1 -> tau2.
TermPtr map_pair_at(const TyPtr& tau1, const TyPtr& tau2) {
  TermPtr mp = map_pair_term();
  mp = subst_type_in_term(mp, "a", tau1);
  mp = subst_type_in_term(mp, "b", tau1);
  mp = subst_type_in_term(mp, "c", tau2);
  return subst_type_in_term(mp, "d", tau2);
}

TermPtr map_list_at(const TyPtr& tau1, const TyPtr& tau2) {
  TermPtr ml = map_list_term();
  ml = subst_type_in_term(ml, "a", tau1);
  return subst_type_in_term(ml, "b", tau2);
}

std::string describe(std::int64_t v) { return std::to_string(v); }

}  // namespace

TheoremReport check_free_theorem(Shape shape, const TermPtr& f, const TermPtr& g,
                                 const std::vector<TermPtr>& args, const TyPtr& tau1,
                                 const TyPtr& tau2) {
  check_closed(tau1, "tau1");
  check_closed(tau2, "tau2");

  std::string alpha;
  the_single_ty_var(f, alpha);
  Ctx fctx;
  fctx.type_vars = {alpha};
  check_type(fctx, f, shape_type(shape, alpha));
  check_type(Ctx{}, g, ty::arrow(tau1, tau2));

  const std::size_t want_args =
      (shape == Shape::Proj || shape == Shape::PairConsume) ? 2 : 1;
  if (args.size() != want_args)
    throw TypeError(f->span, std::to_string(want_args) + " argument term(s)",
                    std::to_string(args.size()));

  TermPtr f1 = subst_type_in_term(f, alpha, tau1);
  TermPtr f2 = subst_type_in_term(f, alpha, tau2);
  Costed g_sem = eval_cost(CostEnv{}, g);

  TheoremReport rep;
  rep.shape = shape;
  std::ostringstream witness;

  switch (shape) {
    case Shape::ConstNat: {
      const TermPtr& x = args[0];
      check_type(Ctx{}, x, tau1);
      // f (g x) versus f x: the cost of one application of g separates them.
      TermPtr lhs_term = term::app(f2, term::app(g, x));
      TermPtr rhs_term = term::app(f1, x);
      rep.lhs = eval_cost(CostEnv{}, lhs_term);
      rep.rhs = eval_cost(CostEnv{}, rhs_term);
      rep.delta = rep.lhs.cost - rep.rhs.cost;
      std::int64_t predicted = app_cost(g_sem, eval_cost(CostEnv{}, x));
      rep.value_equal = equal_ground(*rep.lhs.val, *rep.rhs.val);
      bool delta_ok = rep.delta == predicted;
      witness << "delta = appCost(g, x) = " << describe(predicted)
              << (delta_ok ? "" : "; measured " + describe(rep.delta));
      rep.verdict = rep.value_equal && delta_ok ? Verdict::Holds : Verdict::Violated;
      break;
    }
    case Shape::Proj: {
      const TermPtr& t1 = args[0];
      const TermPtr& t2 = args[1];
      check_type(Ctx{}, t1, tau1);
      check_type(Ctx{}, t2, tau1);
      // g (f t1 t2) against f (g t1) (g t2); the gap is the cost of applying g
      // to whichever argument f projects.
      TermPtr lhs_term = term::app(g, term::app(term::app(f1, t1), t2));
      TermPtr rhs_term =
          term::app(term::app(f2, term::app(g, t1)), term::app(g, t2));
      rep.lhs = eval_cost(CostEnv{}, lhs_term);
      rep.rhs = eval_cost(CostEnv{}, rhs_term);
      rep.delta = rep.rhs.cost - rep.lhs.cost;
      std::int64_t c1 = app_cost(g_sem, eval_cost(CostEnv{}, t1));
      std::int64_t c2 = app_cost(g_sem, eval_cost(CostEnv{}, t2));
      rep.value_equal = equal_ground(*rep.lhs.val, *rep.rhs.val);
      bool delta_ok = rep.delta == c1 || rep.delta == c2;
      bool order_ok = rep.value_equal && rep.lhs.cost <= rep.rhs.cost;
      if (rep.delta == c1 && rep.delta == c2)
        witness << "delta = appCost(g, t1) = appCost(g, t2) = " << describe(c1);
      else if (rep.delta == c1)
        witness << "delta = appCost(g, t1) = " << describe(c1);
      else if (rep.delta == c2)
        witness << "delta = appCost(g, t2) = " << describe(c2);
      else
        witness << "measured delta " << describe(rep.delta) << " outside {appCost(g, t1) = "
                << describe(c1) << ", appCost(g, t2) = " << describe(c2) << "}";
      rep.verdict =
          rep.value_equal && delta_ok && order_ok ? Verdict::Holds : Verdict::Violated;
      break;
    }
    case Shape::Dup: {
      const TermPtr& t = args[0];
      check_type(Ctx{}, t, tau1);
      // f (g t) against mapPair (g, g) (f t).
      TermPtr mp = map_pair_at(tau1, tau2);
      TermPtr lhs_term = term::app(f2, term::app(g, t));
      TermPtr rhs_term =
          term::app(term::app(mp, term::pair(g, g)), term::app(f1, t));
      rep.lhs = eval_cost(CostEnv{}, lhs_term);
      rep.rhs = eval_cost(CostEnv{}, rhs_term);
      rep.delta = rep.rhs.cost - rep.lhs.cost;
      Costed t_sem = eval_cost(CostEnv{}, t);
      Costed mp_gg = capp(map_pair_costed(), cpair(g_sem, g_sem));
      std::int64_t mp_cost = app_cost(mp_gg, cpair(t_sem, t_sem));
      std::int64_t g_cost = app_cost(g_sem, t_sem);
      std::int64_t predicted = mp_cost - g_cost;
      rep.value_equal = equal_ground(*rep.lhs.val, *rep.rhs.val);
      bool delta_ok = rep.delta == predicted;
      bool order_ok = rep.value_equal && rep.lhs.cost <= rep.rhs.cost;
      witness << "delta = appCost(mapPair (g,g), (t,t)) - appCost(g, t) = "
              << describe(mp_cost) << " - " << describe(g_cost) << " = "
              << describe(predicted)
              << (delta_ok ? "" : "; measured " + describe(rep.delta));
      rep.verdict =
          rep.value_equal && delta_ok && order_ok ? Verdict::Holds : Verdict::Violated;
      break;
    }
    case Shape::PairConsume: {
      const TermPtr& t1 = args[0];
      const TermPtr& t2 = args[1];
      check_type(Ctx{}, t1, tau1);
      check_type(Ctx{}, t2, tau1);
      // g (f (t1, t2)) against f (mapPair (g, g) (t1, t2)).
      TermPtr mp = map_pair_at(tau1, tau2);
      TermPtr pair_term = term::pair(t1, t2);
      TermPtr lhs_term = term::app(g, term::app(f1, pair_term));
      TermPtr rhs_term =
          term::app(f2, term::app(term::app(mp, term::pair(g, g)), pair_term));
      rep.lhs = eval_cost(CostEnv{}, lhs_term);
      rep.rhs = eval_cost(CostEnv{}, rhs_term);
      rep.delta = rep.rhs.cost - rep.lhs.cost;
      Costed t1_sem = eval_cost(CostEnv{}, t1);
      Costed t2_sem = eval_cost(CostEnv{}, t2);
      Costed mp_gg = capp(map_pair_costed(), cpair(g_sem, g_sem));
      std::int64_t mp_cost = app_cost(mp_gg, cpair(t1_sem, t2_sem));
      std::int64_t d1 = mp_cost - app_cost(g_sem, t1_sem);
      std::int64_t d2 = mp_cost - app_cost(g_sem, t2_sem);
      rep.value_equal = equal_ground(*rep.lhs.val, *rep.rhs.val);
      bool delta_ok = rep.delta == d1 || rep.delta == d2;
      bool order_ok = rep.value_equal && rep.lhs.cost <= rep.rhs.cost;
      if (rep.delta == d1 && rep.delta == d2)
        witness << "delta matches both components: " << describe(d1);
      else if (rep.delta == d1)
        witness << "delta = appCost(mapPair (g,g), t) - appCost(g, fst t) = "
                << describe(d1);
      else if (rep.delta == d2)
        witness << "delta = appCost(mapPair (g,g), t) - appCost(g, snd t) = "
                << describe(d2);
      else
        witness << "measured delta " << describe(rep.delta) << " outside {"
                << describe(d1) << ", " << describe(d2) << "}";
      rep.verdict =
          rep.value_equal && delta_ok && order_ok ? Verdict::Holds : Verdict::Violated;
      break;
    }
    case Shape::ListLen: {
      const TermPtr& t = args[0];
      check_type(Ctx{}, t, ty::list(tau1));
      // f t against f (mapList g t).
      TermPtr ml = map_list_at(tau1, tau2);
      TermPtr lhs_term = term::app(f1, t);
      TermPtr rhs_term = term::app(f2, term::app(term::app(ml, g), t));
      rep.lhs = eval_cost(CostEnv{}, lhs_term);
      rep.rhs = eval_cost(CostEnv{}, rhs_term);
      rep.delta = rep.rhs.cost - rep.lhs.cost;
      Costed t_sem = eval_cost(CostEnv{}, t);
      Costed ml_g = capp(map_list_costed(), g_sem);
      std::int64_t predicted = app_cost(ml_g, t_sem);
      rep.value_equal = equal_ground(*rep.lhs.val, *rep.rhs.val);
      bool delta_ok = rep.delta == predicted;
      bool order_ok = rep.value_equal && rep.lhs.cost <= rep.rhs.cost;
      witness << "delta = appCost(mapList g, t) = " << describe(predicted)
              << (delta_ok ? "" : "; measured " + describe(rep.delta));
      rep.verdict =
          rep.value_equal && delta_ok && order_ok ? Verdict::Holds : Verdict::Violated;
      break;
    }
    case Shape::ListToList: {
      const TermPtr& t = args[0];
      check_type(Ctx{}, t, ty::list(tau1));
      // mapList g (f t) against f (mapList g t); the sides differ by the
      // mapping costs over the full list and over the sublist f selects.
      TermPtr ml = map_list_at(tau1, tau2);
      TermPtr lhs_term = term::app(term::app(ml, g), term::app(f1, t));
      TermPtr rhs_term = term::app(f2, term::app(term::app(ml, g), t));
      rep.lhs = eval_cost(CostEnv{}, lhs_term);
      rep.rhs = eval_cost(CostEnv{}, rhs_term);
      rep.delta = rep.rhs.cost - rep.lhs.cost;
      rep.value_equal = equal_ground(*rep.lhs.val, *rep.rhs.val);

      Costed t_sem = eval_cost(CostEnv{}, t);
      Costed f_sem = eval_cost(CostEnv{}, f);
      const CList& elems = as_clist(t_sem.val);
      const std::size_t n = elems.elems.size();

      // Recover the selected indices by running f on the index list 1..n.
      std::vector<CostValPtr> index_list;
      index_list.reserve(n);
      for (std::size_t i = 1; i <= n; ++i)
        index_list.push_back(cv::nat(static_cast<std::int64_t>(i)));
      Costed picked = capp(f_sem, Costed{cv::list(std::move(index_list)), 0});
      const CList& picked_list = as_clist(picked.val);
      std::vector<std::size_t> indices;
      bool indices_ok = true;
      for (const auto& e : picked_list.elems) {
        std::int64_t i = as_cnat(e);
        if (i < 1 || static_cast<std::size_t>(i) > n) {
          indices_ok = false;
          break;
        }
        indices.push_back(static_cast<std::size_t>(i));
      }
      if (!indices_ok) {
        witness << "index run escaped 1.." << n;
        rep.verdict = Verdict::Violated;
        break;
      }

      std::vector<CostValPtr> sel_elems;
      sel_elems.reserve(indices.size());
      for (std::size_t i : indices) sel_elems.push_back(elems.elems[i - 1]);
      Costed selected{cv::list(std::move(sel_elems)), 0};

      Costed ml_g = capp(map_list_costed(), g_sem);
      std::int64_t full_cost = app_cost(ml_g, t_sem);
      std::int64_t sel_cost = app_cost(ml_g, selected);
      bool equation_ok = rep.lhs.cost + full_cost == rep.rhs.cost + sel_cost;
      bool selection_ok =
          equal_ground(*selected.val, *capp(f_sem, t_sem).val);

      witness << "indices [";
      for (std::size_t i = 0; i < indices.size(); ++i)
        witness << (i ? "," : "") << indices[i];
      witness << "]; appCost(mapList g, t) = " << describe(full_cost)
              << ", appCost(mapList g, selected) = " << describe(sel_cost);
      if (!equation_ok) witness << "; cost equation failed";
      if (!selection_ok) witness << "; selected values differ from f t";
      rep.verdict = rep.value_equal && equation_ok && selection_ok ? Verdict::Holds
                                                                   : Verdict::Violated;
      break;
    }
  }

  rep.delta_witness = witness.str();
  return rep;
}

TheoremReport negative_control(const TermPtr& f, const TermPtr& g, const TermPtr& t1,
                               const TermPtr& t2) {
  TyPtr nat3 = ty::arrow(ty::nat(), ty::arrow(ty::nat(), ty::nat()));
  check_type(Ctx{}, f, nat3);
  check_type(Ctx{}, g, ty::arrow(ty::nat(), ty::nat()));
  check_type(Ctx{}, t1, ty::nat());
  check_type(Ctx{}, t2, ty::nat());

  TheoremReport rep;
  rep.shape = Shape::Proj;
  TermPtr lhs_term = term::app(g, term::app(term::app(f, t1), t2));
  TermPtr rhs_term = term::app(term::app(f, term::app(g, t1)), term::app(g, t2));
  rep.lhs = eval_cost(CostEnv{}, lhs_term);
  rep.rhs = eval_cost(CostEnv{}, rhs_term);
  rep.delta = rep.rhs.cost - rep.lhs.cost;
  rep.value_equal = equal_ground(*rep.lhs.val, *rep.rhs.val);

  Costed g_sem = eval_cost(CostEnv{}, g);
  std::int64_t c1 = app_cost(g_sem, eval_cost(CostEnv{}, t1));
  std::int64_t c2 = app_cost(g_sem, eval_cost(CostEnv{}, t2));
  bool delta_ok = rep.delta == c1 || rep.delta == c2;
  bool order_ok = rep.value_equal && rep.lhs.cost <= rep.rhs.cost;

  std::ostringstream witness;
  witness << "monomorphic f: no polymorphic guarantee applies; measured delta "
          << rep.delta << " against {" << c1 << ", " << c2 << "}";
  rep.delta_witness = witness.str();
  rep.verdict =
      rep.value_equal && delta_ok && order_ok ? Verdict::Holds : Verdict::Violated;
  return rep;
}

json fusion_json(const FusionReport& r) {
  return json{{"valueEqual", r.value_equal},
              {"lhsCost", r.lhs_cost},
              {"rhsCost", r.rhs_cost},
              {"improvementHolds", r.improvement_holds},
              {"intermediateLength", r.intermediate_length}};
}

FusionReport shortcut_check(const TermPtr& g, const TermPtr& k, const TermPtr& z,
                            const TyPtr& tau, const TyPtr& tau_prime) {
  check_closed(tau, "tau");
  check_closed(tau_prime, "tau'");

  std::string alpha;
  the_single_ty_var(g, alpha);
  Ctx gctx;
  gctx.type_vars = {alpha};
  TyPtr a = ty::var(alpha);
  check_type(gctx, g, ty::arrow(ty::arrow(tau, ty::arrow(a, a)), ty::arrow(a, a)));
  check_type(Ctx{}, k, ty::arrow(tau, ty::arrow(tau_prime, tau_prime)));
  check_type(Ctx{}, z, tau_prime);

  // \x:tau. \xs:[tau]. x : xs
  TermPtr cons_builder = term::lam(
      "x", tau,
      term::lam("xs", ty::list(tau), term::cons(term::var("x"), term::var("xs"))));

  TermPtr producer = term::app(
      term::app(subst_type_in_term(g, alpha, ty::list(tau)), cons_builder),
      term::nil(tau));
  TermPtr lhs_term = term::lfold(k, z, producer);
  TermPtr rhs_term = term::app(term::app(subst_type_in_term(g, alpha, tau_prime), k), z);
  check_type(Ctx{}, lhs_term, tau_prime);
  check_type(Ctx{}, rhs_term, tau_prime);

  Costed lhs = eval_cost(CostEnv{}, lhs_term);
  Costed rhs = eval_cost(CostEnv{}, rhs_term);
  Costed intermediate = eval_cost(CostEnv{}, producer);

  FusionReport rep;
  rep.value_equal = equal_ground(*lhs.val, *rhs.val);
  rep.lhs_cost = lhs.cost;
  rep.rhs_cost = rhs.cost;
  rep.improvement_holds = sqsubseteq(rhs, lhs);
  rep.intermediate_length = as_clist(intermediate.val).elems.size();
  return rep;
}

}  // namespace costlr
