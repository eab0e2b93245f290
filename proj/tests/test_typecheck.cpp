#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "costlr/corpus.hpp"
#include "costlr/eval.hpp"
#include "costlr/parser.hpp"
#include "costlr/prelude.hpp"
#include "costlr/pretty.hpp"
#include "costlr/typecheck.hpp"

using namespace costlr;

namespace {

Ctx with_vars(std::initializer_list<const char*> vars) {
  Ctx ctx;
  for (const char* v : vars) ctx.type_vars.insert(v);
  return ctx;
}

}  // namespace

TEST_CASE("mapList has its polymorphic type") {
  TyPtr t = typecheck(with_vars({"a", "b"}), map_list_term());
  CHECK(pretty(t) == "(a -> b) -> [a] -> [b]");
}

TEST_CASE("mapPair has its polymorphic type") {
  TyPtr t = typecheck(with_vars({"a", "b", "c", "d"}), map_pair_term());
  CHECK(pretty(t) == "(a -> c, b -> d) -> (a, b) -> (c, d)");
}

TEST_CASE("length has its polymorphic type") {
  TyPtr t = typecheck(with_vars({"a"}), length_term());
  CHECK(pretty(t) == "[a] -> Nat");
}

TEST_CASE("simple redex checks at Nat") {
  CHECK(pretty(typecheck(Ctx{}, parse_term("(\\x:Nat. x) 5"))) == "Nat");
}

TEST_CASE("list fold of naturals checks at Nat") {
  CHECK(pretty(typecheck(
            Ctx{}, parse_term("lfold(\\x:Nat.\\y:Nat. 1+y, 0, 1:2:nil[Nat])"))) ==
        "Nat");
}

TEST_CASE("classic failures are reported at the right subterm") {
  CHECK_THROWS_AS(typecheck(Ctx{}, parse_term("x")), TypeError);
  CHECK_THROWS_AS(typecheck(Ctx{}, parse_term("1 2")), TypeError);
  CHECK_THROWS_AS(typecheck(Ctx{}, parse_term("1 + nil[Nat]")), TypeError);
  CHECK_THROWS_AS(typecheck(Ctx{}, parse_term("ncase 0 {0 -> 1; n -> nil[Nat]}")),
                  TypeError);
  CHECK_THROWS_AS(typecheck(Ctx{}, parse_term("1 : (1,2) : nil[(Nat,Nat)]")),
                  TypeError);
  CHECK_THROWS_AS(typecheck(Ctx{}, parse_term("lcase 5 {nil -> 0; h:t -> 1}")),
                  TypeError);
  CHECK_THROWS_AS(typecheck(Ctx{}, parse_term("pcase 5 {(a, b) -> a}")), TypeError);
  CHECK_THROWS_AS(typecheck(Ctx{}, parse_term("ifold(\\x:Nat. (x, x), 0, 2)")),
                  TypeError);
  CHECK_THROWS_AS(
      typecheck(Ctx{}, parse_term("lfold(\\x:Nat.\\y:Nat. y, 0, (1,2):nil[(Nat,Nat)])")),
      TypeError);
  CHECK_THROWS_AS(typecheck(Ctx{}, parse_term("(\\f:Nat->Nat. f nil[Nat]) (\\x:Nat. x)")),
                  TypeError);
}

TEST_CASE("annotations must use declared type variables") {
  CHECK_THROWS_AS(typecheck(Ctx{}, parse_term("\\x:a. x")), TypeError);
  CHECK_THROWS_AS(typecheck(with_vars({"b"}), parse_term("nil[a]")), TypeError);
  CHECK(pretty(typecheck(with_vars({"a"}), parse_term("\\x:a. x"))) == "a -> a");
}

TEST_CASE("context bindings must be well scoped") {
  Ctx ctx;
  ctx.term_vars["x"] = ty::var("a");
  CHECK_THROWS_AS(typecheck(ctx, parse_term("x")), TypeError);
  ctx.type_vars.insert("a");
  CHECK(pretty(typecheck(ctx, parse_term("x"))) == "a");
}

TEST_CASE("shadowing picks the innermost binding") {
  CHECK(pretty(typecheck(Ctx{}, parse_term("\\x:Nat. \\x:[Nat]. x"))) ==
        "Nat -> [Nat] -> [Nat]");
}

TEST_CASE("positive natural branch binds the scrutinee at Nat") {
  CHECK(pretty(typecheck(Ctx{}, parse_term("ncase 3 {0 -> 0; n -> n + n}"))) == "Nat");
}

TEST_CASE("checking is deterministic") {
  TermPtr t = parse_term("\\f:a->a. \\x:a. f (f x)");
  Ctx ctx = with_vars({"a"});
  CHECK(equal(typecheck(ctx, t), typecheck(ctx, t)));
}

TEST_CASE("error messages are stable") {
  try {
    typecheck(Ctx{}, parse_term("1 + nil[Nat]"));
    FAIL("expected a type error");
  } catch (const TypeError& e) {
    CHECK(std::string(e.what()) == "type error at 4..12: expected Nat, found [Nat]");
    CHECK(e.expected() == "Nat");
    CHECK(e.found() == "[Nat]");
  }
}

TEST_CASE("substitution preserves typing for the polymorphic corpus") {
  const std::vector<TyPtr> closed = {ty::nat(), ty::list(ty::nat()),
                                     ty::pair(ty::nat(), ty::nat())};
  for (const auto& e : poly_corpus()) {
    TermPtr t = corpus_term(e);
    Ctx full;
    full.type_vars.insert(e.ty_vars.begin(), e.ty_vars.end());
    TyPtr tau = typecheck(full, t);
    for (const auto& inst : closed) {
      const std::string& alpha = e.ty_vars.front();
      Ctx rest;
      for (const auto& v : e.ty_vars)
        if (v != alpha) rest.type_vars.insert(v);
      TyPtr expected = subst_ty(tau, alpha, inst);
      CAPTURE(e.name);
      CHECK(equal(typecheck(rest, subst_type_in_term(t, alpha, inst)), expected));
    }
  }
}

TEST_CASE("well-typed closed terms evaluate without shape faults") {
  for (const auto& e : ground_corpus()) {
    TermPtr t = corpus_term(e);
    CAPTURE(e.name);
    CHECK_NOTHROW(typecheck(Ctx{}, t));
    CHECK_NOTHROW(eval_std(Env{}, t));
    CHECK_NOTHROW(eval_cost(CostEnv{}, t));
  }
  for (const auto& e : poly_corpus()) {
    TermPtr t = corpus_term(e);
    for (const auto& v : e.ty_vars) t = subst_type_in_term(t, v, ty::nat());
    CAPTURE(e.name);
    CHECK_NOTHROW(typecheck(Ctx{}, t));
    CHECK_NOTHROW(eval_std(Env{}, t));
    CHECK_NOTHROW(eval_cost(CostEnv{}, t));
  }
}
