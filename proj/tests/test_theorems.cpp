#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "costlr/parser.hpp"
#include "costlr/prelude.hpp"
#include "costlr/pretty.hpp"
#include "costlr/theorems.hpp"
#include "costlr/typecheck.hpp"

using namespace costlr;

namespace {

TermPtr tp(const std::string& src) { return parse_term(src); }

TheoremReport run_shape(Shape shape, const std::string& f, const std::string& g,
                        const std::vector<std::string>& args,
                        const std::string& tau1 = "Nat",
                        const std::string& tau2 = "Nat") {
  std::vector<TermPtr> arg_terms;
  for (const auto& a : args) arg_terms.push_back(tp(a));
  return check_free_theorem(shape, tp(f), tp(g), arg_terms, parse_type(tau1),
                            parse_type(tau2));
}

}  // namespace

TEST_CASE("improvement order compares value then cost") {
  CHECK(sqsubseteq({cv::nat(2), 3}, {cv::nat(2), 4}));
  CHECK(sqsubseteq({cv::nat(2), 3}, {cv::nat(2), 3}));
  CHECK_FALSE(sqsubseteq({cv::nat(2), 4}, {cv::nat(2), 3}));
  CHECK_FALSE(sqsubseteq({cv::nat(2), 3}, {cv::nat(5), 9}));
}

TEST_CASE("bundled library terms typecheck at their stated types") {
  Ctx ctx;
  ctx.type_vars = {"a", "b", "c", "d"};
  CHECK(pretty(typecheck(ctx, std_lib().map_list)) == "(a -> b) -> [a] -> [b]");
  CHECK(pretty(typecheck(ctx, std_lib().map_pair)) ==
        "(a -> c, b -> d) -> (a, b) -> (c, d)");
  CHECK(pretty(typecheck(ctx, std_lib().length)) == "[a] -> Nat");
}

TEST_CASE("projection instance matches the worked numbers") {
  TheoremReport r =
      run_shape(Shape::Proj, "\\x:a.\\y:a. x", "\\n:Nat. n+n", {"1", "2"});
  CHECK(r.verdict == Verdict::Holds);
  CHECK(r.value_equal);
  CHECK(as_cnat(r.lhs.val) == 2);
  CHECK(r.lhs.cost == 3);
  CHECK(as_cnat(r.rhs.val) == 2);
  CHECK(r.rhs.cost == 4);
  CHECK(r.delta == 1);
}

TEST_CASE("projection holds for either projection and costly g") {
  for (const char* f : {"\\x:a.\\y:a. x", "\\x:a.\\y:a. y",
                        "\\x:a.\\y:a. (\\z:a. z) x"}) {
    for (const char* g : {"\\n:Nat. n+n", "\\n:Nat. ifold(\\m:Nat. m+1, n, n)"}) {
      TheoremReport r = run_shape(Shape::Proj, f, g, {"2", "5"});
      CAPTURE(f);
      CAPTURE(g);
      CHECK(r.verdict == Verdict::Holds);
    }
  }
}

TEST_CASE("constant-result instance saves exactly one application of g") {
  TheoremReport r = run_shape(Shape::ConstNat, "\\x:a. 7", "\\n:Nat. n+n", {"3"});
  CHECK(r.verdict == Verdict::Holds);
  CHECK(r.value_equal);
  CHECK(as_cnat(r.lhs.val) == 7);
  CHECK(as_cnat(r.rhs.val) == 7);
  CHECK(r.delta == 1);

  TheoremReport slow = run_shape(Shape::ConstNat, "\\x:a. 1+1",
                                 "\\n:Nat. ifold(\\m:Nat. m+1, 0, n)", {"4"});
  CHECK(slow.verdict == Verdict::Holds);
  CHECK(slow.delta == 5);  // one wrapper step plus four iterations
}

TEST_CASE("duplication pays for the pair traversal") {
  TheoremReport r = run_shape(Shape::Dup, "\\x:a. (x, x)", "\\n:Nat. n+n", {"3"});
  CHECK(r.verdict == Verdict::Holds);
  CHECK(r.value_equal);
  CHECK(sqsubseteq(r.lhs, r.rhs));
  // mapPair costs 2 of its own plus two g applications against one saved g
  CHECK(r.delta == 3);
}

TEST_CASE("pair consumption is cheaper after projection") {
  for (const char* f : {"\\p:(a,a). pcase p {(x, y) -> x}",
                        "\\p:(a,a). pcase p {(x, y) -> y}",
                        "\\p:(a,a). pcase p {(x, y) -> (\\z:a. z) x}"}) {
    TheoremReport r = run_shape(Shape::PairConsume, f, "\\n:Nat. n+n", {"1", "5"});
    CAPTURE(f);
    CHECK(r.verdict == Verdict::Holds);
    CHECK(sqsubseteq(r.lhs, r.rhs));
  }
}

TEST_CASE("list length ignores mapped work") {
  TheoremReport r = run_shape(Shape::ListLen, "\\xs:[a]. lfold(\\x:a. \\y:Nat. 1 + y, 0, xs)",
                              "\\n:Nat. n+n", {"1:2:3:nil[Nat]"});
  CHECK(r.verdict == Verdict::Holds);
  CHECK(as_cnat(r.lhs.val) == 3);
  CHECK(r.value_equal);
  CHECK(sqsubseteq(r.lhs, r.rhs));
}

TEST_CASE("list-to-list recovers the selection by the index run") {
  TheoremReport rev = run_shape(
      Shape::ListToList,
      "\\xs:[a]. lfold(\\x:a. \\r:[a]. lfold(\\h:a. \\t:[a]. h:t, x:nil[a], r),"
      " nil[a], xs)",
      "\\n:Nat. n+n", {"1:2:3:nil[Nat]"});
  CHECK(rev.verdict == Verdict::Holds);
  CHECK(rev.value_equal);
  CHECK(rev.delta_witness.find("[3,2,1]") != std::string::npos);

  TheoremReport dup = run_shape(Shape::ListToList,
                                "\\xs:[a]. lfold(\\x:a. \\r:[a]. x:x:r, nil[a], xs)",
                                "\\n:Nat. n+1", {"4:7:nil[Nat]"});
  CHECK(dup.verdict == Verdict::Holds);
  CHECK(dup.delta_witness.find("[1,1,2,2]") != std::string::npos);

  TheoremReport tail = run_shape(Shape::ListToList,
                                 "\\xs:[a]. lcase xs {nil -> nil[a]; h:t -> t}",
                                 "\\n:Nat. n+n", {"5:6:nil[Nat]"});
  CHECK(tail.verdict == Verdict::Holds);
  CHECK(tail.delta_witness.find("[2]") != std::string::npos);
}

TEST_CASE("shapes work across different source and target types") {
  TheoremReport r = run_shape(Shape::Proj, "\\x:a.\\y:a. x", "\\n:Nat. n : nil[Nat]",
                              {"1", "2"}, "Nat", "[Nat]");
  CHECK(r.verdict == Verdict::Holds);
  TheoremReport len = run_shape(Shape::ListLen, "\\xs:[a]. lfold(\\x:a. \\y:Nat. 1+y, 0, xs)",
                                "\\n:Nat. (n, n)", {"1:nil[Nat]"}, "Nat", "(Nat, Nat)");
  CHECK(len.verdict == Verdict::Holds);
}

TEST_CASE("shape mismatches are type errors") {
  CHECK_THROWS_AS(run_shape(Shape::Proj, "\\x:a. x", "\\n:Nat. n", {"1", "2"}),
                  TypeError);
  CHECK_THROWS_AS(run_shape(Shape::ConstNat, "\\x:Nat. 7", "\\n:Nat. n", {"1"}),
                  TypeError);
  CHECK_THROWS_AS(run_shape(Shape::ConstNat, "\\x:a. 7", "\\n:Nat. (n, n)", {"1"}),
                  TypeError);
  CHECK_THROWS_AS(run_shape(Shape::ConstNat, "\\x:a. 7", "\\n:Nat. n", {"1", "2"}),
                  TypeError);
  // more than one type variable is as unusable as none
  CHECK_THROWS_AS(run_shape(Shape::ConstNat, "\\x:a. (\\y:b. 7) x", "\\n:Nat. n",
                            {"1"}),
                  TypeError);
}

TEST_CASE("list-to-list balances value-dependent costs across multiplicities") {
  // duplicating consumer + per-value application costs: the mapping over the
  // selection is dearer than over the input, so the gap goes negative while
  // the two-sided equation stays exact
  TheoremReport r = run_shape(Shape::ListToList,
                              "\\xs:[a]. lfold(\\x:a. \\r:[a]. x:x:r, nil[a], xs)",
                              "\\n:Nat. ifold(\\m:Nat. m+1, 0, n)", {"3:1:4:nil[Nat]"});
  CHECK(r.verdict == Verdict::Holds);
  CHECK(r.delta == -17);
  CHECK(r.delta_witness.find("[1,1,2,2,3,3]") != std::string::npos);
}

TEST_CASE("list-to-list degenerates gracefully on the empty list") {
  TheoremReport r = run_shape(Shape::ListToList, "\\xs:[a]. xs", "\\n:Nat. n+n",
                              {"nil[Nat]"});
  CHECK(r.verdict == Verdict::Holds);
  CHECK(r.value_equal);
  CHECK(r.delta_witness.find("indices []") != std::string::npos);
}

TEST_CASE("the monomorphic countdown breaks the projection obligation") {
  TermPtr f = tp("\\x:Nat.\\y:Nat. ifold(\\z:Nat. z, y, x)");
  TermPtr g = tp("\\n:Nat. n+n");
  TheoremReport r = negative_control(f, g, tp("4"), tp("0"));
  CHECK(r.verdict == Verdict::Violated);
  CHECK(r.value_equal);  // values still agree; only the costs escape the bound
  CHECK(r.delta == 5);
  CHECK(r.delta_witness.find("monomorphic") != std::string::npos);

  // zero iterations can satisfy the numbers by coincidence; the flag stays
  TheoremReport zero = negative_control(f, g, tp("0"), tp("0"));
  CHECK(zero.delta_witness.find("monomorphic") != std::string::npos);

  // a genuinely polymorphic projection under the same driver is fine
  TheoremReport sane = run_shape(Shape::Proj, "\\x:a.\\y:a. y", "\\n:Nat. n+n",
                                 {"4", "0"});
  CHECK(sane.verdict == Verdict::Holds);
}

TEST_CASE("fusion: a producer that only builds output fuses profitably") {
  FusionReport r = shortcut_check(tp("\\k:Nat->a->a. \\z:a. k 1 (k 2 z)"),
                                  tp("\\x:Nat. \\y:Nat. x + y"), tp("0"), ty::nat(),
                                  ty::nat());
  CHECK(r.value_equal);
  CHECK(r.improvement_holds);
  CHECK(r.intermediate_length == 2);
  CHECK(r.lhs_cost == 10);
  CHECK(r.rhs_cost == 6);
}

TEST_CASE("fusion: discarded expensive work makes the fused form worse") {
  std::int64_t previous_gap = 0;
  for (std::int64_t n : {10, 100, 1000}) {
    FusionReport r = shortcut_check(
        tp("\\k:Nat->a->a. \\z:a. (\\x:a. z) (k 5 z)"),
        tp("\\x:Nat. \\y:Nat. ifold(\\w:Nat. w, y, " + std::to_string(n) + ")"),
        tp("0"), ty::nat(), ty::nat());
    CHECK(r.value_equal);
    CHECK_FALSE(r.improvement_holds);
    CHECK(r.intermediate_length == 0);
    CHECK(r.lhs_cost == 5);
    std::int64_t gap = r.rhs_cost - r.lhs_cost;
    CHECK(gap > previous_gap);
    previous_gap = gap;
  }
}

TEST_CASE("fusion: the empty producer costs the same on both sides") {
  FusionReport r = shortcut_check(tp("\\k:Nat->a->a. \\z:a. z"),
                                  tp("\\x:Nat. \\y:Nat. x + y"), tp("0"), ty::nat(),
                                  ty::nat());
  CHECK(r.value_equal);
  CHECK(r.improvement_holds);
  CHECK(r.intermediate_length == 0);
  CHECK(r.lhs_cost == r.rhs_cost);
}

TEST_CASE("fusion signature mismatches are type errors") {
  CHECK_THROWS_AS(shortcut_check(tp("\\k:Nat->a->a. \\z:a. z"), tp("\\x:Nat. x"),
                                 tp("0"), ty::nat(), ty::nat()),
                  TypeError);
  CHECK_THROWS_AS(shortcut_check(tp("\\z:a. z"), tp("\\x:Nat. \\y:Nat. y"), tp("0"),
                                 ty::nat(), ty::nat()),
                  TypeError);
}

TEST_CASE("reports serialize with the documented keys") {
  TheoremReport r =
      run_shape(Shape::Proj, "\\x:a.\\y:a. x", "\\n:Nat. n+n", {"1", "2"});
  json j = report_json(r);
  CHECK(j["shape"] == "proj");
  CHECK(j["lhs"]["value"] == 2);
  CHECK(j["lhs"]["cost"] == 3);
  CHECK(j["rhs"]["cost"] == 4);
  CHECK(j["delta"] == 1);
  CHECK(j["verdict"] == "holds");
  CHECK(j["valueEqual"] == true);
}
