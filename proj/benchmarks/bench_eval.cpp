#include <benchmark/benchmark.h>

#include "costlr/eval.hpp"
#include "costlr/parser.hpp"
#include "costlr/prelude.hpp"
#include "costlr/relations.hpp"

namespace {

using namespace costlr;

void BM_EvalCostIfold(benchmark::State& state) {
  TermPtr t = parse_term("ifold(\\x:Nat. x + 1, 0, " +
                         std::to_string(state.range(0)) + ")");
  for (auto _ : state) {
    Costed c = eval_cost(CostEnv{}, t);
    benchmark::DoNotOptimize(c.cost);
  }
}
BENCHMARK(BM_EvalCostIfold)->Arg(64)->Arg(1024)->Arg(16384);

void BM_MapListEval(benchmark::State& state) {
  std::string list = "nil[Nat]";
  for (std::int64_t i = 0; i < state.range(0); ++i) list = "1 : " + list;
  TermPtr t = parse_term("(\\g:Nat->Nat. \\ys:[Nat]. lfold(\\x:Nat. \\xs:[Nat]."
                         " (g x) : xs, nil[Nat], ys)) (\\n:Nat. n + n) (" +
                         list + ")");
  for (auto _ : state) {
    Costed c = eval_cost(CostEnv{}, t);
    benchmark::DoNotOptimize(c.cost);
  }
}
BENCHMARK(BM_MapListEval)->Arg(16)->Arg(128);

void BM_WitnessList(benchmark::State& state) {
  Costed doubling = eval_cost(CostEnv{}, parse_term("\\n:Nat. n + n"));
  std::vector<Costed> points;
  for (std::int64_t i = 0; i < 8; ++i) points.push_back(Costed{cv::nat(i), 0});
  GraphRel rel = graph_rel(doubling, points);

  std::vector<std::size_t> indices;
  for (std::int64_t i = 0; i < state.range(0); ++i)
    indices.push_back(static_cast<std::size_t>(i % 8) + 1);
  Costed xs = select_points(rel, indices);
  Costed mlg = capp(map_list_costed(), rel.fn());
  Costed ys = capp(mlg, xs);
  xs = add_cost(app_cost(mlg, xs), xs);

  for (auto _ : state) {
    auto w = witness_list(rel, xs, ys);
    benchmark::DoNotOptimize(w.has_value());
  }
}
BENCHMARK(BM_WitnessList)->Arg(8)->Arg(32);

void BM_MemberLiftedArrow(benchmark::State& state) {
  Costed doubling = eval_cost(CostEnv{}, parse_term("\\n:Nat. n + n"));
  std::vector<Costed> points{{cv::nat(1), 0}, {cv::nat(2), 0}, {cv::nat(3), 0}};
  RelEnv rho{{"a", graph_rel(doubling, points).rel()}};
  TyPtr ty = parse_type("a -> a -> a");
  Costed f = eval_cost(CostEnv{}, parse_term("\\x:a. \\y:a. x"));
  for (auto _ : state) {
    bool ok = member_lifted(*ty, rho, f, f);
    benchmark::DoNotOptimize(ok);
  }
}
BENCHMARK(BM_MemberLiftedArrow);

}  // namespace

BENCHMARK_MAIN();
