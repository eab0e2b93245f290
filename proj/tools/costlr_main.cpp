#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "costlr/corpus.hpp"
#include "costlr/eval.hpp"
#include "costlr/paramtest.hpp"
#include "costlr/parser.hpp"
#include "costlr/pretty.hpp"
#include "costlr/theorems.hpp"
#include "costlr/typecheck.hpp"

namespace {

using namespace costlr;

// Exit codes: 0 success/holds, 1 type error, 2 parse error, 3 theorem violated
// or relatedness failure, 4 usage error.
constexpr int kOk = 0;
constexpr int kTypeError = 1;
constexpr int kParseError = 2;
constexpr int kViolated = 3;
constexpr int kUsage = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

TermPtr load_term(const std::string& path) { return parse_term(read_file(path)); }

int cmd_typecheck(const std::string& file, const std::string& tyvars) {
  TermPtr t = load_term(file);
  Ctx ctx;
  std::stringstream ss(tyvars);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) ctx.type_vars.insert(item);
  std::cout << pretty(typecheck(ctx, t)) << "\n";
  return kOk;
}

int cmd_eval(const std::string& file, bool std_mode) {
  TermPtr t = load_term(file);
  Ctx ctx;
  ctx.type_vars = free_ty_vars(*t);  // evaluation never inspects annotations
  typecheck(ctx, t);
  if (std_mode) {
    std::cout << value_to_json(eval_std(Env{}, t)).dump() << "\n";
  } else {
    std::cout << costed_to_json(eval_cost(CostEnv{}, t)).dump() << "\n";
  }
  return kOk;
}

int cmd_free_theorem(const std::string& shape_name_arg, const std::string& f_file,
                     const std::string& g_file, const std::vector<std::string>& arg_files,
                     const std::string& tau1_text, const std::string& tau2_text) {
  auto shape = shape_from_name(shape_name_arg);
  if (!shape) {
    std::cerr << "unknown shape '" << shape_name_arg
              << "' (expected const-nat, proj, dup, pair-consume, list-len,"
                 " list-to-list)\n";
    return kUsage;
  }
  TermPtr f = load_term(f_file);
  TermPtr g = load_term(g_file);
  std::vector<TermPtr> args;
  for (const auto& file : arg_files) args.push_back(load_term(file));
  TyPtr tau1 = parse_type(tau1_text);
  TyPtr tau2 = parse_type(tau2_text);

  TheoremReport report = check_free_theorem(*shape, f, g, args, tau1, tau2);
  std::cout << report_json(report).dump() << "\n";
  return report.verdict == Verdict::Holds ? kOk : kViolated;
}

int cmd_param_test(std::uint64_t seed, std::size_t iters, bool mutate) {
  if (const char* env_seed = std::getenv("COSTLR_SEED")) seed = std::stoull(env_seed);
  ParamTestConfig config;
  config.seed = seed;
  config.iterations = iters;
  if (mutate) config.lhs_model.beta = 2;  // deliberate fault to show sensitivity

  ParamTestResult result = run_param_test(config);
  for (const auto& failure : result.failures)
    std::cerr << "iteration " << failure.iteration << " [" << failure.term
              << "]: " << failure.detail << "\n";
  std::cout << "param-test: " << result.iterations << " iterations, "
            << result.failures.size() << " failure(s) (seed " << seed << ")\n";
  return result.ok() ? kOk : kViolated;
}

int cmd_fusion_demo(std::int64_t scale) {
  // Producer that uses its arguments only to build output per element.
  TermPtr good_g = parse_term("\\k:Nat->a->a. \\z:a. k 1 (k 2 z)");
  TermPtr cheap_k = parse_term("\\x:Nat. \\y:Nat. x + y");
  // Producer that applies its argument and then discards the result; pairing it
  // with a consumer whose cost scales with `scale` makes the fused form the
  // expensive one.
  TermPtr bad_g = parse_term("\\k:Nat->a->a. \\z:a. (\\x:a. z) (k 5 z)");
  TermPtr slow_k = parse_term("\\x:Nat. \\y:Nat. ifold(\\w:Nat. w, y, " +
                              std::to_string(scale) + ")");
  TermPtr zero = parse_term("0");
  TyPtr nat = ty::nat();

  FusionReport good = shortcut_check(good_g, cheap_k, zero, nat, nat);
  FusionReport bad = shortcut_check(bad_g, slow_k, zero, nat, nat);

  json out{{"wellBehaved", fusion_json(good)},
           {"counterexample", fusion_json(bad)},
           {"counterexampleScale", scale}};
  std::cout << out.dump(2) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for cost-aware free theorems over a small"
               " call-by-value calculus"};
  app.require_subcommand(1);

  std::string file, tyvars;
  auto* tc = app.add_subcommand("typecheck", "print the type of a term file");
  tc->add_option("file", file, "term file")->required();
  tc->add_option("--tyvars", tyvars, "comma-separated type variables in scope");

  std::string eval_file;
  bool eval_cost_mode = false, eval_std_mode = false, eval_json = false;
  auto* ev = app.add_subcommand("eval", "evaluate a closed term file");
  ev->add_option("file", eval_file, "term file")->required();
  ev->add_flag("--cost", eval_cost_mode, "costed evaluation (default)");
  ev->add_flag("--std", eval_std_mode, "standard evaluation");
  ev->add_flag("--json", eval_json, "JSON output (always on)");

  std::string shape, f_file, g_file, tau1, tau2;
  std::vector<std::string> arg_files;
  bool ft_json = false;
  auto* ft = app.add_subcommand("free-theorem", "check a statement instance");
  ft->add_option("--shape", shape, "const-nat|proj|dup|pair-consume|list-len|list-to-list")
      ->required();
  ft->add_option("--f", f_file, "polymorphic function term file")->required();
  ft->add_option("--g", g_file, "concrete function term file")->required();
  ft->add_option("--args", arg_files, "argument term files")->required();
  ft->add_option("--tau1", tau1, "source type")->required();
  ft->add_option("--tau2", tau2, "target type")->required();
  ft->add_flag("--json", ft_json, "JSON output (always on)");

  std::uint64_t seed = 0;
  std::size_t iters = 1000;
  bool mutate = false;
  auto* pt = app.add_subcommand("param-test", "randomized relatedness checks");
  pt->add_option("--seed", seed, "random seed (COSTLR_SEED overrides)");
  pt->add_option("--iters", iters, "number of iterations");
  pt->add_flag("--mutate", mutate,
               "run with a deliberately broken cost model on one side; expected"
               " to fail");

  std::int64_t scale = 10;
  auto* fd = app.add_subcommand("fusion-demo", "fold/producer fusion cost report");
  fd->add_option("--counterexample", scale, "consumer iteration count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (tc->parsed()) return cmd_typecheck(file, tyvars);
    if (ev->parsed()) {
      if (eval_cost_mode && eval_std_mode) {
        std::cerr << "--cost and --std are mutually exclusive\n";
        return kUsage;
      }
      return cmd_eval(eval_file, eval_std_mode);
    }
    if (ft->parsed())
      return cmd_free_theorem(shape, f_file, g_file, arg_files, tau1, tau2);
    if (pt->parsed()) return cmd_param_test(seed, iters, mutate);
    if (fd->parsed()) return cmd_fusion_demo(scale);
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kParseError;
  } catch (const TypeError& e) {
    std::cerr << e.what() << "\n";
    return kTypeError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
