#include "costlr/paramtest.hpp"

#include <random>

#include "costlr/corpus.hpp"
#include "costlr/parser.hpp"

namespace costlr {

namespace {

// Probe-point carriers and the calculus functions used to build graph
// relations over them. Heterogeneous entries (list to length) are deliberate:
// relations may connect different carriers.
enum class Carrier { Nat, ListNat, PairNat };

struct GenFn {
  Carrier carrier;
  const char* source;
};

const std::vector<GenFn>& generator_pool() {
  static const std::vector<GenFn> pool = {
      {Carrier::Nat, "\\n:Nat. n"},
      {Carrier::Nat, "\\n:Nat. n + n"},
      {Carrier::Nat, "\\n:Nat. n + 1"},
      {Carrier::Nat, "\\n:Nat. 0"},
      {Carrier::Nat, "\\n:Nat. ifold(\\m:Nat. m + 1, 0, n)"},
      {Carrier::Nat, "\\n:Nat. n : nil[Nat]"},
      {Carrier::ListNat, "\\xs:[Nat]. xs"},
      {Carrier::ListNat, "\\xs:[Nat]. 0 : xs"},
      {Carrier::ListNat, "\\xs:[Nat]. lfold(\\x:Nat. \\y:Nat. 1 + y, 0, xs)"},
      {Carrier::ListNat, "\\xs:[Nat]. lfold(\\x:Nat. \\y:[Nat]. x : y, nil[Nat], xs)"},
      {Carrier::PairNat, "\\p:(Nat,Nat). pcase p {(x, y) -> (y, x)}"},
      {Carrier::PairNat, "\\p:(Nat,Nat). pcase p {(x, y) -> x + y}"},
      {Carrier::PairNat, "\\p:(Nat,Nat). p"},
  };
  return pool;
}

struct CachedPoly {
  const PolyEntry* entry;
  TermPtr term;
  Ctx ctx;
};

const std::vector<CachedPoly>& cached_poly() {
  static const std::vector<CachedPoly> cache = [] {
    std::vector<CachedPoly> out;
    for (const PolyEntry& e : poly_corpus()) {
      CachedPoly c{&e, corpus_term(e), Ctx{}};
      c.ctx.type_vars.insert(e.ty_vars.begin(), e.ty_vars.end());
      out.push_back(std::move(c));
    }
    return out;
  }();
  return cache;
}

struct CachedGen {
  Carrier carrier;
  TermPtr term;
};

const std::vector<CachedGen>& cached_generators() {
  static const std::vector<CachedGen> cache = [] {
    std::vector<CachedGen> out;
    for (const GenFn& g : generator_pool())
      out.push_back(CachedGen{g.carrier, parse_term(g.source)});
    return out;
  }();
  return cache;
}

CostValPtr random_point_value(std::mt19937_64& rng, Carrier carrier) {
  std::uniform_int_distribution<std::int64_t> nat(0, 4);
  switch (carrier) {
    case Carrier::Nat:
      return cv::nat(nat(rng));
    case Carrier::ListNat: {
      std::uniform_int_distribution<std::size_t> len(0, 3);
      std::vector<CostValPtr> elems;
      std::size_t n = len(rng);
      elems.reserve(n);
      for (std::size_t i = 0; i < n; ++i) elems.push_back(cv::nat(nat(rng)));
      return cv::list(std::move(elems));
    }
    case Carrier::PairNat:
      return cv::pair(cv::nat(nat(rng)), cv::nat(nat(rng)));
  }
  return cv::nat(0);
}

GraphRel random_graph_rel(std::mt19937_64& rng) {
  const auto& gens = cached_generators();
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  const CachedGen& gen = gens[pick(rng)];
  Costed g = eval_cost(CostEnv{}, gen.term);

  std::uniform_int_distribution<std::size_t> count(1, 3);
  std::uniform_int_distribution<std::int64_t> cost(-2, 2);
  std::vector<Costed> points;
  std::size_t n = count(rng);
  points.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    points.push_back(Costed{random_point_value(rng, gen.carrier), cost(rng)});
  return graph_rel(std::move(g), std::move(points));
}

}  // namespace

ParamTestResult run_param_test(const ParamTestConfig& config) {
  std::mt19937_64 rng(config.seed);
  const auto& pool = cached_poly();
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);

  ParamTestResult result;
  result.iterations = config.iterations;
  for (std::size_t iter = 0; iter < config.iterations; ++iter) {
    const CachedPoly& chosen = pool[pick(rng)];
    RelEnv rho;
    for (const std::string& tv : chosen.entry->ty_vars)
      rho[tv] = random_graph_rel(rng).rel();
    auto describe_rho = [&rho] {
      std::string out;
      for (const auto& [tv, rel] : rho)
        out += tv + " = " + rel_to_json(rel).dump() + "; ";
      return out;
    };
    ParamCheckOptions options;
    options.bounds = config.bounds;
    options.lhs_model = config.lhs_model;
    options.rhs_model = config.rhs_model;
    try {
      if (!param_check(chosen.ctx, *chosen.term, rho, CostEnv{}, CostEnv{}, options)) {
        result.failures.push_back(
            {iter, chosen.entry->name,
             "denotation not self-related under " + describe_rho() +
                 "(an evaluator or relation bug: relatedness is guaranteed here)"});
      }
    } catch (const std::exception& e) {
      result.failures.push_back({iter, chosen.entry->name, e.what()});
    }
  }
  return result;
}

}  // namespace costlr
