#pragma once

#include <map>
#include <string>

#include "costlr/syntax.hpp"
#include "costlr/value.hpp"

namespace costlr {

// Immutable name-to-value map. Extension copies, so closures can hold snapshots
// and share them across threads.
template <typename V>
class EnvOf {
 public:
  EnvOf() = default;

  EnvOf with(const std::string& name, V v) const {
    EnvOf out = *this;
    out.vars_[name] = std::move(v);
    return out;
  }

  const V* find(const std::string& name) const {
    auto it = vars_.find(name);
    return it == vars_.end() ? nullptr : &it->second;
  }

  bool empty() const { return vars_.empty(); }
  const std::map<std::string, V>& entries() const { return vars_; }

 private:
  std::map<std::string, V> vars_;
};

using Env = EnvOf<ValuePtr>;
using CostEnv = EnvOf<CostValPtr>;

// Where each construct charges cost. The default charges one unit per beta step
// and nothing else; the other rows exist so constructor/case variants can be
// explored without touching the evaluator.
struct CostModel {
  std::int64_t beta = 1;
  std::int64_t constructor = 0;
  std::int64_t case_split = 0;
};

ValuePtr eval_std(const Env& env, const Term& t);
ValuePtr eval_std(const Env& env, const TermPtr& t);

Costed eval_cost(const CostEnv& env, const Term& t, const CostModel& model = {});
Costed eval_cost(const CostEnv& env, const TermPtr& t, const CostModel& model = {});

// Cost algebra. add_cost shifts the cost component; ccons/cpair build compound
// values summing costs; capp applies a costed function, charging both operands'
// costs on top of the call itself.
Costed add_cost(std::int64_t c, Costed x);
Costed ccons(const Costed& head, const Costed& tail);
Costed cpair(const Costed& first, const Costed& second);
Costed capp(const Costed& f, const Costed& x);

// Cost of applying f to x, not counting the cost already sunk into x.
std::int64_t app_cost(const Costed& f, const Costed& x);

struct BetaCount {
  ValuePtr value;
  std::int64_t betas = 0;
};

// Cost-blind reference evaluator that counts how often a lambda body is
// entered, including steps inside lfold/ifold iterations. Shares no code with
// eval_cost so the two can be checked against each other.
BetaCount beta_count_oracle(const Env& env, const Term& t);
BetaCount beta_count_oracle(const Env& env, const TermPtr& t);

}  // namespace costlr
