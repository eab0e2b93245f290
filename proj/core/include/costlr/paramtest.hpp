#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "costlr/relations.hpp"

namespace costlr {

struct ParamTestConfig {
  std::uint64_t seed = 0;
  std::size_t iterations = 1000;
  CostModel lhs_model;
  CostModel rhs_model;  // diverging models expose evaluator mutations
  EnumBounds bounds = EnumBounds::defaults();
};

struct ParamTestFailure {
  std::size_t iteration = 0;
  std::string term;
  std::string detail;
};

struct ParamTestResult {
  std::size_t iterations = 0;
  std::vector<ParamTestFailure> failures;
  bool ok() const { return failures.empty(); }
};

// Randomized relatedness checks: corpus terms under freshly generated graph
// relations for their type variables. Deterministic for a fixed seed.
ParamTestResult run_param_test(const ParamTestConfig& config);

}  // namespace costlr
