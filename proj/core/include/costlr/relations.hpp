#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "costlr/eval.hpp"
#include "costlr/syntax.hpp"
#include "costlr/typecheck.hpp"
#include "costlr/value.hpp"

namespace costlr {

class UnboundTypeVar : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A relational-environment precondition did not hold; distinct from a genuine
// relatedness failure.
class PreconditionViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Finite binary relation between ground costed values. Membership is decided by
// structural equality; groundness is enforced at construction.
class Rel {
 public:
  using Pair = std::pair<CostValPtr, CostValPtr>;

  Rel() = default;
  explicit Rel(std::vector<Pair> pairs);

  bool contains(const CostValPtr& x, const CostValPtr& y) const;
  const std::vector<Pair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }

 private:
  std::vector<Pair> pairs_;  // duplicate-free
};

using RelEnv = std::map<std::string, Rel>;

json rel_to_json(const Rel& r);

// Same idea over plain values, for the cost-free relation.
struct ValueRel {
  std::vector<std::pair<ValuePtr, ValuePtr>> pairs;
  bool contains(const ValuePtr& x, const ValuePtr& y) const;
};
using ValueRelEnv = std::map<std::string, ValueRel>;

// Bounds for every finite enumeration used when deciding arrow cases and when
// generating brute-force grids. One record so the knobs live in one place.
struct EnumBounds {
  std::int64_t nat_max = 2;       // naturals sampled from 0..nat_max
  std::size_t list_len_max = 3;   // list lengths in enumerations
  std::int64_t cost_lo = -2;      // cost offsets sampled from cost_lo..cost_hi
  std::int64_t cost_hi = 2;
  std::size_t rel_pairs_max = 3;  // relation sizes used by the grids
  std::size_t type_depth_max = 2;
  std::size_t samples_max = 48;   // cap on any single enumeration

  static const EnumBounds& defaults();
};

// Finite stand-ins for the relational interpretation of a type, used to range
// over "all related arguments" at arrow types. Arrow-typed positions are
// populated with related constant-function pairs. Every emitted pair is related
// at the given type by construction.
std::vector<std::pair<CostValPtr, CostValPtr>> enumerate_embedded(
    const Ty& ty, const RelEnv& rho, const EnumBounds& bounds);
std::vector<std::pair<Costed, Costed>> enumerate_lifted(const Ty& ty, const RelEnv& rho,
                                                        const EnumBounds& bounds);
std::vector<std::pair<ValuePtr, ValuePtr>> enumerate_std(const Ty& ty,
                                                         const ValueRelEnv& rho,
                                                         const EnumBounds& bounds);

// Cost-free logical relation.
bool member_std(const Ty& ty, const ValueRelEnv& rho, const ValuePtr& x,
                const ValuePtr& y, const EnumBounds& bounds = EnumBounds::defaults());

// Logical relation with costs embedded in function results only: the arrow case
// demands equal result costs and related result values.
bool member_embedded(const Ty& ty, const RelEnv& rho, const CostValPtr& x,
                     const CostValPtr& y,
                     const EnumBounds& bounds = EnumBounds::defaults());

// Fully cost-lifted logical relation, defined directly: every case requires
// equal top-level costs, lists and pairs decompose through the cost-summing
// constructors, arrows compare applied results.
bool member_lifted(const Ty& ty, const RelEnv& rho, const Costed& x, const Costed& y,
                   const EnumBounds& bounds = EnumBounds::defaults());

// Finite graph of a costed function over chosen probe points, with the derived
// pair set and per-point application costs cached.
class GraphRel {
 public:
  GraphRel(Costed g, std::vector<Costed> points);

  const Costed& fn() const { return g_; }
  const std::vector<Costed>& points() const { return points_; }
  const std::vector<Costed>& outputs() const { return outputs_; }
  const std::vector<std::int64_t>& app_costs() const { return app_costs_; }
  const Rel& rel() const { return rel_; }
  std::size_t size() const { return points_.size(); }

 private:
  Costed g_;
  std::vector<Costed> points_;
  std::vector<Costed> outputs_;        // g applied to each point
  std::vector<std::int64_t> app_costs_;
  Rel rel_;  // duplicate-free pair set; per-point data above keeps duplicates
};

GraphRel graph_rel(Costed g, std::vector<Costed> points);

// Witness procedures. Indices are 1-based. Each returns the decomposition that
// places (x, y) in the corresponding lifting of the graph relation, or nullopt
// exactly when no decomposition exists.

struct BaseWitness {
  std::size_t index = 0;
  std::int64_t shift = 0;
};
std::optional<BaseWitness> witness_base(const GraphRel& r, const Costed& x,
                                        const Costed& y);
// With a valid witness, applying g to x lands on y shifted by the witnessed
// point's application cost.
bool base_transport_holds(const GraphRel& r, const BaseWitness& w, const Costed& x,
                          const Costed& y);

struct PairWitness {
  std::size_t first_index = 0;
  std::size_t second_index = 0;
  std::int64_t shift = 0;
};
std::optional<PairWitness> witness_pair(const GraphRel& rg, const GraphRel& rh,
                                        const Costed& p, const Costed& q,
                                        const CostModel& model = {});
bool pair_transport_holds(const GraphRel& rg, const GraphRel& rh, const PairWitness& w,
                          const Costed& p, const Costed& q, const CostModel& model = {});

struct ListWitness {
  std::vector<std::size_t> indices;  // lexicographically least solution
  std::int64_t shift = 0;
};
std::optional<ListWitness> witness_list(const GraphRel& r, const Costed& xs,
                                        const Costed& ys, const CostModel& model = {});
bool list_transport_holds(const GraphRel& r, const ListWitness& w, const Costed& xs,
                          const Costed& ys, const CostModel& model = {});

// Builds the costed list x_{i1} (+) ... (+) x_{im} (+) (nil, 0) from 1-based
// indices into r's points.
Costed select_points(const GraphRel& r, const std::vector<std::size_t>& indices);

struct ParamCheckOptions {
  EnumBounds bounds = EnumBounds::defaults();
  CostModel lhs_model;
  CostModel rhs_model;
};

// Relates a term's costed denotations under two environments. Throws
// PreconditionViolation if the environments are not themselves related at the
// context's types; a plain false on valid preconditions indicates an evaluator
// bug, since relatedness is guaranteed for well-typed terms.
bool param_check(const Ctx& ctx, const Term& t, const RelEnv& rho, const CostEnv& env1,
                 const CostEnv& env2, const ParamCheckOptions& options = {});

}  // namespace costlr
