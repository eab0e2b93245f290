#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

namespace costlr {

using json = nlohmann::ordered_json;

// An evaluator met a value of the wrong shape. Only reachable on input that
// skipped the typechecker, so it signals a caller bug rather than a user error.
class ShapeFault : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An operation needed a function-free value but found an embedded function.
class GroundnessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Value;
using ValuePtr = std::shared_ptr<const Value>;

struct VNat {
  std::int64_t value = 0;
};
struct VList {
  std::vector<ValuePtr> elems;
};
struct VPair {
  ValuePtr first;
  ValuePtr second;
};
struct VFun {
  std::function<ValuePtr(const ValuePtr&)> fn;
};

struct Value {
  std::variant<VNat, VList, VPair, VFun> node;
};

namespace val {
ValuePtr nat(std::int64_t n);
ValuePtr list(std::vector<ValuePtr> elems);
ValuePtr pair(ValuePtr first, ValuePtr second);
ValuePtr fun(std::function<ValuePtr(const ValuePtr&)> fn);
}  // namespace val

struct CostVal;
using CostValPtr = std::shared_ptr<const CostVal>;
struct Costed;

struct CNat {
  std::int64_t value = 0;
};
struct CList {
  std::vector<CostValPtr> elems;
};
struct CPair {
  CostValPtr first;
  CostValPtr second;
};
// Functions take cost-free argument values and embed the cost of the call in
// their result.
struct CFun {
  std::function<Costed(const CostValPtr&)> fn;
};

struct CostVal {
  std::variant<CNat, CList, CPair, CFun> node;
};

// A value together with the integer cost spent computing it. Costs may go
// negative under explicit shifts, never under evaluation from scratch.
struct Costed {
  CostValPtr val;
  std::int64_t cost = 0;
};

namespace cv {
CostValPtr nat(std::int64_t n);
CostValPtr list(std::vector<CostValPtr> elems);
CostValPtr pair(CostValPtr first, CostValPtr second);
CostValPtr fun(std::function<Costed(const CostValPtr&)> fn);
}  // namespace cv

bool is_ground(const Value& v);
bool is_ground(const CostVal& v);
inline bool is_ground(const ValuePtr& v) { return is_ground(*v); }
inline bool is_ground(const CostValPtr& v) { return is_ground(*v); }

// Structural equality on function-free values; throws GroundnessError if either
// side embeds a function.
bool equal_ground(const Value& a, const Value& b);
bool equal_ground(const CostVal& a, const CostVal& b);
inline bool equal_ground(const ValuePtr& a, const ValuePtr& b) {
  return equal_ground(*a, *b);
}
inline bool equal_ground(const CostValPtr& a, const CostValPtr& b) {
  return equal_ground(*a, *b);
}
bool equal_costed(const Costed& a, const Costed& b);

// Forgets the (absent) costs of a ground costed value.
ValuePtr strip(const CostValPtr& v);

// Shape projections; ShapeFault on mismatch.
const VFun& as_vfun(const ValuePtr& v);
std::int64_t as_vnat(const ValuePtr& v);
const VList& as_vlist(const ValuePtr& v);
const VPair& as_vpair(const ValuePtr& v);
const CFun& as_cfun(const CostValPtr& v);
std::int64_t as_cnat(const CostValPtr& v);
const CList& as_clist(const CostValPtr& v);
const CPair& as_cpair(const CostValPtr& v);

json value_to_json(const ValuePtr& v);
json cost_val_to_json(const CostValPtr& v);
json costed_to_json(const Costed& c);

// Overflow is a bug at desk scale; asserts in debug builds.
std::int64_t add_checked(std::int64_t a, std::int64_t b);

}  // namespace costlr
