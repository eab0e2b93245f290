#include "costlr/value.hpp"

#include <cassert>

#include "costlr/overloaded.hpp"

namespace costlr {

namespace val {

ValuePtr nat(std::int64_t n) { return std::make_shared<Value>(Value{VNat{n}}); }
ValuePtr list(std::vector<ValuePtr> elems) {
  return std::make_shared<Value>(Value{VList{std::move(elems)}});
}
ValuePtr pair(ValuePtr first, ValuePtr second) {
  return std::make_shared<Value>(Value{VPair{std::move(first), std::move(second)}});
}
ValuePtr fun(std::function<ValuePtr(const ValuePtr&)> fn) {
  return std::make_shared<Value>(Value{VFun{std::move(fn)}});
}

}  // namespace val

namespace cv {

CostValPtr nat(std::int64_t n) { return std::make_shared<CostVal>(CostVal{CNat{n}}); }
CostValPtr list(std::vector<CostValPtr> elems) {
  return std::make_shared<CostVal>(CostVal{CList{std::move(elems)}});
}
CostValPtr pair(CostValPtr first, CostValPtr second) {
  return std::make_shared<CostVal>(CostVal{CPair{std::move(first), std::move(second)}});
}
CostValPtr fun(std::function<Costed(const CostValPtr&)> fn) {
  return std::make_shared<CostVal>(CostVal{CFun{std::move(fn)}});
}

}  // namespace cv

bool is_ground(const Value& v) {
  return std::visit(overloaded{
                        [](const VNat&) { return true; },
                        [](const VList& l) {
                          for (const auto& e : l.elems)
                            if (!is_ground(*e)) return false;
                          return true;
                        },
                        [](const VPair& p) {
                          return is_ground(*p.first) && is_ground(*p.second);
                        },
                        [](const VFun&) { return false; },
                    },
                    v.node);
}

bool is_ground(const CostVal& v) {
  return std::visit(overloaded{
                        [](const CNat&) { return true; },
                        [](const CList& l) {
                          for (const auto& e : l.elems)
                            if (!is_ground(*e)) return false;
                          return true;
                        },
                        [](const CPair& p) {
                          return is_ground(*p.first) && is_ground(*p.second);
                        },
                        [](const CFun&) { return false; },
                    },
                    v.node);
}

bool equal_ground(const Value& a, const Value& b) {
  if (std::holds_alternative<VFun>(a.node) || std::holds_alternative<VFun>(b.node))
    throw GroundnessError("cannot compare values embedding functions");
  if (a.node.index() != b.node.index()) return false;
  return std::visit(overloaded{
                        [&](const VNat& x) { return x.value == std::get<VNat>(b.node).value; },
                        [&](const VList& x) {
                          const auto& y = std::get<VList>(b.node);
                          if (x.elems.size() != y.elems.size()) return false;
                          for (std::size_t i = 0; i < x.elems.size(); ++i)
                            if (!equal_ground(*x.elems[i], *y.elems[i])) return false;
                          return true;
                        },
                        [&](const VPair& x) {
                          const auto& y = std::get<VPair>(b.node);
                          return equal_ground(*x.first, *y.first) &&
                                 equal_ground(*x.second, *y.second);
                        },
                        [&](const VFun&) { return false; },
                    },
                    a.node);
}

bool equal_ground(const CostVal& a, const CostVal& b) {
  if (std::holds_alternative<CFun>(a.node) || std::holds_alternative<CFun>(b.node))
    throw GroundnessError("cannot compare values embedding functions");
  if (a.node.index() != b.node.index()) return false;
  return std::visit(overloaded{
                        [&](const CNat& x) { return x.value == std::get<CNat>(b.node).value; },
                        [&](const CList& x) {
                          const auto& y = std::get<CList>(b.node);
                          if (x.elems.size() != y.elems.size()) return false;
                          for (std::size_t i = 0; i < x.elems.size(); ++i)
                            if (!equal_ground(*x.elems[i], *y.elems[i])) return false;
                          return true;
                        },
                        [&](const CPair& x) {
                          const auto& y = std::get<CPair>(b.node);
                          return equal_ground(*x.first, *y.first) &&
                                 equal_ground(*x.second, *y.second);
                        },
                        [&](const CFun&) { return false; },
                    },
                    a.node);
}

bool equal_costed(const Costed& a, const Costed& b) {
  return a.cost == b.cost && equal_ground(*a.val, *b.val);
}

ValuePtr strip(const CostValPtr& v) {
  return std::visit(
      overloaded{
          [](const CNat& n) { return val::nat(n.value); },
          [](const CList& l) {
            std::vector<ValuePtr> out;
            out.reserve(l.elems.size());
            for (const auto& e : l.elems) out.push_back(strip(e));
            return val::list(std::move(out));
          },
          [](const CPair& p) { return val::pair(strip(p.first), strip(p.second)); },
          [](const CFun&) -> ValuePtr {
            throw GroundnessError("cannot strip a value embedding a function");
          },
      },
      v->node);
}

json value_to_json(const ValuePtr& v) {
  return std::visit(overloaded{
                        [](const VNat& n) { return json(n.value); },
                        [](const VList& l) {
                          json arr = json::array();
                          for (const auto& e : l.elems) arr.push_back(value_to_json(e));
                          return arr;
                        },
                        [](const VPair& p) {
                          return json{{"fst", value_to_json(p.first)},
                                      {"snd", value_to_json(p.second)}};
                        },
                        [](const VFun&) { return json{{"fun", "<opaque>"}}; },
                    },
                    v->node);
}

json cost_val_to_json(const CostValPtr& v) {
  return std::visit(overloaded{
                        [](const CNat& n) { return json(n.value); },
                        [](const CList& l) {
                          json arr = json::array();
                          for (const auto& e : l.elems) arr.push_back(cost_val_to_json(e));
                          return arr;
                        },
                        [](const CPair& p) {
                          return json{{"fst", cost_val_to_json(p.first)},
                                      {"snd", cost_val_to_json(p.second)}};
                        },
                        [](const CFun&) { return json{{"fun", "<opaque>"}}; },
                    },
                    v->node);
}

json costed_to_json(const Costed& c) {
  return json{{"value", cost_val_to_json(c.val)}, {"cost", c.cost}};
}

const VFun& as_vfun(const ValuePtr& v) {
  if (const auto* f = std::get_if<VFun>(&v->node)) return *f;
  throw ShapeFault("expected a function value");
}
std::int64_t as_vnat(const ValuePtr& v) {
  if (const auto* n = std::get_if<VNat>(&v->node)) return n->value;
  throw ShapeFault("expected a natural");
}
const VList& as_vlist(const ValuePtr& v) {
  if (const auto* l = std::get_if<VList>(&v->node)) return *l;
  throw ShapeFault("expected a list value");
}
const VPair& as_vpair(const ValuePtr& v) {
  if (const auto* p = std::get_if<VPair>(&v->node)) return *p;
  throw ShapeFault("expected a pair value");
}
const CFun& as_cfun(const CostValPtr& v) {
  if (const auto* f = std::get_if<CFun>(&v->node)) return *f;
  throw ShapeFault("expected a function value");
}
std::int64_t as_cnat(const CostValPtr& v) {
  if (const auto* n = std::get_if<CNat>(&v->node)) return n->value;
  throw ShapeFault("expected a natural");
}
const CList& as_clist(const CostValPtr& v) {
  if (const auto* l = std::get_if<CList>(&v->node)) return *l;
  throw ShapeFault("expected a list value");
}
const CPair& as_cpair(const CostValPtr& v) {
  if (const auto* p = std::get_if<CPair>(&v->node)) return *p;
  throw ShapeFault("expected a pair value");
}

std::int64_t add_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  bool overflow = __builtin_add_overflow(a, b, &r);
  assert(!overflow && "cost arithmetic overflow");
  (void)overflow;
  return r;
}

}  // namespace costlr
