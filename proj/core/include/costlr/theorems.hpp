#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "costlr/eval.hpp"
#include "costlr/syntax.hpp"
#include "costlr/value.hpp"

namespace costlr {

// The checkable statement families, one per polymorphic type shape.
enum class Shape {
  ConstNat,     // f :: a -> Nat
  Proj,         // f :: a -> a -> a
  Dup,          // f :: a -> (a, a)
  PairConsume,  // f :: (a, a) -> a
  ListLen,      // f :: [a] -> Nat
  ListToList,   // f :: [a] -> [a]
};

std::string_view shape_name(Shape s);
std::optional<Shape> shape_from_name(std::string_view name);
TyPtr shape_type(Shape s, const std::string& alpha);

enum class Verdict { Holds, Violated };

struct TheoremReport {
  Shape shape = Shape::ConstNat;
  Costed lhs;
  Costed rhs;
  bool value_equal = false;
  std::int64_t delta = 0;          // measured cost difference, orientation per shape
  std::string delta_witness;       // which application costs explain delta
  Verdict verdict = Verdict::Violated;
};

json report_json(const TheoremReport& r);

// The bundled calculus definitions the statements are phrased with.
struct StdLib {
  TermPtr map_list;
  TermPtr map_pair;
  TermPtr length;
};
const StdLib& std_lib();

// Improvement order: same value, lower or equal cost.
bool sqsubseteq(const Costed& a, const Costed& b);

// Instantiates both sides of the statement for `shape` on concrete f, g and
// arguments, evaluates them, and checks the exact cost obligation. Deltas are
// predicted from measured application costs, never hard-coded.
//
// Arguments per shape: ConstNat/Dup/ListLen/ListToList take one, Proj and
// PairConsume take two (PairConsume pairs them up). f must have exactly one
// free type variable and the shape's type; g must have type tau1 -> tau2.
TheoremReport check_free_theorem(Shape shape, const TermPtr& f, const TermPtr& g,
                                 const std::vector<TermPtr>& args, const TyPtr& tau1,
                                 const TyPtr& tau2);

// Runs the Proj obligation on a monomorphic f :: Nat -> Nat -> Nat. The report
// is flagged: nothing guarantees the obligation for such an f, and suitable
// instances demonstrate that it indeed fails.
TheoremReport negative_control(const TermPtr& f, const TermPtr& g, const TermPtr& t1,
                               const TermPtr& t2);

struct FusionReport {
  bool value_equal = false;
  std::int64_t lhs_cost = 0;            // fold over the produced list
  std::int64_t rhs_cost = 0;            // fused form
  bool improvement_holds = false;       // fused side within the original's cost
  std::size_t intermediate_length = 0;  // length of the produced list
};

json fusion_json(const FusionReport& r);

// Compares lfold(k, z, g cons nil) against g k z for a producer
// g :: (tau -> a -> a) -> a -> a, consumer k :: tau -> tau' -> tau' and seed
// z :: tau'. Values always agree; the cost comparison can go either way.
FusionReport shortcut_check(const TermPtr& g, const TermPtr& k, const TermPtr& z,
                            const TyPtr& tau, const TyPtr& tau_prime);

}  // namespace costlr
