#include "costlr/prelude.hpp"

#include "costlr/parser.hpp"

namespace costlr {

const TermPtr& map_list_term() {
  static const TermPtr t =
      parse_term("\\g:a->b. \\ys:[a]. lfold(\\x:a. \\xs:[b]. (g x) : xs, nil[b], ys)");
  return t;
}

const TermPtr& map_pair_term() {
  static const TermPtr t = parse_term(
      "\\p:(a->c, b->d). \\q:(a,b). "
      "pcase p {(f1, f2) -> pcase q {(x1, x2) -> (f1 x1, f2 x2)}}");
  return t;
}

const TermPtr& length_term() {
  static const TermPtr t =
      parse_term("\\xs:[a]. lfold(\\x:a. \\y:Nat. 1 + y, 0, xs)");
  return t;
}

Costed map_list_costed(const CostModel& model) {
  return eval_cost(CostEnv{}, map_list_term(), model);
}

Costed map_pair_costed(const CostModel& model) {
  return eval_cost(CostEnv{}, map_pair_term(), model);
}

}  // namespace costlr
