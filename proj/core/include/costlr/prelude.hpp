#pragma once

#include "costlr/eval.hpp"
#include "costlr/syntax.hpp"

namespace costlr {

// Bundled calculus definitions. Their costed denotations are always obtained by
// evaluating these terms, never hand-coded, so application costs track whatever
// the cost model says.

// \g:a->b. \ys:[a]. lfold(\x:a. \xs:[b]. (g x) : xs, nil[b], ys)
const TermPtr& map_list_term();

// \p:(a->c, b->d). \q:(a,b). pcase p {(f1,f2) -> pcase q {(x1,x2) -> (f1 x1, f2 x2)}}
const TermPtr& map_pair_term();

// \xs:[a]. lfold(\x:a. \y:Nat. 1 + y, 0, xs)
const TermPtr& length_term();

Costed map_list_costed(const CostModel& model = {});
Costed map_pair_costed(const CostModel& model = {});

}  // namespace costlr
