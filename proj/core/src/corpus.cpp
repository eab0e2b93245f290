#include "costlr/corpus.hpp"

#include "costlr/parser.hpp"

namespace costlr {

const std::vector<CorpusEntry>& ground_corpus() {
  static const std::vector<CorpusEntry> corpus = {
      {"nat_lit", "5"},
      {"add", "1 + 2"},
      {"id_app", "(\\x:Nat. x) 5"},
      {"nested_app", "(\\x:Nat. x + 1) ((\\y:Nat. y) 3)"},
      {"nil", "nil[Nat]"},
      {"cons_chain", "1 : 2 : nil[Nat]"},
      {"pair_lit", "(1, 2)"},
      {"ncase_zero", "ncase 0 {0 -> 42; n -> n}"},
      {"ncase_pos", "ncase 2 {0 -> 0; n -> n + 1}"},
      {"lcase_nil", "lcase nil[Nat] {nil -> 0; h:t -> h}"},
      {"lcase_cons", "lcase 7 : nil[Nat] {nil -> 0; h:t -> h + 1}"},
      {"pcase_sum", "pcase (3, 4) {(a, b) -> a + b}"},
      {"lfold_sum", "lfold(\\x:Nat. \\y:Nat. x + y, 0, 1:2:3:nil[Nat])"},
      {"ifold_succ", "ifold(\\x:Nat. x + 1, 0, 3)"},
      {"length_12",
       "(\\xs:[Nat]. lfold(\\x:Nat. \\y:Nat. 1 + y, 0, xs)) (1:2:nil[Nat])"},
      {"map_double",
       "(\\g:Nat->Nat. \\ys:[Nat]. lfold(\\x:Nat. \\xs:[Nat]. (g x) : xs, nil[Nat],"
       " ys)) (\\n:Nat. n+n) (1:2:3:nil[Nat])"},
      {"reverse_app",
       "(\\xs:[Nat]. lfold(\\x:Nat. \\r:[Nat]. lfold(\\a:Nat. \\b:[Nat]. a:b,"
       " x:nil[Nat], r), nil[Nat], xs)) (1:2:3:nil[Nat])"},
      {"fib_pairs", "ifold(\\p:(Nat,Nat). pcase p {(a, b) -> (b, a+b)}, (0, 1), 5)"},
      {"swap_app", "(\\p:(Nat,Nat). pcase p {(x, y) -> (y, x)}) (1, 2)"},
      {"twice", "(\\f:Nat->Nat. f (f 2)) (\\n:Nat. n+n)"},
      {"dup_each", "lfold(\\x:Nat. \\ys:[Nat]. x : x : ys, nil[Nat], 1:2:nil[Nat])"},
      {"replicate", "ifold(\\xs:[Nat]. 0 : xs, nil[Nat], 4)"},
      {"pair_build", "(\\x:Nat. (x, x+1)) 3"},
      {"nested_pcase", "pcase ((1, 2), 3) {(p, n) -> pcase p {(a, b) -> a + b + n}}"},
      {"tail", "lcase 1:2:nil[Nat] {nil -> nil[Nat]; h:t -> t}"},
      {"ncase_fold", "ncase lfold(\\x:Nat. \\y:Nat. x+y, 0, 1:nil[Nat]) {0 -> 9; n -> n+n}"},
      {"pair_list_fold",
       "(\\xs:[(Nat,Nat)]. lfold(\\p:(Nat,Nat). \\acc:Nat."
       " pcase p {(a, b) -> a + b + acc}, 0, xs)) ((1,2):(3,4):nil[(Nat,Nat)])"},
      {"pair_of_lists", "(1:nil[Nat], 2:nil[Nat])"},
      {"ifold_ncase", "ifold(\\n:Nat. ncase n {0 -> 1; m -> m+m}, 0, 3)"},
      {"sum_and_count",
       "lfold(\\x:Nat. \\acc:(Nat,Nat). pcase acc {(s, c) -> (s+x, c+1)}, (0, 0),"
       " 5:6:nil[Nat])"},
      {"proj_first", "(\\x:Nat. \\y:Nat. x) 1 2"},
      {"proj_second", "(\\x:Nat. \\y:Nat. y) 1 2"},
      {"append",
       "(\\x:[Nat]. \\y:[Nat]. lfold(\\a:Nat. \\b:[Nat]. a:b, y, x))"
       " (1:nil[Nat]) (2:3:nil[Nat])"},
      {"ncase_ifold", "ncase 1 {0 -> 0; n -> ifold(\\k:Nat. k+n, 0, 2)}"},
      // operands that are themselves costly, so every cost-propagation slot of
      // the evaluator carries a nonzero value somewhere in the corpus
      {"lfold_costly_operands",
       "lfold((\\f:Nat->Nat->Nat. f) (\\x:Nat. \\y:Nat. x + y), 0,"
       " (\\l:[Nat]. l) (1:2:nil[Nat]))"},
      {"ifold_costly_operands",
       "ifold((\\f:Nat->Nat. f) (\\x:Nat. x + 1), (\\z:Nat. z) 0, (\\n:Nat. n) 3)"},
      {"lcase_costly_scrutinee",
       "lcase (\\l:[Nat]. l) (1:nil[Nat]) {nil -> 0; h:t -> h}"},
      {"pcase_costly_scrutinee", "pcase (\\p:(Nat,Nat). p) (1, 2) {(a, b) -> a}"},
      {"cons_costly_head", "((\\x:Nat. x) 1) : nil[Nat]"},
      {"pair_costly_components", "((\\x:Nat. x) 1, (\\y:Nat. y) 2)"},
      {"add_costly_operands", "(\\x:Nat. x) 1 + (\\y:Nat. y) 2"},
      {"ncase_costly_scrutinee", "ncase (\\n:Nat. n) 2 {0 -> 0; n -> n}"},
  };
  return corpus;
}

const std::vector<PolyEntry>& poly_corpus() {
  static const std::vector<PolyEntry> corpus = {
      {"id", "\\x:a. x", {"a"}},
      {"id_eta", "\\x:a. (\\y:a. y) x", {"a"}},
      {"const_seven", "\\x:a. 7", {"a"}},
      {"proj_fst", "\\x:a. \\y:a. x", {"a"}},
      {"proj_snd", "\\x:a. \\y:a. y", {"a"}},
      {"dup", "\\x:a. (x, x)", {"a"}},
      {"dup_eta", "\\x:a. (\\y:a. (y, y)) x", {"a"}},
      {"pair_fst", "\\p:(a,a). pcase p {(x, y) -> x}", {"a"}},
      {"pair_snd", "\\p:(a,a). pcase p {(x, y) -> y}", {"a"}},
      {"swap", "\\p:(a,b). pcase p {(x, y) -> (y, x)}", {"a", "b"}},
      {"length", "\\xs:[a]. lfold(\\x:a. \\y:Nat. 1 + y, 0, xs)", {"a"}},
      {"length_two_step", "\\xs:[a]. lfold(\\x:a. \\y:Nat. 1 + 1 + y, 0, xs)", {"a"}},
      {"list_id", "\\xs:[a]. xs", {"a"}},
      {"tail_or_nil", "\\xs:[a]. lcase xs {nil -> nil[a]; h:t -> t}", {"a"}},
      {"head_twice", "\\xs:[a]. lcase xs {nil -> nil[a]; h:t -> h:h:nil[a]}", {"a"}},
      {"dup_each", "\\xs:[a]. lfold(\\x:a. \\r:[a]. x:x:r, nil[a], xs)", {"a"}},
      {"reverse",
       "\\xs:[a]. lfold(\\x:a. \\r:[a]. lfold(\\h:a. \\t:[a]. h:t, x:nil[a], r),"
       " nil[a], xs)",
       {"a"}},
      {"two_of", "\\x:a. x : x : nil[a]", {"a"}},
      {"map_list",
       "\\g:a->b. \\ys:[a]. lfold(\\x:a. \\xs:[b]. (g x) : xs, nil[b], ys)",
       {"a", "b"}},
      {"apply_twice", "\\f:a->a. \\x:a. f (f x)", {"a"}},
      {"compose", "\\f:b->c. \\g:a->b. \\x:a. f (g x)", {"a", "b", "c"}},
  };
  return corpus;
}

TermPtr corpus_term(const CorpusEntry& e) { return parse_term(e.source); }
TermPtr corpus_term(const PolyEntry& e) { return parse_term(e.source); }

}  // namespace costlr
