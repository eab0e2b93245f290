#pragma once

#include <string>
#include <vector>

#include "costlr/syntax.hpp"

namespace costlr {

// Closed term of a ground (function-free) type; evaluates under both semantics.
struct CorpusEntry {
  std::string name;
  std::string source;
};

// Closed term whose annotations mention the listed type variables.
struct PolyEntry {
  std::string name;
  std::string source;
  std::vector<std::string> ty_vars;
};

// Every term constructor is covered across the ground corpus.
const std::vector<CorpusEntry>& ground_corpus();
const std::vector<PolyEntry>& poly_corpus();

TermPtr corpus_term(const CorpusEntry& e);
TermPtr corpus_term(const PolyEntry& e);

}  // namespace costlr
