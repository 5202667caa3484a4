#pragma once

#include <string>
#include <vector>

#include "piref/core/oracle.hpp"
#include "piref/core/signature.hpp"
#include "piref/logics/boolean_eval.hpp"

namespace piref::logics {

inline std::vector<std::string> default_variable_pool() {
  return {"p", "q", "r", "s", "t", "u", "v", "w"};
}

inline std::vector<Connective> boolean_connectives() {
  return {{"->", 2}, {"/\\", 2}, {"\\/", 2}, {"~", 1}, {"top", 0}, {"bot", 0}};
}

/// One-object signature of classical propositional calculus. Every built-in
/// one-object signature uses the id "V" so that syntactic containment across
/// the built-in logics matches signatures by object.
inline Signature cpc_signature(
    std::vector<std::string> variables = default_variable_pool()) {
  return Signature("V", 1, boolean_connectives(), std::move(variables));
}

/// Classical propositional consequence by exhaustive truth tables.
/// Exact (never Unknown) whenever the occurring atoms fit the budget.
inline Verdict cpc_entails(const SentenceSet& premises,
                           const Sentence& conclusion, Budget budget = {}) {
  if (conclusion.dimension() != 1)
    throw InputError("cpc: sentences are 1-dimensional");
  return truth_table_entails(premises, conclusion, budget);
}

inline ClosureOracle cpc_oracle(
    std::vector<std::string> variables = default_variable_pool()) {
  return ClosureOracle(
      cpc_signature(std::move(variables)),
      [](const SentenceSet& premises, const Sentence& conclusion,
         Budget budget) { return cpc_entails(premises, conclusion, budget); },
      truth_table_replay);
}

}  // namespace piref::logics
