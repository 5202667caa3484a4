#pragma once

#include <string>
#include <vector>

#include "piref/core/oracle.hpp"
#include "piref/core/signature.hpp"
#include "piref/logics/cpc.hpp"

namespace piref::logics {

/// One-object signature of the equational theory of boolean algebras:
/// the boolean vocabulary at dimension 2 (sentences are term pairs s ~= t).
inline Signature ba_signature(
    std::vector<std::string> variables = default_variable_pool()) {
  return Signature("V", 2, boolean_connectives(), std::move(variables));
}

/// Quasi-equational consequence over the two-element boolean algebra:
/// the conjunction of the premise equations forces the conclusion equation
/// under every {0,1} valuation.
inline Verdict ba_entails(const SentenceSet& premises,
                          const Sentence& conclusion, Budget budget = {}) {
  if (conclusion.dimension() != 2)
    throw InputError("ba-eq: sentences are 2-dimensional equations");
  for (const Sentence& p : premises)
    if (p.dimension() != 2)
      throw InputError("ba-eq: sentences are 2-dimensional equations");
  return truth_table_entails(premises, conclusion, budget);
}

inline ClosureOracle ba_oracle(
    std::vector<std::string> variables = default_variable_pool()) {
  return ClosureOracle(
      ba_signature(std::move(variables)),
      [](const SentenceSet& premises, const Sentence& conclusion,
         Budget budget) { return ba_entails(premises, conclusion, budget); },
      truth_table_replay);
}

}  // namespace piref::logics
