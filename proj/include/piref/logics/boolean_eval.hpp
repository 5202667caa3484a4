#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "piref/core/sentence.hpp"
#include "piref/core/verdict.hpp"

namespace piref::logics {

/// Evaluate a boolean term under an atom assignment given as a bitmask over
/// `atoms` (bit i is the value of atoms[i]). Unlisted variables read false.
inline bool eval_term(const Term& t, const std::vector<std::string>& atoms,
                      std::uint32_t mask) {
  if (t.is_variable()) {
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (atoms[i] == t.symbol()) return (mask >> i) & 1u;
    return false;
  }
  const std::string& sym = t.symbol();
  if (sym == "top") return true;
  if (sym == "bot") return false;
  if (sym == "~") return !eval_term(t.args()[0], atoms, mask);
  if (sym == "/\\")
    return eval_term(t.args()[0], atoms, mask) &&
           eval_term(t.args()[1], atoms, mask);
  if (sym == "\\/")
    return eval_term(t.args()[0], atoms, mask) ||
           eval_term(t.args()[1], atoms, mask);
  if (sym == "->")
    return !eval_term(t.args()[0], atoms, mask) ||
           eval_term(t.args()[1], atoms, mask);
  throw InputError("boolean evaluation: unsupported connective '" + sym + "'");
}

/// A k = 1 sentence holds when its formula is true; a k = 2 sentence holds
/// when both sides evaluate equal (the two-element-algebra reading of ~=).
inline bool sentence_holds(const Sentence& s,
                           const std::vector<std::string>& atoms,
                           std::uint32_t mask) {
  if (s.dimension() == 1) return eval_term(s.component(0), atoms, mask);
  if (s.dimension() == 2)
    return eval_term(s.component(0), atoms, mask) ==
           eval_term(s.component(1), atoms, mask);
  throw InputError("boolean evaluation: dimension " +
                   std::to_string(s.dimension()) + " is not supported");
}

inline Valuation make_valuation(const std::vector<std::string>& atoms,
                                std::uint32_t mask) {
  Valuation v;
  for (std::size_t i = 0; i < atoms.size(); ++i)
    v.atoms.emplace_back(atoms[i], ((mask >> i) & 1u) != 0);
  return v;
}

/// Exhaustive valuation search shared by the CPC and boolean-equation
/// oracles. Enumerates assignments in ascending bitmask order (all-false
/// first) and reports the first falsifying valuation, which makes witnesses
/// deterministic. Unknown only when the occurring atoms exceed the budget.
/// Enumeration is hard-capped at 24 atoms whatever the budget says.
inline Verdict truth_table_entails(const SentenceSet& premises,
                                   const Sentence& conclusion, Budget budget) {
  std::vector<std::string> atoms = occurring_atoms(premises, conclusion);
  int limit = std::min(budget.limit, 24);
  if (static_cast<int>(atoms.size()) > limit)
    return Verdict::unknown(std::to_string(atoms.size()) +
                            " atoms exceed budget " + std::to_string(limit));
  std::uint32_t total = 1u << atoms.size();
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    bool premises_hold = true;
    for (const Sentence& p : premises)
      if (!sentence_holds(p, atoms, mask)) {
        premises_hold = false;
        break;
      }
    if (!premises_hold) continue;
    if (!sentence_holds(conclusion, atoms, mask))
      return Verdict::not_entailed(Witness{make_valuation(atoms, mask)});
  }
  return Verdict::entailed();
}

/// Witness replay for the truth-table family: the valuation must satisfy
/// every premise and falsify the conclusion.
inline bool truth_table_replay(const Witness& w, const SentenceSet& premises,
                               const Sentence& conclusion) {
  if (!w.is_valuation()) return false;
  std::vector<std::string> atoms;
  std::uint32_t mask = 0;
  for (const auto& [atom, value] : w.valuation().atoms) {
    if (value) mask |= 1u << atoms.size();
    atoms.push_back(atom);
  }
  for (const Sentence& p : premises)
    if (!sentence_holds(p, atoms, mask)) return false;
  return !sentence_holds(conclusion, atoms, mask);
}

}  // namespace piref::logics
