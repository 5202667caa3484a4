#pragma once

#include <string>
#include <vector>

#include "piref/core/sentence.hpp"
#include "piref/core/verdict.hpp"

namespace piref::logics {

inline bool kripke_eval(const KripkeModel& m, int world, const Term& t) {
  if (t.is_variable()) {
    for (std::size_t i = 0; i < m.atoms.size(); ++i)
      if (m.atoms[i] == t.symbol()) return m.valuation[world][i];
    return false;
  }
  const std::string& sym = t.symbol();
  if (sym == "top") return true;
  if (sym == "bot") return false;
  if (sym == "~") return !kripke_eval(m, world, t.args()[0]);
  if (sym == "/\\")
    return kripke_eval(m, world, t.args()[0]) &&
           kripke_eval(m, world, t.args()[1]);
  if (sym == "\\/")
    return kripke_eval(m, world, t.args()[0]) ||
           kripke_eval(m, world, t.args()[1]);
  if (sym == "->")
    return !kripke_eval(m, world, t.args()[0]) ||
           kripke_eval(m, world, t.args()[1]);
  if (sym == "box") {
    for (int w = 0; w < m.world_count; ++w)
      if (m.relation[world][w] && !kripke_eval(m, w, t.args()[0]))
        return false;
    return true;
  }
  if (sym == "dia") {
    for (int w = 0; w < m.world_count; ++w)
      if (m.relation[world][w] && kripke_eval(m, w, t.args()[0]))
        return true;
    return false;
  }
  throw InputError("kripke evaluation: unsupported connective '" + sym + "'");
}

inline bool kripke_eval(const KripkeModel& m, int world, const Sentence& s) {
  if (s.dimension() != 1)
    throw InputError("kripke evaluation: modal sentences are 1-dimensional");
  return kripke_eval(m, world, s.component(0));
}

/// Global truth: the sentence holds at every world.
inline bool globally_true(const KripkeModel& m, const Sentence& s) {
  for (int w = 0; w < m.world_count; ++w)
    if (!kripke_eval(m, w, s)) return false;
  return true;
}

/// A model witnesses `premises not|- conclusion` under global consequence
/// when all premises are globally true but some world refutes the conclusion.
inline bool kripke_replay(const Witness& w, const SentenceSet& premises,
                          const Sentence& conclusion) {
  if (w.is_valuation()) return false;
  const KripkeModel& m = w.kripke();
  for (const Sentence& p : premises)
    if (!globally_true(m, p)) return false;
  return !globally_true(m, conclusion);
}

}  // namespace piref::logics
