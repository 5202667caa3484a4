#pragma once

#include <string>
#include <utility>
#include <vector>

#include "piref/core/institution.hpp"
#include "piref/core/oracle.hpp"
#include "piref/logics/boolean_algebra.hpp"
#include "piref/logics/cpc.hpp"
#include "piref/logics/modal.hpp"

namespace piref::logics {

struct InferenceRule {
  SentenceSet premises;
  Sentence conclusion;
};

/// A k-dimensional deductive system: a presentation (axiom and rule schemes,
/// kept as data) together with the oracle that decides its consequence
/// relation semantically.
struct DeductiveSystem {
  std::string name;
  int dimension = 1;
  Signature signature;
  SentenceSet axioms;
  std::vector<InferenceRule> rules;
  ClosureOracle oracle;
};

inline DeductiveSystem cpc_system() {
  using namespace mk;
  SentenceSet axioms({
      Sentence(imp(v("p"), imp(v("q"), v("p")))),
      Sentence(imp(imp(v("p"), imp(v("q"), v("r"))),
                   imp(imp(v("p"), v("q")), imp(v("p"), v("r"))))),
      Sentence(imp(imp(not_(v("p")), not_(v("q"))), imp(v("q"), v("p")))),
  });
  std::vector<InferenceRule> rules{
      {SentenceSet({Sentence(v("p")), Sentence(imp(v("p"), v("q")))}),
       Sentence(v("q"))}};
  return {"cpc", 1, cpc_signature(), std::move(axioms), std::move(rules),
          cpc_oracle()};
}

inline DeductiveSystem ba_system() {
  using namespace mk;
  SentenceSet axioms({
      Sentence(and_(v("p"), v("q")), and_(v("q"), v("p"))),
      Sentence(or_(v("p"), v("q")), or_(v("q"), v("p"))),
      Sentence(and_(v("p"), or_(v("p"), v("q"))), v("p")),
      Sentence(or_(v("p"), not_(v("p"))), top()),
      Sentence(and_(v("p"), not_(v("p"))), bot()),
  });
  return {"ba-eq", 2, ba_signature(), std::move(axioms), {}, ba_oracle()};
}

inline DeductiveSystem k_system() {
  using namespace mk;
  DeductiveSystem base = cpc_system();
  SentenceSet axioms = base.axioms.with(
      Sentence(imp(box(imp(v("p"), v("q"))), imp(box(v("p")), box(v("q"))))));
  std::vector<InferenceRule> rules = base.rules;
  rules.push_back(
      {SentenceSet({Sentence(v("p"))}), Sentence(box(v("p")))});
  return {"modal-k", 1, k_signature(), std::move(axioms), std::move(rules),
          k_oracle()};
}

inline DeductiveSystem s5g_system() {
  using namespace mk;
  DeductiveSystem base = k_system();
  SentenceSet axioms = base.axioms
                           .with(Sentence(imp(box(v("p")), v("p"))))
                           .with(Sentence(imp(box(v("p")), box(box(v("p"))))))
                           .with(Sentence(imp(dia(v("p")), box(dia(v("p"))))));
  return {"modal-s5g", 1, s5g_signature(), std::move(axioms),
          std::move(base.rules), s5g_oracle()};
}

/// The one-object pi-institution of a deductive system: the single signature
/// object, the identity substitution as the declared morphism, and the
/// system's oracle as the closure.
inline PiInstitution institution_of(const DeductiveSystem& system) {
  if (system.oracle.signature() != system.signature)
    throw InputError("institution_of: oracle signature differs from the "
                     "system signature");
  if (system.signature.dimension() != system.dimension)
    throw InputError("institution_of: dimension mismatch");
  for (const Sentence& ax : system.axioms)
    require_sentence(system.signature, ax);
  for (const InferenceRule& r : system.rules) {
    for (const Sentence& p : r.premises) require_sentence(system.signature, p);
    require_sentence(system.signature, r.conclusion);
  }
  return PiInstitution(system.name, {system.signature},
                       {SignatureMorphism::identity(system.signature)},
                       {system.oracle});
}

inline PiInstitution cpc_institution() { return institution_of(cpc_system()); }
inline PiInstitution ba_institution() { return institution_of(ba_system()); }
inline PiInstitution k_institution() { return institution_of(k_system()); }
inline PiInstitution s5g_institution() { return institution_of(s5g_system()); }

/// Strengthen every signature's closure by a fixed extra axiom set:
/// C'(A) = C(A u extra). Such premise-merged oracles are still reflexive,
/// monotone and idempotent, and they are syntactic refinements of the base,
/// which makes them the workhorse for refinement checks and fuzz trials.
inline PiInstitution extend_with_axioms(const PiInstitution& base,
                                        const SentenceSet& extra,
                                        const std::string& name) {
  std::vector<ClosureOracle> oracles;
  for (const Signature& sig : base.signatures()) {
    for (const Sentence& s : extra) require_sentence(sig, s);
    const ClosureOracle& inner = base.oracle_for(sig);
    ClosureOracle::ReplayFn replay;
    if (inner.can_replay())
      replay = [inner, extra](const Witness& w, const SentenceSet& premises,
                              const Sentence& conclusion) {
        return inner.replay(w, premises.union_with(extra), conclusion);
      };
    oracles.emplace_back(
        sig,
        [inner, extra](const SentenceSet& premises, const Sentence& conclusion,
                       Budget budget) {
          return inner.entails(premises.union_with(extra), conclusion, budget);
        },
        std::move(replay));
  }
  return PiInstitution(name, base.signatures(), base.morphisms(),
                       std::move(oracles));
}

/// Built-in logic lookup by CLI name: cpc, ba-eq, modal-k, modal-s5g.
inline PiInstitution builtin_institution(const std::string& name) {
  if (name == "cpc") return cpc_institution();
  if (name == "ba-eq") return ba_institution();
  if (name == "modal-k") return k_institution();
  if (name == "modal-s5g") return s5g_institution();
  throw InputError("unknown builtin logic '" + name +
                   "' (available: cpc, ba-eq, modal-k, modal-s5g)");
}

}  // namespace piref::logics
