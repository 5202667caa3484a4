#pragma once

// Shared fixtures: the flagship propositional-to-equational translation and
// its broken variants used as negative controls.

#include <map>
#include <string>
#include <vector>

#include "piref/logics/deductive_system.hpp"
#include "piref/translation/translation.hpp"

namespace piref::testing {

/// phi |-> { phi ~= top }, with substitutions carried across verbatim.
inline Translation make_cpc2ba() {
  PiInstitution cpc = logics::cpc_institution();
  PiInstitution ba = logics::ba_institution();
  Signature ba_sig = ba.only_signature();
  return Translation(
      "cpc2ba", std::move(cpc), std::move(ba),
      [ba_sig](const Signature&) { return ba_sig; },
      [ba_sig](const SignatureMorphism& m) {
        std::map<std::string, Term> images(m.term_images().begin(),
                                           m.term_images().end());
        return SignatureMorphism::substitution(ba_sig, std::move(images));
      },
      [](const Signature&, const Sentence& s) {
        return std::vector<Sentence>{Sentence(s.component(0), mk::top())};
      });
}

/// Same functor part, image fixed at { top ~= top }: preserves but cannot
/// reflect.
inline Translation make_collapse() {
  Translation base = make_cpc2ba();
  return Translation(
      "collapse", base.source(), base.target(),
      [sig = base.target().only_signature()](const Signature&) {
        return sig;
      },
      [base](const SignatureMorphism& m) { return base.map_morphism(m); },
      [](const Signature&, const Sentence&) {
        return std::vector<Sentence>{Sentence(mk::top(), mk::top())};
      });
}

/// phi |-> { phi ~= bot }: not even a semi-interpretation.
inline Translation make_tobot() {
  Translation base = make_cpc2ba();
  return Translation(
      "tobot", base.source(), base.target(),
      [sig = base.target().only_signature()](const Signature&) {
        return sig;
      },
      [base](const SignatureMorphism& m) { return base.map_morphism(m); },
      [](const Signature&, const Sentence& s) {
        return std::vector<Sentence>{Sentence(s.component(0), mk::bot())};
      });
}

}  // namespace piref::testing
