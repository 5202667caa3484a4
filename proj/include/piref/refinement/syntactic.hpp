#pragma once

#include <string>

#include "piref/core/institution.hpp"
#include "piref/core/report.hpp"
#include "piref/corpus/check_corpus.hpp"

namespace piref {

/// Syntactic refinement `coarse ~> fine`: every signature of the coarse
/// institution is contained in the fine institution's same-named signature,
/// and on the corpus every coarse entailment also holds in the fine logic.
/// Corpus premises are restricted to coarse sentences.
inline CheckReport is_syntactic_refinement(const PiInstitution& coarse,
                                           const PiInstitution& fine,
                                           const corpus::CheckCorpus& corpus,
                                           Budget budget = {}) {
  CheckReport report("syntactic-refinement");
  for (const Signature& sig : coarse.signatures()) {
    const std::string label = "signature '" + sig.id() + "'";
    bool found = false;
    for (const Signature& candidate : fine.signatures())
      if (candidate.id() == sig.id()) {
        found = true;
        if (sig.contained_in(candidate))
          report.add_pass(label, "containment");
        else
          report.add_fail(label, "containment",
                          "sentences over '" + sig.id() + "' in '" +
                              coarse.name() + "' are not all sentences of '" +
                              fine.name() + "'");
      }
    if (!found)
      report.add_fail(label, "containment",
                      "'" + fine.name() + "' has no signature '" + sig.id() +
                          "'");
  }
  if (!report.no_failures()) return report;

  int index = 0;
  for (const corpus::EntailmentItem& item : corpus.items) {
    ++index;
    const std::string label = "item #" + std::to_string(index);
    // Corpora travel across institutions that share signature objects, so
    // items resolve their signature by id on each side.
    const Signature& coarse_sig = coarse.signature(item.signature.id());
    Verdict source =
        coarse.entails(coarse_sig, item.premises, item.conclusion, budget);
    if (source.is_unknown()) {
      report.add_unknown(label, "consequence",
                         "source verdict unknown: " + source.reason());
      continue;
    }
    if (!source.is_entailed()) {
      report.add_pass(label, "consequence");
      continue;
    }
    const Signature& fine_sig = fine.signature(item.signature.id());
    Verdict target =
        fine.entails(fine_sig, item.premises, item.conclusion, budget);
    if (target.is_not_entailed())
      report.add_fail(label, "consequence",
                      to_string(item.premises) + " |- " +
                          to_string(item.conclusion) + " holds in '" +
                          coarse.name() + "' but fails in '" + fine.name() +
                          "': " + to_string(target.witness()));
    else if (target.is_unknown())
      report.add_unknown(label, "consequence", target.reason());
    else
      report.add_pass(label, "consequence");
  }
  return report;
}

}  // namespace piref
