#pragma once

#include <string>

#include "piref/core/institution.hpp"
#include "piref/core/report.hpp"
#include "piref/corpus/check_corpus.hpp"

namespace piref::logics {

/// Sub-institution check: the smaller institution's signatures and sentences
/// embed in the larger one's, and on the corpus the larger closure restricts
/// to the smaller (the two oracles agree in both directions on the smaller
/// institution's sentences).
inline CheckReport is_sub_institution(const PiInstitution& smaller,
                                      const PiInstitution& larger,
                                      const corpus::CheckCorpus& corpus,
                                      Budget budget = {}) {
  CheckReport report("sub-institution");
  for (const Signature& sig : smaller.signatures()) {
    const std::string label = "signature '" + sig.id() + "'";
    bool found = false;
    for (const Signature& candidate : larger.signatures())
      if (candidate.id() == sig.id()) {
        found = true;
        if (sig.contained_in(candidate))
          report.add_pass(label, "containment");
        else
          report.add_fail(label, "containment",
                          "sentences of '" + smaller.name() +
                              "' do not embed in '" + larger.name() + "'");
      }
    if (!found)
      report.add_fail(label, "containment",
                      "'" + larger.name() + "' has no signature '" + sig.id() +
                          "'");
  }
  if (!report.no_failures()) return report;

  int index = 0;
  for (const corpus::EntailmentItem& item : corpus.items) {
    ++index;
    const std::string label = "item #" + std::to_string(index);
    const Signature& inner_sig = smaller.signature(item.signature.id());
    Verdict inner = smaller.entails(inner_sig, item.premises,
                                    item.conclusion, budget);
    const Signature& outer_sig = larger.signature(item.signature.id());
    Verdict outer =
        larger.entails(outer_sig, item.premises, item.conclusion, budget);
    if (inner.is_unknown() || outer.is_unknown()) {
      report.add_unknown(label, "restriction", "verdicts unknown");
      continue;
    }
    if (inner.kind() == outer.kind()) {
      report.add_pass(label, "restriction");
    } else {
      report.add_fail(label, "restriction",
                      to_string(item.premises) + " |- " +
                          to_string(item.conclusion) + " is " +
                          to_string(inner) + " in '" + smaller.name() +
                          "' but " + to_string(outer) + " in '" +
                          larger.name() + "'");
    }
  }
  return report;
}

}  // namespace piref::logics
