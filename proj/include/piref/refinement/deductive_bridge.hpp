#pragma once

#include <string>
#include <utility>

#include "piref/logics/deductive_system.hpp"
#include "piref/translation/interpretation.hpp"

namespace piref {

/// Lift a sentence-level multifunction between two deductive systems to a
/// translation between their one-object institutions. The functor part maps
/// the single object across and reinterprets substitutions verbatim over
/// the target signature (the built-in systems share their variable pools, so
/// the reading is total; anything else is rejected when applied).
inline Translation bridge_translation(const std::string& name,
                                      const logics::DeductiveSystem& source,
                                      const logics::DeductiveSystem& target,
                                      Multifunction tau) {
  PiInstitution source_inst = logics::institution_of(source);
  PiInstitution target_inst = logics::institution_of(target);
  Signature source_sig = source.signature;
  Signature target_sig = target.signature;
  Multifunction map = std::move(tau);
  return Translation(
      name, std::move(source_inst), std::move(target_inst),
      [target_sig](const Signature&) { return target_sig; },
      [source_sig, target_sig](const SignatureMorphism& m) {
        if (!m.is_substitution())
          throw InputError("bridge translation: one-object categories only "
                           "contain substitutions");
        std::map<std::string, Term> images;
        for (const auto& [var, term] : m.term_images())
          images.emplace(var, term);
        return SignatureMorphism::substitution(target_sig, std::move(images));
      },
      [map](const Signature&, const Sentence& s) {
        return map.image(s).items();
      });
}

/// Path agreement between the deductive-system reading of the entailment
/// biconditional and its institutional counterpart through institution_of
/// and the bridge translation, item by item. Disagreements (expected 0) are
/// reported apart from the biconditional's own truth, so that a broken tau
/// shows up as a biconditional failure while the two routes still agree.
inline CheckReport check_deductive_correspondence(
    const logics::DeductiveSystem& source,
    const logics::DeductiveSystem& target, const Multifunction& tau,
    const corpus::CheckCorpus& corpus, Budget budget = {}) {
  CheckReport report("deductive-correspondence");
  Translation bridged = bridge_translation("bridge", source, target,
                                           tau);
  const PiInstitution& source_inst = bridged.source();
  const PiInstitution& target_inst = bridged.target();
  int index = 0;
  for (const corpus::EntailmentItem& item : corpus.items) {
    ++index;
    const std::string label = "item #" + std::to_string(index);

    // Deductive route.
    Verdict ded_src =
        source.oracle.entails(item.premises, item.conclusion, budget);
    SentenceSet ded_mapped = tau.image(item.premises);
    Verdict ded_tgt = detail::image_entailed(
        target_inst, target.signature, ded_mapped, tau.image(item.conclusion),
        budget);

    // Institutional route.
    const Signature& src_sig = source_inst.signature(item.signature.id());
    Verdict inst_src = source_inst.entails(src_sig, item.premises,
                                           item.conclusion, budget);
    Signature mapped_sig = bridged.map_signature(src_sig);
    SentenceSet inst_mapped =
        translate_sentence(bridged, src_sig, item.premises);
    Verdict inst_tgt = detail::image_entailed(
        target_inst, mapped_sig, inst_mapped,
        translate_sentence(bridged, src_sig, item.conclusion), budget);

    if (ded_src.is_unknown() || ded_tgt.is_unknown() ||
        inst_src.is_unknown() || inst_tgt.is_unknown()) {
      report.add_unknown(label, "path-agreement", "verdicts unknown");
      continue;
    }
    bool routes_agree = ded_src.kind() == inst_src.kind() &&
                        ded_tgt.kind() == inst_tgt.kind() &&
                        ded_mapped == inst_mapped;
    if (routes_agree)
      report.add_pass(label, "path-agreement");
    else
      report.add_fail(label, "path-agreement",
                      "deductive route gives (" + to_string(ded_src) + ", " +
                          to_string(ded_tgt) +
                          ") but the institutional route gives (" +
                          to_string(inst_src) + ", " + to_string(inst_tgt) +
                          ")");

    // The biconditional itself, reported separately.
    bool biconditional = ded_src.is_entailed() == ded_tgt.is_entailed();
    if (biconditional)
      report.add_pass(label, "biconditional");
    else
      report.add_fail(label, "biconditional",
                      to_string(item.premises) + " |- " +
                          to_string(item.conclusion) + " is " +
                          to_string(ded_src) + " at the source but its image "
                          "is " + to_string(ded_tgt) + " at the target");
  }
  return report;
}

}  // namespace piref
