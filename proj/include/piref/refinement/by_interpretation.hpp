#pragma once

#include <optional>
#include <string>

#include "piref/refinement/syntactic.hpp"
#include "piref/translation/interpretation.hpp"

namespace piref {

/// One refinement-by-interpretation question. The interpretant plays the
/// existential witness role: it must share the target's signatures, and the
/// user supplies it (there is no search).
struct RefinementQuery {
  PiInstitution source;
  PiInstitution target;
  Translation witness;
  std::optional<PiInstitution> candidate_interpretant;
  corpus::CheckCorpus corpus;
  Budget budget{};
};

/// `target` refines `source` by interpretation via the witness translation:
/// (1) the witness is an interpretation of the source in the interpretant;
/// (2) source entailments land image-wise inside the target's closure.
inline CheckReport is_refinement_by_interpretation(const RefinementQuery& q) {
  if (!q.candidate_interpretant)
    throw InputError("refinement by interpretation needs a candidate "
                     "interpretant institution; none was supplied");
  const PiInstitution& interpretant = *q.candidate_interpretant;
  for (const Signature& sig : q.target.signatures())
    interpretant.require_listed(sig);

  CheckReport report("refinement-by-interpretation");
  Translation into_interpretant = q.witness.with_target(interpretant);
  report.absorb(is_interpretation(into_interpretant, q.corpus, q.budget),
                "interpretation/");

  Translation into_target = q.witness.with_target(q.target);
  report.absorb(is_semi_interpretation(into_target, q.corpus, q.budget),
                "refinement/");
  return report;
}

/// Replay of the characterization lemma on a corpus: when the witness is an
/// interpretation into the interpretant and the interpretant's entailments
/// survive into the refined institution, source entailments must land in
/// the refined institution's closure. Items where every hypothesis verdict
/// passes but the conclusion fails are the violations; expected count 0.
inline CheckReport check_lemma1(const PiInstitution& source,
                                const PiInstitution& refined,
                                const PiInstitution& interpretant,
                                const Translation& witness,
                                const corpus::CheckCorpus& corpus,
                                Budget budget = {}) {
  CheckReport report("lemma1-replay");
  Translation into_interpretant = witness.with_target(interpretant);
  Translation into_refined = witness.with_target(refined);
  int index = 0;
  for (const corpus::EntailmentItem& item : corpus.items) {
    ++index;
    const std::string label = "item #" + std::to_string(index);
    const Signature& src_sig = source.signature(item.signature.id());
    Verdict src = source.entails(src_sig, item.premises,
                                 item.conclusion, budget);
    if (src.is_unknown()) {
      report.add_unknown(label, "hypothesis",
                         "source verdict unknown: " + src.reason());
      continue;
    }
    Signature target_sig = into_interpretant.map_signature(src_sig);
    SentenceSet mapped_premises =
        translate_sentence(witness, src_sig, item.premises);
    SentenceSet image = translate_sentence(witness, src_sig, item.conclusion);

    Verdict in_interpretant = detail::image_entailed(
        interpretant, target_sig, mapped_premises, image, budget);
    // Hypothesis 1: the interpretation biconditional on this item.
    bool hyp_interpretation =
        (src.is_entailed() && in_interpretant.is_entailed()) ||
        (src.is_not_entailed() && in_interpretant.is_not_entailed());
    // Hypothesis 2: interpretant entailments survive into the refined logic.
    bool hyp_unknown = in_interpretant.is_unknown();
    bool hyp_refine = true;
    for (const Sentence& s : image) {
      Verdict v0 =
          interpretant.entails(target_sig, mapped_premises, s, budget);
      if (v0.is_unknown()) {
        hyp_unknown = true;
        continue;
      }
      if (!v0.is_entailed()) continue;
      Verdict v1 = refined.entails(target_sig, mapped_premises, s, budget);
      if (v1.is_unknown()) hyp_unknown = true;
      else if (!v1.is_entailed()) hyp_refine = false;
    }
    if (hyp_unknown) {
      report.add_unknown(label, "hypothesis", "hypothesis verdicts unknown");
      continue;
    }
    if (!hyp_interpretation || !hyp_refine) {
      report.add_pass(label, "hypothesis-not-met");
      continue;
    }
    if (!src.is_entailed()) {
      report.add_pass(label, "conclusion");
      continue;
    }
    Verdict conclusion = detail::image_entailed(refined, target_sig,
                                                mapped_premises, image, budget);
    if (conclusion.is_unknown())
      report.add_unknown(label, "conclusion", conclusion.reason());
    else if (conclusion.is_not_entailed())
      report.add_fail(label, "conclusion",
                      "hypotheses hold but " + to_string(item.premises) +
                          " |- " + to_string(item.conclusion) +
                          " does not land in the refined closure: " +
                          to_string(conclusion.witness()));
    else
      report.add_pass(label, "conclusion");
  }
  return report;
}

}  // namespace piref
