#pragma once

#include <map>
#include <string>
#include <vector>

#include "piref/core/institution.hpp"
#include "piref/core/report.hpp"
#include "piref/corpus/check_corpus.hpp"

namespace piref {

namespace detail {

inline std::string entailment_label(const SentenceSet& premises,
                                    const Sentence& conclusion) {
  return to_string(premises) + " |- " + to_string(conclusion);
}

}  // namespace detail

/// Corpus-based audit of the closure-operator laws behind a per-signature
/// oracle:
///   (a) reflexivity: members of A are entailed by A;
///   (b) cut, the finitely observable face of idempotence: if every member
///       of D follows from A and phi follows from A u D, phi follows from A;
///   (c) monotonicity: entailments survive premise growth;
///   (d) structurality: entailments survive substitution images.
/// Failures and Unknowns are report content, never errors.
inline CheckReport check_closure_axioms(const PiInstitution& inst,
                                        const corpus::CheckCorpus& corpus,
                                        Budget budget = {}) {
  CheckReport report("closure-axioms");

  int index = 0;
  for (const corpus::EntailmentItem& item : corpus.items) {
    ++index;
    const ClosureOracle& oracle = inst.oracle_for(item.signature);
    const std::string tag = " #" + std::to_string(index);

    // (a) reflexivity, one member per item to bound the call count
    if (!item.premises.empty()) {
      const Sentence& member = *item.premises.begin();
      Verdict v = oracle.entails(item.premises, member, budget);
      if (v.is_not_entailed())
        report.add_fail("axiom-a" + tag, "reflexivity",
                        detail::entailment_label(item.premises, member) +
                            " refuted: " + to_string(v.witness()));
      else if (v.is_unknown())
        report.add_unknown("axiom-a" + tag, "reflexivity", v.reason());
      else
        report.add_pass("axiom-a" + tag, "reflexivity");
    }

    // (c) monotonicity: enlarge premises with the next item's premises
    Verdict base = oracle.entails(item.premises, item.conclusion, budget);
    {
      const corpus::EntailmentItem& other =
          corpus.items[static_cast<std::size_t>(index) % corpus.items.size()];
      SentenceSet larger = item.premises.union_with(other.premises);
      if (base.is_entailed()) {
        Verdict grown = oracle.entails(larger, item.conclusion, budget);
        if (grown.is_not_entailed())
          report.add_fail(
              "axiom-c" + tag, "monotonicity",
              detail::entailment_label(item.premises, item.conclusion) +
                  " held but " +
                  detail::entailment_label(larger, item.conclusion) +
                  " refuted: " + to_string(grown.witness()));
        else if (grown.is_unknown())
          report.add_unknown("axiom-c" + tag, "monotonicity", grown.reason());
        else
          report.add_pass("axiom-c" + tag, "monotonicity");
      } else if (base.is_unknown()) {
        report.add_unknown("axiom-c" + tag, "monotonicity", base.reason());
      } else {
        report.add_pass("axiom-c" + tag, "monotonicity");
      }
    }

    // (b) cut: D = conclusions of other items sharing this premise set
    {
      SentenceSet cut_set;
      int found = 0;
      for (const corpus::EntailmentItem& other : corpus.items) {
        if (found >= 2) break;
        if (other.label != Verdict::Kind::Entailed) continue;
        if (!(other.premises == item.premises)) continue;
        if (other.conclusion == item.conclusion) continue;
        cut_set = cut_set.with(other.conclusion);
        ++found;
      }
      if (!cut_set.empty()) {
        bool hypotheses_hold = true;
        bool hypotheses_unknown = false;
        for (const Sentence& d : cut_set) {
          Verdict vd = oracle.entails(item.premises, d, budget);
          if (vd.is_unknown()) hypotheses_unknown = true;
          if (!vd.is_entailed()) hypotheses_hold = false;
        }
        Verdict with_cut = oracle.entails(item.premises.union_with(cut_set),
                                          item.conclusion, budget);
        if (hypotheses_unknown || with_cut.is_unknown() || base.is_unknown())
          report.add_unknown("axiom-b" + tag, "cut",
                             "hypothesis or conclusion verdict unknown");
        else if (hypotheses_hold && with_cut.is_entailed() &&
                 base.is_not_entailed())
          report.add_fail(
              "axiom-b" + tag, "cut",
              detail::entailment_label(item.premises.union_with(cut_set),
                                       item.conclusion) +
                  " held with derivable extras but " +
                  detail::entailment_label(item.premises, item.conclusion) +
                  " refuted: " + to_string(base.witness()));
        else
          report.add_pass("axiom-b" + tag, "cut");
      }
    }
  }

  // (d) structurality: pair entailed items with substitution squares
  if (!corpus.squares.empty()) {
    int pair_index = 0;
    for (const corpus::EntailmentItem& item : corpus.items) {
      if (item.label != Verdict::Kind::Entailed) continue;
      const corpus::MorphismSquare& square =
          corpus.squares[static_cast<std::size_t>(pair_index++) %
                         corpus.squares.size()];
      if (!(square.morphism.source() == item.signature)) continue;
      const std::string tag = " #" + std::to_string(pair_index);
      const ClosureOracle& oracle = inst.oracle_for(item.signature);
      Verdict source = oracle.entails(item.premises, item.conclusion, budget);
      if (!source.is_entailed()) {
        if (source.is_unknown())
          report.add_unknown("axiom-d" + tag, "structurality",
                             source.reason());
        continue;
      }
      SentenceSet mapped_premises = apply_morphism(square.morphism,
                                                   item.premises);
      Sentence mapped_conclusion =
          apply_morphism(square.morphism, item.conclusion);
      const ClosureOracle& target =
          inst.oracle_for(square.morphism.target());
      Verdict image = target.entails(mapped_premises, mapped_conclusion,
                                     budget);
      if (image.is_not_entailed())
        report.add_fail(
            "axiom-d" + tag, "structurality",
            detail::entailment_label(item.premises, item.conclusion) +
                " held but its substitution image " +
                detail::entailment_label(mapped_premises, mapped_conclusion) +
                " refuted: " + to_string(image.witness()));
      else if (image.is_unknown())
        report.add_unknown("axiom-d" + tag, "structurality", image.reason());
      else
        report.add_pass("axiom-d" + tag, "structurality");
    }
  }

  return report;
}

}  // namespace piref
