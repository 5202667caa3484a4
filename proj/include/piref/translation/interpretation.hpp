#pragma once

#include <string>

#include "piref/core/report.hpp"
#include "piref/corpus/check_corpus.hpp"
#include "piref/translation/translation.hpp"

namespace piref {

namespace detail {

/// Target-side status of `alpha(phi) subseteq C'(alpha(Phi))`, folded over
/// the image members: Entailed when all are, NotEntailed when some member
/// is refuted, Unknown otherwise.
inline Verdict image_entailed(const PiInstitution& target,
                              const Signature& target_sig,
                              const SentenceSet& mapped_premises,
                              const SentenceSet& image, Budget budget) {
  bool unknown = false;
  for (const Sentence& s : image) {
    Verdict v = target.entails(target_sig, mapped_premises, s, budget);
    if (v.is_not_entailed()) return v;
    if (v.is_unknown()) unknown = true;
  }
  if (unknown) return Verdict::unknown("some image verdicts unknown");
  return Verdict::entailed();
}

inline void add_outcome(CheckReport& report, const std::string& label,
                        const std::string& aspect, bool violated, bool unknown,
                        const std::string& detail) {
  if (unknown)
    report.add_unknown(label, aspect, detail);
  else if (violated)
    report.add_fail(label, aspect, detail);
  else
    report.add_pass(label, aspect);
}

}  // namespace detail

/// Consequence preservation on a corpus: whenever the source oracle entails
/// an item, every image sentence must be entailed from the image premises in
/// the target. Verdicts are corpus-relative.
inline CheckReport is_semi_interpretation(const Translation& t,
                                          const corpus::CheckCorpus& corpus,
                                          Budget budget = {}) {
  CheckReport report("semi-interpretation");
  int index = 0;
  for (const corpus::EntailmentItem& item : corpus.items) {
    ++index;
    const std::string label = "item #" + std::to_string(index);
    const Signature& src_sig = t.source().signature(item.signature.id());
    Verdict source = t.source().entails(src_sig, item.premises,
                                        item.conclusion, budget);
    if (source.is_unknown()) {
      report.add_unknown(label, "preservation",
                         "source verdict unknown: " + source.reason());
      continue;
    }
    if (!source.is_entailed()) {
      report.add_pass(label, "preservation");
      continue;
    }
    Signature target_sig = t.map_signature(src_sig);
    SentenceSet mapped_premises = translate_sentence(t, src_sig, item.premises);
    SentenceSet image = translate_sentence(t, src_sig, item.conclusion);
    Verdict target = detail::image_entailed(t.target(), target_sig,
                                            mapped_premises, image, budget);
    detail::add_outcome(
        report, label, "preservation", target.is_not_entailed(),
        target.is_unknown(),
        target.is_not_entailed()
            ? to_string(item.premises) + " |- " + to_string(item.conclusion) +
                  " holds at the source but the image fails: " +
                  to_string(target.witness())
            : target.reason());
  }
  return report;
}

/// Both directions of the interpretation condition. Preservation as above;
/// reflection demands that source non-entailments are visible in the target:
/// some image sentence must fail from the image premises.
inline CheckReport is_interpretation(const Translation& t,
                                     const corpus::CheckCorpus& corpus,
                                     Budget budget = {}) {
  CheckReport report("interpretation");
  int index = 0;
  for (const corpus::EntailmentItem& item : corpus.items) {
    ++index;
    const std::string label = "item #" + std::to_string(index);
    const Signature& src_sig = t.source().signature(item.signature.id());
    Verdict source = t.source().entails(src_sig, item.premises,
                                        item.conclusion, budget);
    if (source.is_unknown()) {
      report.add_unknown(label, "preservation",
                         "source verdict unknown: " + source.reason());
      continue;
    }
    Signature target_sig = t.map_signature(src_sig);
    SentenceSet mapped_premises = translate_sentence(t, src_sig, item.premises);
    SentenceSet image = translate_sentence(t, src_sig, item.conclusion);
    Verdict target = detail::image_entailed(t.target(), target_sig,
                                            mapped_premises, image, budget);
    if (source.is_entailed()) {
      detail::add_outcome(
          report, label, "preservation", target.is_not_entailed(),
          target.is_unknown(),
          target.is_not_entailed()
              ? to_string(item.premises) + " |- " + to_string(item.conclusion) +
                    " holds at the source but the image fails: " +
                    to_string(target.witness())
              : target.reason());
    } else {
      detail::add_outcome(
          report, label, "reflection", target.is_entailed(),
          target.is_unknown(),
          target.is_entailed()
              ? to_string(item.premises) + " |- " + to_string(item.conclusion) +
                    " fails at the source but every image sentence is " +
                    "entailed from " + to_string(mapped_premises)
              : target.reason());
    }
  }
  return report;
}

}  // namespace piref
