#pragma once

#include <optional>
#include <string>
#include <vector>

#include "piref/core/report.hpp"
#include "piref/specs/specification.hpp"
#include "piref/translation/multifunction.hpp"

namespace piref {

/// The local carrier of interpretation and refinement between two
/// specifications is a plain multifunction between their sentence sets.
using LocalInterpretation = Multifunction;

namespace detail {

inline Verdict local_image_entailed(const Specification& sp,
                                    const SentenceSet& image, Budget budget) {
  bool unknown = false;
  for (const Sentence& s : image) {
    Verdict v = sp.holds(s, budget);
    if (v.is_not_entailed()) return v;
    if (v.is_unknown()) unknown = true;
  }
  if (unknown) return Verdict::unknown("some image verdicts unknown");
  return Verdict::entailed();
}

}  // namespace detail

/// Local interpretation check (both directions): a corpus sentence is true
/// in `sp` exactly when its whole image is true in `refined`. Reflection
/// failures are reported apart from preservation failures.
inline CheckReport is_local_interpretation(const LocalInterpretation& i,
                                           const Specification& sp,
                                           const Specification& refined,
                                           const std::vector<Sentence>& corpus,
                                           Budget budget = {}) {
  if (i.source() != sp.outer_signature())
    throw InputError("local interpretation: multifunction source differs "
                     "from the specification's signature");
  if (i.target() != refined.outer_signature())
    throw InputError("local interpretation: multifunction target differs "
                     "from the refined specification's signature");
  CheckReport report("local-interpretation");
  int index = 0;
  for (const Sentence& s : corpus) {
    ++index;
    const std::string label = "sentence #" + std::to_string(index);
    Verdict source = sp.holds(s, budget);
    if (source.is_unknown()) {
      report.add_unknown(label, "preservation",
                         "source verdict unknown: " + source.reason());
      continue;
    }
    Verdict target = detail::local_image_entailed(refined, i.image(s), budget);
    if (source.is_entailed()) {
      if (target.is_not_entailed())
        report.add_fail(label, "preservation",
                        "'" + to_string(s) + "' is true in the source but "
                        "its image fails: " + to_string(target.witness()));
      else if (target.is_unknown())
        report.add_unknown(label, "preservation", target.reason());
      else
        report.add_pass(label, "preservation");
    } else {
      if (target.is_entailed())
        report.add_fail(label, "reflection",
                        "'" + to_string(s) + "' is not true in the source "
                        "but every image sentence is true in the target");
      else if (target.is_unknown())
        report.add_unknown(label, "reflection", target.reason());
      else
        report.add_pass(label, "reflection");
    }
  }
  return report;
}

/// Local refinement `sp ~>_i refined` on a corpus: truths of `sp` map into
/// truths of `refined`. When a witness specification is supplied, the
/// definition's premise that i interprets `sp` is discharged against it
/// first and reported under "premise/".
inline CheckReport local_refines(
    const Specification& sp, const Specification& refined,
    const LocalInterpretation& i, const std::vector<Sentence>& corpus,
    Budget budget = {},
    const std::optional<Specification>& interprets_witness = std::nullopt) {
  CheckReport report("local-refinement");
  if (interprets_witness)
    report.absorb(
        is_local_interpretation(i, sp, *interprets_witness, corpus, budget),
        "premise/");
  int index = 0;
  for (const Sentence& s : corpus) {
    ++index;
    const std::string label = "sentence #" + std::to_string(index);
    Verdict source = sp.holds(s, budget);
    if (source.is_unknown()) {
      report.add_unknown(label, "refinement",
                         "source verdict unknown: " + source.reason());
      continue;
    }
    if (!source.is_entailed()) {
      report.add_pass(label, "refinement");
      continue;
    }
    Verdict target = detail::local_image_entailed(refined, i.image(s), budget);
    if (target.is_not_entailed())
      report.add_fail(label, "refinement",
                      "'" + to_string(s) + "' is true in the source but its "
                      "image fails: " + to_string(target.witness()));
    else if (target.is_unknown())
      report.add_unknown(label, "refinement", target.reason());
    else
      report.add_pass(label, "refinement");
  }
  return report;
}

}  // namespace piref
