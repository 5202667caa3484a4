#pragma once

#include <string>

#include "piref/core/report.hpp"
#include "piref/corpus/check_corpus.hpp"
#include "piref/translation/translation.hpp"

namespace piref {

/// Naturality of alpha on sampled squares: for each (f : S1 -> S2, phi),
///   alpha_S2(SEN(f)(phi))  ==  P(SEN'(F f))(alpha_S1(phi))
/// as sentence sets. Failures carry both sides of the offending square.
inline CheckReport check_naturality(const Translation& t,
                                    const corpus::CheckCorpus& corpus) {
  CheckReport report("naturality");
  int index = 0;
  for (const corpus::MorphismSquare& square : corpus.squares) {
    ++index;
    const std::string label = "square #" + std::to_string(index);
    const SignatureMorphism& f = square.morphism;
    Sentence moved = apply_morphism(f, square.sentence);
    SentenceSet via_source = translate_sentence(t, f.target(), moved);

    SentenceSet images = translate_sentence(t, f.source(), square.sentence);
    SignatureMorphism mapped = t.map_morphism(f);
    SentenceSet via_target = apply_morphism(mapped, images);

    if (via_source == via_target) {
      report.add_pass(label);
    } else {
      report.add_fail(label, "",
                      "square at '" + to_string(square.sentence) +
                          "' with f moving it to '" + to_string(moved) +
                          "': translating after SEN(f) gives " +
                          to_string(via_source) +
                          " but applying SEN'(F f) to the translation gives " +
                          to_string(via_target));
    }
  }
  return report;
}

}  // namespace piref
