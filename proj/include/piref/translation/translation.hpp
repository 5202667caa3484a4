#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "piref/core/institution.hpp"
#include "piref/corpus/check_corpus.hpp"
#include "piref/translation/multifunction.hpp"

namespace piref {

/// A translation between pi-institutions: a functor part on signature
/// objects and declared morphisms, plus a per-signature multifunction on
/// sentences.
class Translation {
public:
  using SignatureMap = std::function<Signature(const Signature&)>;
  using MorphismMap = std::function<SignatureMorphism(const SignatureMorphism&)>;
  using SentenceMap =
      std::function<std::vector<Sentence>(const Signature&, const Sentence&)>;

  Translation() = default;
  Translation(std::string name, PiInstitution source, PiInstitution target,
              SignatureMap map_signature, MorphismMap map_morphism,
              SentenceMap map_sentence)
      : name_(std::move(name)),
        source_(std::move(source)),
        target_(std::move(target)),
        map_signature_(std::move(map_signature)),
        map_morphism_(std::move(map_morphism)),
        map_sentence_(std::move(map_sentence)) {}

  const std::string& name() const { return name_; }
  const PiInstitution& source() const { return source_; }
  const PiInstitution& target() const { return target_; }

  Signature map_signature(const Signature& sig) const {
    source_.require_listed(sig);
    Signature image = map_signature_(sig);
    target_.require_listed(image);
    return image;
  }

  SignatureMorphism map_morphism(const SignatureMorphism& m) const {
    return map_morphism_(m);
  }

  /// alpha_Sigma as a multifunction at one source signature.
  Multifunction at(const Signature& sig) const {
    Signature image = map_signature(sig);
    SentenceMap map = map_sentence_;
    return Multifunction(sig, image, [map, sig](const Sentence& s) {
      return map(sig, s);
    });
  }

  /// Swap the target institution while keeping F and alpha; used to read the
  /// same translation into a candidate interpretant that shares the target's
  /// signatures.
  Translation with_target(PiInstitution new_target) const {
    for (const Signature& sig : target_.signatures())
      new_target.require_listed(sig);
    Translation copy = *this;
    copy.target_ = std::move(new_target);
    return copy;
  }

private:
  std::string name_;
  PiInstitution source_;
  PiInstitution target_;
  SignatureMap map_signature_;
  MorphismMap map_morphism_;
  SentenceMap map_sentence_;
};

/// alpha_Sigma(phi); image sentences validated over F(Sigma).
inline SentenceSet translate_sentence(const Translation& t,
                                      const Signature& sig,
                                      const Sentence& s) {
  return t.at(sig).image(s);
}

inline SentenceSet translate_sentence(const Translation& t,
                                      const Signature& sig,
                                      const SentenceSet& set) {
  return t.at(sig).image(set);
}

/// The identity translation of an institution.
inline Translation identity_translation(const PiInstitution& inst) {
  return Translation(
      "identity", inst, inst, [](const Signature& sig) { return sig; },
      [](const SignatureMorphism& m) { return m; },
      [](const Signature&, const Sentence& s) {
        return std::vector<Sentence>{s};
      });
}

struct TranslationFlags {
  bool self = false;
  bool functional = false;
  bool identity = false;
};

/// Classify a translation on a corpus: self iff F fixes the declared
/// objects and morphisms, functional iff every sampled image is a
/// singleton, identity iff every sampled image is exactly {phi}.
inline TranslationFlags classify(const Translation& t,
                                 const corpus::CheckCorpus& corpus) {
  TranslationFlags flags;
  flags.self = true;
  for (const Signature& sig : t.source().signatures())
    if (!(t.map_signature(sig) == sig)) flags.self = false;
  if (flags.self)
    for (const SignatureMorphism& m : t.source().morphisms())
      if (!(t.map_morphism(m) == m)) flags.self = false;

  flags.functional = true;
  flags.identity = true;
  for (const corpus::EntailmentItem& item : corpus.items) {
    auto probe = [&](const Sentence& s) {
      SentenceSet image = translate_sentence(t, item.signature, s);
      if (image.size() != 1) flags.functional = false;
      if (!(image == SentenceSet{s})) flags.identity = false;
    };
    for (const Sentence& p : item.premises) probe(p);
    probe(item.conclusion);
  }
  return flags;
}

}  // namespace piref
