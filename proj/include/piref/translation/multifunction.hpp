#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "piref/core/morphism.hpp"
#include "piref/core/sentence.hpp"
#include "piref/core/signature.hpp"

namespace piref {

/// Set-valued sentence map between two signatures. Images are required to
/// be finite, nonempty and well-formed over the target; an empty image would
/// make every preservation condition vacuously true, so it is rejected as
/// ill-formed input.
class Multifunction {
public:
  using MapFn = std::function<std::vector<Sentence>(const Sentence&)>;

  Multifunction() = default;
  Multifunction(Signature source, Signature target, MapFn map)
      : source_(std::move(source)),
        target_(std::move(target)),
        map_(std::move(map)) {}

  const Signature& source() const { return source_; }
  const Signature& target() const { return target_; }

  SentenceSet image(const Sentence& s) const {
    require_sentence(source_, s);
    std::vector<Sentence> raw = map_(s);
    if (raw.empty())
      throw InputError("multifunction: empty image of '" + to_string(s) +
                       "' (images must be nonempty)");
    for (const Sentence& out : raw) require_sentence(target_, out);
    return SentenceSet(std::move(raw));
  }

  /// Elementwise extension to sets: the union of member images.
  SentenceSet image(const SentenceSet& set) const {
    SentenceSet out;
    for (const Sentence& s : set) out = out.union_with(image(s));
    return out;
  }

private:
  Signature source_;
  Signature target_;
  MapFn map_;
};

/// The singleton translation induced by a signature morphism:
/// phi maps to {SEN(sigma)(phi)}.
inline Multifunction induced_translation(const SignatureMorphism& sigma) {
  return Multifunction(
      sigma.source(), sigma.target(),
      [sigma](const Sentence& s) {
        return std::vector<Sentence>{apply_morphism(sigma, s)};
      });
}

/// Identity multifunction on one signature.
inline Multifunction identity_multifunction(const Signature& sig) {
  return Multifunction(sig, sig, [](const Sentence& s) {
    return std::vector<Sentence>{s};
  });
}

}  // namespace piref
