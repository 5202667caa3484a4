#pragma once

#include <functional>
#include <string>
#include <utility>

#include "piref/core/morphism.hpp"
#include "piref/core/sentence.hpp"
#include "piref/core/signature.hpp"
#include "piref/core/verdict.hpp"

namespace piref {

/// The computable face of a closure operator: a total, deterministic,
/// budget-monotone membership test `conclusion in C(premises)` for finite
/// premise sets. Closure sets themselves are never materialized.
class ClosureOracle {
public:
  using DecideFn =
      std::function<Verdict(const SentenceSet&, const Sentence&, Budget)>;
  using ReplayFn = std::function<bool(const Witness&, const SentenceSet&,
                                      const Sentence&)>;

  ClosureOracle() = default;
  ClosureOracle(Signature signature, DecideFn decide, ReplayFn replay = {})
      : signature_(std::move(signature)),
        decide_(std::move(decide)),
        replay_(std::move(replay)) {}

  const Signature& signature() const { return signature_; }

  Verdict entails(const SentenceSet& premises, const Sentence& conclusion,
                  Budget budget = {}) const {
    for (const Sentence& p : premises) require_sentence(signature_, p);
    require_sentence(signature_, conclusion);
    return decide_(premises, conclusion, budget);
  }

  bool can_replay() const { return static_cast<bool>(replay_); }

  /// True iff the witness really falsifies `premises |- conclusion` under
  /// this oracle family's semantics.
  bool replay(const Witness& w, const SentenceSet& premises,
              const Sentence& conclusion) const {
    if (!replay_)
      throw InputError("oracle for '" + signature_.id() +
                       "' has no replay procedure");
    return replay_(w, premises, conclusion);
  }

private:
  Signature signature_;
  DecideFn decide_;
  ReplayFn replay_;
};

}  // namespace piref
