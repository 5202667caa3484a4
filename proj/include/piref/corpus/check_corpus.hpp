#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "piref/core/morphism.hpp"
#include "piref/core/sentence.hpp"
#include "piref/core/signature.hpp"
#include "piref/core/verdict.hpp"

namespace piref::corpus {

/// A sampled entailment query with the verdict the generating oracle gave it.
struct EntailmentItem {
  Signature signature;
  SentenceSet premises;
  Sentence conclusion;
  Verdict::Kind label = Verdict::Kind::Unknown;
};

/// A (morphism, sentence) pair feeding naturality squares and closure
/// axiom (d).
struct MorphismSquare {
  SignatureMorphism morphism;
  Sentence sentence;
};

/// Deterministic seeded test corpus. Regenerating with the same seed and
/// parameters yields identical items.
struct CheckCorpus {
  std::uint64_t seed = 0;
  int depth = 4;
  int size = 0;
  std::vector<EntailmentItem> items;
  std::vector<MorphismSquare> squares;
};

}  // namespace piref::corpus
