#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "piref/core/institution.hpp"
#include "piref/corpus/check_corpus.hpp"
#include "piref/corpus/rng.hpp"

namespace piref::corpus {

/// Sampling knobs shared by the generators. The variable cap keeps corpora
/// to a handful of atoms (4 by default) so that the bounded modal searches
/// stay exact and fast.
struct GenOptions {
  int depth = 4;
  int variable_cap = 4;
  Budget budget{};
};

namespace detail {

inline std::vector<std::string> leaf_variables(const Signature& sig, int cap) {
  std::vector<std::string> vars = sig.variables();
  if (cap > 0 && static_cast<int>(vars.size()) > cap)
    vars.resize(static_cast<std::size_t>(cap));
  return vars;
}

constexpr std::uint64_t kCountCap = 1ull << 62;

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kCountCap / b) return kCountCap;
  return a * b;
}

inline std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return (a > kCountCap - b) ? kCountCap : a + b;
}

/// Number of distinct terms of depth <= d (saturating).
inline std::uint64_t count_terms(const Signature& sig, int cap, int d) {
  std::uint64_t leaves = leaf_variables(sig, cap).size();
  for (const Connective& c : sig.connectives())
    if (c.arity == 0) leaves = saturating_add(leaves, 1);
  std::uint64_t n = leaves;
  for (int i = 0; i < d; ++i) {
    std::uint64_t next = leaves;
    for (const Connective& c : sig.connectives()) {
      if (c.arity == 0) continue;
      std::uint64_t combos = 1;
      for (int a = 0; a < c.arity; ++a) combos = saturating_mul(combos, n);
      next = saturating_add(next, combos);
    }
    n = next;
  }
  return n;
}

inline std::uint64_t count_sentences(const Signature& sig, int cap, int d) {
  std::uint64_t terms = count_terms(sig, cap, d);
  std::uint64_t n = 1;
  for (int i = 0; i < sig.dimension(); ++i) n = saturating_mul(n, terms);
  return n;
}

inline Term random_term(SeededRng& rng, const Signature& sig,
                        const std::vector<std::string>& vars, int depth) {
  std::vector<const Connective*> by_arity;
  for (const Connective& c : sig.connectives())
    if (depth > 0 ? true : c.arity == 0) by_arity.push_back(&c);
  // Leaves: variables plus nullary connectives. At positive depth,
  // connectives get picked twice as often as raw leaves.
  bool pick_var =
      !vars.empty() && (depth == 0 ? rng.chance(70) : rng.chance(30));
  if (pick_var) return Term::variable(vars[rng.below(vars.size())]);
  if (by_arity.empty()) return Term::variable(vars[rng.below(vars.size())]);
  const Connective& c = *by_arity[rng.below(by_arity.size())];
  std::vector<Term> args;
  for (int i = 0; i < c.arity; ++i)
    args.push_back(random_term(rng, sig, vars, depth - 1));
  return Term::apply(c.symbol, std::move(args));
}

inline Sentence random_sentence(SeededRng& rng, const Signature& sig,
                                const std::vector<std::string>& vars,
                                int depth) {
  std::vector<Term> components;
  for (int i = 0; i < sig.dimension(); ++i)
    components.push_back(random_term(rng, sig, vars, depth));
  return Sentence(std::move(components));
}

/// Enumerate all terms of depth <= d. Only invoked when the count is small.
inline void enumerate_terms(const Signature& sig,
                            const std::vector<std::string>& vars, int d,
                            std::vector<Term>& out) {
  std::vector<Term> current;
  for (const std::string& v : vars) current.push_back(Term::variable(v));
  for (const Connective& c : sig.connectives())
    if (c.arity == 0) current.push_back(Term::apply(c.symbol, {}));
  out = current;
  for (int depth = 1; depth <= d; ++depth) {
    std::vector<Term> next = out;
    for (const Connective& c : sig.connectives()) {
      if (c.arity == 0) continue;
      if (c.arity == 1) {
        for (const Term& a : out) next.push_back(Term::apply(c.symbol, {a}));
      } else if (c.arity == 2) {
        for (const Term& a : out)
          for (const Term& b : out)
            next.push_back(Term::apply(c.symbol, {a, b}));
      } else {
        continue;  // arities above 2 take the sampling path
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    out = std::move(next);
  }
}

}  // namespace detail

/// Deterministic list of `count` distinct sentences of depth <= `depth`.
/// Rejects requests that exceed the number of distinct sentences at that
/// depth, reporting the attainable maximum.
inline std::vector<Sentence> gen_sentences(const Signature& sig, int depth,
                                           int count, std::uint64_t seed,
                                           int variable_cap = 4) {
  if (depth < 0) throw InputError("gen_sentences: depth must be >= 0");
  if (count < 1) throw InputError("gen_sentences: count must be >= 1");
  std::vector<std::string> vars = detail::leaf_variables(sig, variable_cap);
  std::uint64_t max = detail::count_sentences(sig, variable_cap, depth);
  if (static_cast<std::uint64_t>(count) > max)
    throw InputError("gen_sentences: only " + std::to_string(max) +
                     " distinct sentences exist at depth " +
                     std::to_string(depth));
  SeededRng rng(seed);
  bool enumerable = max <= 4096 && sig.dimension() <= 2;
  for (const Connective& c : sig.connectives())
    if (c.arity > 2) enumerable = false;  // enumerate_terms stops at binary
  // Small spaces are enumerated and sampled; large ones are drawn with
  // rejection, where collisions are negligible.
  if (enumerable) {
    std::vector<Term> terms;
    detail::enumerate_terms(sig, vars, depth, terms);
    std::vector<Sentence> all;
    if (sig.dimension() == 1) {
      for (const Term& t : terms) all.emplace_back(t);
    } else {
      for (const Term& a : terms)
        for (const Term& b : terms) all.emplace_back(a, b);
    }
    rng.shuffle(all);
    all.resize(static_cast<std::size_t>(count));
    return all;
  }
  std::vector<Sentence> out;
  std::set<Sentence> seen;
  std::uint64_t attempts = 0;
  std::uint64_t attempt_cap = 1000 + 50ull * static_cast<std::uint64_t>(count);
  while (out.size() < static_cast<std::size_t>(count)) {
    if (++attempts > attempt_cap)
      throw InputError("gen_sentences: sampling starved before reaching " +
                       std::to_string(count) + " distinct sentences");
    Sentence s = detail::random_sentence(rng, sig, vars, depth);
    if (seen.insert(s).second) out.push_back(std::move(s));
  }
  return out;
}

/// Mixed labeled corpus of entailment queries over one signature, verified
/// by the institution's own oracle at generation time. Aims for at least a
/// quarter Entailed and a quarter NotEntailed items; rejects generation runs
/// whose Unknown rate exceeds one half.
inline CheckCorpus gen_entailment_corpus(const PiInstitution& inst,
                                         const Signature& sig, int size,
                                         std::uint64_t seed,
                                         GenOptions options = {}) {
  if (size < 1) throw InputError("gen_entailment_corpus: size must be >= 1");
  inst.require_listed(sig);
  const ClosureOracle& oracle = inst.oracle_for(sig);
  std::vector<std::string> vars =
      detail::leaf_variables(sig, options.variable_cap);
  SeededRng rng(seed ^ 0x5eedc0de5eedc0deULL);

  CheckCorpus corpus;
  corpus.seed = seed;
  corpus.depth = options.depth;
  corpus.size = size;

  int entailed = 0;
  int not_entailed = 0;
  int unknown = 0;
  std::uint64_t unknown_seen = 0;
  int quota = size / 4;
  std::uint64_t attempts = 0;
  std::uint64_t attempt_cap = 40ull * static_cast<std::uint64_t>(size) + 400;

  while (static_cast<int>(corpus.items.size()) < size) {
    if (++attempts > attempt_cap) break;
    int premise_count = static_cast<int>(rng.below(4));
    std::vector<Sentence> premises;
    for (int i = 0; i < premise_count; ++i)
      premises.push_back(
          detail::random_sentence(rng, sig, vars, options.depth));
    SentenceSet premise_set{std::vector<Sentence>(premises)};
    Sentence conclusion =
        (!premises.empty() && rng.chance(35))
            ? premises[rng.below(premises.size())]
            : detail::random_sentence(rng, sig, vars, options.depth);
    Verdict verdict = oracle.entails(premise_set, conclusion, options.budget);
    if (verdict.is_unknown()) ++unknown_seen;
    // Once the free slots are needed to fill the 25% quotas, keep only
    // items that reduce a deficit.
    int remaining = size - static_cast<int>(corpus.items.size());
    int deficit_e = std::max(0, quota - entailed);
    int deficit_n = std::max(0, quota - not_entailed);
    if (remaining <= deficit_e + deficit_n) {
      if (verdict.is_entailed() && deficit_e == 0) continue;
      if (verdict.is_not_entailed() && deficit_n == 0) continue;
      if (verdict.is_unknown()) continue;
    }
    switch (verdict.kind()) {
      case Verdict::Kind::Entailed: ++entailed; break;
      case Verdict::Kind::NotEntailed: ++not_entailed; break;
      default: ++unknown; break;
    }
    corpus.items.push_back(
        {sig, std::move(premise_set), std::move(conclusion), verdict.kind()});
  }
  if (2 * unknown > size)
    throw InputError("gen_entailment_corpus: the oracle answered Unknown on "
                     "more than half of the samples; raise the budget");
  if (static_cast<int>(corpus.items.size()) < size) {
    if (2 * unknown_seen > attempts)
      throw InputError("gen_entailment_corpus: the oracle answered Unknown "
                       "on more than half of the samples; raise the budget");
    throw InputError("gen_entailment_corpus: could not reach the requested "
                     "label balance; raise depth or relax the size");
  }
  return corpus;
}

/// Deterministic (substitution, sentence) squares over a substitution-based
/// signature, for naturality and structurality checks.
inline CheckCorpus gen_morphism_squares(const PiInstitution& inst, int size,
                                        std::uint64_t seed,
                                        GenOptions options = {}) {
  if (size < 1) throw InputError("gen_morphism_squares: size must be >= 1");
  if (inst.morphisms().empty())
    throw InputError("gen_morphism_squares: institution '" + inst.name() +
                     "' declares no morphisms");
  const Signature& sig = inst.morphisms().front().source();
  std::vector<std::string> vars =
      detail::leaf_variables(sig, options.variable_cap);
  SeededRng rng(seed ^ 0x0ddba11c0ddba11cULL);

  CheckCorpus corpus;
  corpus.seed = seed;
  corpus.depth = options.depth;
  corpus.size = size;
  for (int i = 0; i < size; ++i) {
    std::map<std::string, Term> images;
    for (const std::string& v : vars)
      if (rng.chance(60))
        images.emplace(v, detail::random_term(rng, sig, vars, 2));
    SignatureMorphism mor = SignatureMorphism::substitution(sig, images);
    Sentence s = detail::random_sentence(rng, sig, vars, options.depth);
    corpus.squares.push_back({std::move(mor), std::move(s)});
  }
  return corpus;
}

}  // namespace piref::corpus
