#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "piref/core/sentence.hpp"
#include "piref/core/signature.hpp"
#include "piref/core/term.hpp"

namespace piref {

/// A signature morphism. Two kinds cover everything the framework needs:
///   - symbol-map: connectives map to equal-arity connectives and variables
///     to variables, possibly across different signatures;
///   - substitution: an endomap of one signature's sentences replacing every
///     pool variable by a term (unmapped variables default to themselves).
class SignatureMorphism {
public:
  enum class Kind { SymbolMap, Substitution };

  static SignatureMorphism symbol_map(
      Signature source, Signature target,
      std::map<std::string, std::string> connective_map,
      std::map<std::string, std::string> variable_map) {
    if (source.dimension() != target.dimension())
      throw InputError("symbol-map: source and target dimensions differ");
    for (const Connective& c : source.connectives()) {
      std::string image = c.symbol;
      auto it = connective_map.find(c.symbol);
      if (it != connective_map.end()) image = it->second;
      if (!target.has_connective(image))
        throw InputError("symbol-map: '" + c.symbol + "' maps to '" + image +
                         "' which is not a connective of '" + target.id() +
                         "'");
      if (target.arity_of(image) != c.arity)
        throw InputError("symbol-map: '" + c.symbol + "' -> '" + image +
                         "' does not preserve arity");
      connective_map[c.symbol] = image;
    }
    for (const std::string& v : source.variables()) {
      std::string image = v;
      auto it = variable_map.find(v);
      if (it != variable_map.end()) image = it->second;
      if (!target.has_variable(image))
        throw InputError("symbol-map: variable '" + v + "' maps to '" + image +
                         "' which is not in the pool of '" + target.id() +
                         "'");
      variable_map[v] = image;
    }
    SignatureMorphism m;
    m.kind_ = Kind::SymbolMap;
    m.source_ = std::move(source);
    m.target_ = std::move(target);
    m.symbol_images_ = std::move(connective_map);
    m.variable_symbol_images_ = std::move(variable_map);
    return m;
  }

  /// Substitution over `sig`; variables absent from `images` map to
  /// themselves, so the result is total on the pool.
  static SignatureMorphism substitution(Signature sig,
                                        std::map<std::string, Term> images) {
    for (const auto& [var, term] : images) {
      if (!sig.has_variable(var))
        throw InputError("substitution: '" + var +
                         "' is not a pool variable of '" + sig.id() + "'");
      sig.require_term(term);
    }
    for (const std::string& v : sig.variables())
      if (!images.count(v)) images.emplace(v, Term::variable(v));
    SignatureMorphism m;
    m.kind_ = Kind::Substitution;
    m.source_ = sig;
    m.target_ = std::move(sig);
    m.term_images_ = std::move(images);
    return m;
  }

  /// The identity substitution i_V.
  static SignatureMorphism identity(Signature sig) {
    return substitution(std::move(sig), {});
  }

  Kind kind() const { return kind_; }
  bool is_substitution() const { return kind_ == Kind::Substitution; }
  const Signature& source() const { return source_; }
  const Signature& target() const { return target_; }
  const std::map<std::string, Term>& term_images() const {
    return term_images_;
  }
  const std::map<std::string, std::string>& symbol_images() const {
    return symbol_images_;
  }
  const std::map<std::string, std::string>& variable_symbol_images() const {
    return variable_symbol_images_;
  }

  bool is_identity() const {
    if (kind_ == Kind::Substitution) {
      for (const auto& [var, term] : term_images_)
        if (!term.is_variable() || term.symbol() != var) return false;
      return true;
    }
    if (source_ != target_) return false;
    for (const auto& [sym, image] : symbol_images_)
      if (sym != image) return false;
    for (const auto& [var, image] : variable_symbol_images_)
      if (var != image) return false;
    return true;
  }

  Term apply_term(const Term& t) const {
    if (kind_ == Kind::Substitution) {
      if (t.is_variable()) {
        auto it = term_images_.find(t.symbol());
        if (it == term_images_.end())
          throw InputError("substitution: variable '" + t.symbol() +
                           "' outside the pool of '" + source_.id() + "'");
        return it->second;
      }
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const Term& a : t.args()) args.push_back(apply_term(a));
      return Term::apply(t.symbol(), std::move(args));
    }
    if (t.is_variable()) {
      auto it = variable_symbol_images_.find(t.symbol());
      if (it == variable_symbol_images_.end())
        throw InputError("symbol-map: variable '" + t.symbol() +
                         "' outside the pool of '" + source_.id() + "'");
      return Term::variable(it->second);
    }
    auto it = symbol_images_.find(t.symbol());
    if (it == symbol_images_.end())
      throw InputError("symbol-map: connective '" + t.symbol() +
                       "' outside signature '" + source_.id() + "'");
    std::vector<Term> args;
    args.reserve(t.args().size());
    for (const Term& a : t.args()) args.push_back(apply_term(a));
    return Term::apply(it->second, std::move(args));
  }

  bool operator==(const SignatureMorphism& o) const {
    return kind_ == o.kind_ && source_ == o.source_ && target_ == o.target_ &&
           term_images_ == o.term_images_ &&
           symbol_images_ == o.symbol_images_ &&
           variable_symbol_images_ == o.variable_symbol_images_;
  }
  bool operator!=(const SignatureMorphism& o) const { return !(*this == o); }

private:
  Kind kind_ = Kind::Substitution;
  Signature source_;
  Signature target_;
  std::map<std::string, Term> term_images_;               // substitution
  std::map<std::string, std::string> symbol_images_;      // symbol-map
  std::map<std::string, std::string> variable_symbol_images_;
};

/// SEN(f): componentwise application of a morphism to a sentence over
/// f.source. Rejects sentences of the wrong dimension or with symbols
/// outside the source signature.
inline Sentence apply_morphism(const SignatureMorphism& f, const Sentence& s) {
  require_sentence(f.source(), s);
  std::vector<Term> out;
  out.reserve(s.components().size());
  for (const Term& t : s.components()) out.push_back(f.apply_term(t));
  return Sentence(std::move(out));
}

inline SentenceSet apply_morphism(const SignatureMorphism& f,
                                  const SentenceSet& set) {
  std::vector<Sentence> out;
  out.reserve(set.size());
  for (const Sentence& s : set) out.push_back(apply_morphism(f, s));
  return SentenceSet(std::move(out));
}

/// Composition g.f: apply f first, then g, so that
/// apply_morphism(compose(g, f), s) == apply_morphism(g, apply_morphism(f, s)).
/// For substitutions this is the extension law: v maps to g*(f(v)).
inline SignatureMorphism compose(const SignatureMorphism& g,
                                 const SignatureMorphism& f) {
  if (f.target() != g.source())
    throw InputError("compose: target of inner morphism differs from source "
                     "of outer morphism");
  if (f.kind() != g.kind())
    throw InputError("compose: morphism kinds are incompatible");
  if (f.kind() == SignatureMorphism::Kind::Substitution) {
    std::map<std::string, Term> images;
    for (const auto& [var, term] : f.term_images())
      images.emplace(var, g.apply_term(term));
    return SignatureMorphism::substitution(f.source(), std::move(images));
  }
  std::map<std::string, std::string> conns;
  std::map<std::string, std::string> vars;
  for (const auto& [sym, mid] : f.symbol_images())
    conns.emplace(sym, g.symbol_images().at(mid));
  for (const auto& [var, mid] : f.variable_symbol_images())
    vars.emplace(var, g.variable_symbol_images().at(mid));
  return SignatureMorphism::symbol_map(f.source(), g.target(),
                                       std::move(conns), std::move(vars));
}

}  // namespace piref
