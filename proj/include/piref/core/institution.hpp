#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "piref/core/morphism.hpp"
#include "piref/core/oracle.hpp"

namespace piref {

/// A finitely presented pi-institution: signature objects, declared
/// morphisms, and one closure oracle per signature. The declared morphism
/// list is a sample of the category (identities plus whatever the user
/// names); substitution categories admit arbitrary further substitutions,
/// which corpus generators produce on demand.
class PiInstitution {
public:
  PiInstitution() = default;

  PiInstitution(std::string name, std::vector<Signature> signatures,
                std::vector<SignatureMorphism> morphisms,
                std::vector<ClosureOracle> oracles)
      : name_(std::move(name)),
        signatures_(std::move(signatures)),
        morphisms_(std::move(morphisms)) {
    for (const Signature& sig : signatures_) {
      if (by_id_.count(sig.id()))
        throw InputError("institution '" + name_ + "': duplicate signature '" +
                         sig.id() + "'");
      by_id_.emplace(sig.id(), sig);
    }
    for (const SignatureMorphism& m : morphisms_) {
      require_listed(m.source());
      require_listed(m.target());
    }
    for (ClosureOracle& o : oracles) {
      if (!by_id_.count(o.signature().id()))
        throw InputError("institution '" + name_ + "': oracle for unlisted "
                         "signature '" + o.signature().id() + "'");
      oracles_.emplace(o.signature().id(), std::move(o));
    }
    for (const Signature& sig : signatures_)
      if (!oracles_.count(sig.id()))
        throw InputError("institution '" + name_ + "': no oracle for "
                         "signature '" + sig.id() + "'");
  }

  const std::string& name() const { return name_; }
  const std::vector<Signature>& signatures() const { return signatures_; }
  const std::vector<SignatureMorphism>& morphisms() const {
    return morphisms_;
  }

  bool lists(const Signature& sig) const {
    auto it = by_id_.find(sig.id());
    return it != by_id_.end() && it->second == sig;
  }

  void require_listed(const Signature& sig) const {
    if (!lists(sig))
      throw InputError("institution '" + name_ + "' does not list signature '" +
                       sig.id() + "'");
  }

  const Signature& signature(const std::string& id) const {
    auto it = by_id_.find(id);
    if (it == by_id_.end())
      throw InputError("institution '" + name_ + "' has no signature '" + id +
                       "'");
    return it->second;
  }

  /// Sole signature of a one-object institution.
  const Signature& only_signature() const {
    if (signatures_.size() != 1)
      throw InputError("institution '" + name_ +
                       "' does not have exactly one signature");
    return signatures_.front();
  }

  const ClosureOracle& oracle_for(const Signature& sig) const {
    require_listed(sig);
    return oracles_.at(sig.id());
  }

  Verdict entails(const Signature& sig, const SentenceSet& premises,
                  const Sentence& conclusion, Budget budget = {}) const {
    return oracle_for(sig).entails(premises, conclusion, budget);
  }

private:
  std::string name_;
  std::vector<Signature> signatures_;
  std::vector<SignatureMorphism> morphisms_;
  std::map<std::string, Signature> by_id_;
  std::map<std::string, ClosureOracle> oracles_;
};

/// Membership query against one signature's closure operator; the single
/// computable surface the whole framework is built on.
inline Verdict entails(const PiInstitution& inst, const Signature& sig,
                       const SentenceSet& premises, const Sentence& conclusion,
                       Budget budget = {}) {
  return inst.entails(sig, premises, conclusion, budget);
}

}  // namespace piref
