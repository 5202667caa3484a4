#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "piref/core/term.hpp"

namespace piref {

/// Thrown when an operation is handed input that violates its contract
/// (wrong signature, dimension mismatch, unresolvable name, ...).
class InputError : public std::invalid_argument {
public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

struct Connective {
  std::string symbol;
  int arity = 0;

  bool operator==(const Connective& o) const {
    return symbol == o.symbol && arity == o.arity;
  }
};

/// A finitely presented vocabulary: connectives with arities plus an ordered
/// pool of variable symbols, together with the sentence dimension k
/// (k = 1 formulas, k = 2 equations).
class Signature {
public:
  Signature() = default;

  Signature(std::string id, int dimension, std::vector<Connective> connectives,
            std::vector<std::string> variables)
      : id_(std::move(id)),
        dimension_(dimension),
        connectives_(std::move(connectives)),
        variables_(std::move(variables)) {
    if (dimension_ < 1)
      throw InputError("signature '" + id_ + "': dimension must be >= 1");
    std::set<std::string> seen;
    for (const Connective& c : connectives_) {
      if (c.arity < 0)
        throw InputError("signature '" + id_ + "': negative arity for '" +
                         c.symbol + "'");
      if (!seen.insert(c.symbol).second)
        throw InputError("signature '" + id_ + "': duplicate connective '" +
                         c.symbol + "'");
      arity_.emplace(c.symbol, c.arity);
    }
    for (const std::string& v : variables_) {
      if (arity_.count(v))
        throw InputError("signature '" + id_ + "': variable '" + v +
                         "' clashes with a connective");
      if (!seen.insert(v).second)
        throw InputError("signature '" + id_ + "': duplicate variable '" + v +
                         "'");
    }
  }

  const std::string& id() const { return id_; }
  int dimension() const { return dimension_; }
  const std::vector<Connective>& connectives() const { return connectives_; }
  const std::vector<std::string>& variables() const { return variables_; }

  bool has_variable(const std::string& name) const {
    return std::find(variables_.begin(), variables_.end(), name) !=
           variables_.end();
  }

  bool has_connective(const std::string& sym) const {
    return arity_.count(sym) != 0;
  }

  int arity_of(const std::string& sym) const {
    auto it = arity_.find(sym);
    if (it == arity_.end())
      throw InputError("signature '" + id_ + "': unknown connective '" + sym +
                       "'");
    return it->second;
  }

  bool validates_term(const Term& t) const {
    if (t.is_variable()) return has_variable(t.symbol());
    auto it = arity_.find(t.symbol());
    if (it == arity_.end()) return false;
    if (static_cast<std::size_t>(it->second) != t.args().size()) return false;
    for (const Term& a : t.args())
      if (!validates_term(a)) return false;
    return true;
  }

  void require_term(const Term& t) const {
    if (!validates_term(t))
      throw InputError("term '" + syntax::to_string(t) +
                       "' is not well-formed over signature '" + id_ + "'");
  }

  /// Containment used by sub-institution and syntactic-refinement checks:
  /// every sentence of *this is a sentence of `larger`.
  bool contained_in(const Signature& larger) const {
    if (dimension_ != larger.dimension_) return false;
    for (const Connective& c : connectives_) {
      if (!larger.has_connective(c.symbol)) return false;
      if (larger.arity_of(c.symbol) != c.arity) return false;
    }
    for (const std::string& v : variables_)
      if (!larger.has_variable(v)) return false;
    return true;
  }

  bool operator==(const Signature& o) const {
    return id_ == o.id_ && dimension_ == o.dimension_ &&
           connectives_ == o.connectives_ && variables_ == o.variables_;
  }
  bool operator!=(const Signature& o) const { return !(*this == o); }

private:
  std::string id_;
  int dimension_ = 1;
  std::vector<Connective> connectives_;
  std::vector<std::string> variables_;
  std::map<std::string, int> arity_;
};

}  // namespace piref
