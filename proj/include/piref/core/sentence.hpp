#pragma once

#include <algorithm>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

#include "piref/core/signature.hpp"
#include "piref/core/term.hpp"

namespace piref {

/// A k-tuple of terms over one signature. k = 1 gives formulas, k = 2 gives
/// equations written `lhs ~= rhs`. The tuple does not carry a signature
/// pointer; well-formedness is checked against a Signature on use, which lets
/// the same sentence live in any signature that contains its symbols.
class Sentence {
public:
  Sentence() = default;
  explicit Sentence(Term single) : components_{std::move(single)} {}
  explicit Sentence(std::vector<Term> components)
      : components_(std::move(components)) {}
  Sentence(Term lhs, Term rhs) : components_{std::move(lhs), std::move(rhs)} {}

  static Sentence formula(Term t) { return Sentence(std::move(t)); }
  static Sentence equation(Term lhs, Term rhs) {
    return Sentence(std::move(lhs), std::move(rhs));
  }

  int dimension() const { return static_cast<int>(components_.size()); }
  const std::vector<Term>& components() const { return components_; }
  const Term& component(std::size_t i) const { return components_.at(i); }

  std::size_t depth() const {
    std::size_t d = 0;
    for (const Term& t : components_) d = std::max(d, t.depth());
    return d;
  }

  int compare(const Sentence& o) const {
    if (components_.size() != o.components_.size())
      return components_.size() < o.components_.size() ? -1 : 1;
    for (std::size_t i = 0; i < components_.size(); ++i)
      if (int c = components_[i].compare(o.components_[i]); c != 0) return c;
    return 0;
  }

  bool operator==(const Sentence& o) const { return compare(o) == 0; }
  bool operator!=(const Sentence& o) const { return compare(o) != 0; }
  bool operator<(const Sentence& o) const { return compare(o) < 0; }

  template <typename Fn>
  void for_each_subterm(Fn&& fn) const {
    for (const Term& t : components_) t.for_each_subterm(fn);
  }

private:
  std::vector<Term> components_;
};

inline std::string to_string(const Sentence& s) {
  std::string out;
  for (std::size_t i = 0; i < s.components().size(); ++i) {
    if (i) out += " ~= ";
    out += syntax::to_string(s.components()[i]);
  }
  return out;
}

inline bool well_formed(const Signature& sig, const Sentence& s) {
  if (s.dimension() != sig.dimension()) return false;
  for (const Term& t : s.components())
    if (!sig.validates_term(t)) return false;
  return true;
}

inline void require_sentence(const Signature& sig, const Sentence& s) {
  if (s.dimension() != sig.dimension())
    throw InputError("sentence '" + to_string(s) + "' has dimension " +
                     std::to_string(s.dimension()) + ", signature '" +
                     sig.id() + "' expects " +
                     std::to_string(sig.dimension()));
  for (const Term& t : s.components()) sig.require_term(t);
}

/// Canonical finite sentence set: sorted, duplicate-free, deterministic
/// iteration order.
class SentenceSet {
public:
  SentenceSet() = default;
  SentenceSet(std::initializer_list<Sentence> items)
      : SentenceSet(std::vector<Sentence>(items)) {}
  explicit SentenceSet(std::vector<Sentence> items)
      : items_(std::move(items)) {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
  }

  bool empty() const { return items_.empty(); }
  std::size_t size() const { return items_.size(); }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  const std::vector<Sentence>& items() const { return items_; }

  bool contains(const Sentence& s) const {
    return std::binary_search(items_.begin(), items_.end(), s);
  }

  SentenceSet union_with(const SentenceSet& other) const {
    std::vector<Sentence> merged;
    merged.reserve(items_.size() + other.items_.size());
    std::merge(items_.begin(), items_.end(), other.items_.begin(),
               other.items_.end(), std::back_inserter(merged));
    return SentenceSet(std::move(merged));
  }

  SentenceSet with(const Sentence& s) const {
    std::vector<Sentence> copy = items_;
    copy.push_back(s);
    return SentenceSet(std::move(copy));
  }

  bool subset_of(const SentenceSet& other) const {
    return std::includes(other.items_.begin(), other.items_.end(),
                         items_.begin(), items_.end());
  }

  bool operator==(const SentenceSet& o) const { return items_ == o.items_; }
  bool operator!=(const SentenceSet& o) const { return items_ != o.items_; }

private:
  std::vector<Sentence> items_;
};

inline std::string to_string(const SentenceSet& set) {
  std::string out = "{";
  bool first = true;
  for (const Sentence& s : set) {
    if (!first) out += "; ";
    out += to_string(s);
    first = false;
  }
  return out + "}";
}

/// Distinct subterm count of a sentence set, used by the modal small-model
/// bound.
inline std::size_t distinct_subterm_count(const SentenceSet& premises,
                                          const Sentence& conclusion) {
  std::set<Term> seen;
  auto visit = [&seen](const Term& t) { seen.insert(t); };
  for (const Sentence& s : premises) s.for_each_subterm(visit);
  conclusion.for_each_subterm(visit);
  return seen.size();
}

/// Sorted list of variable names occurring in the given sentences.
inline std::vector<std::string> occurring_atoms(const SentenceSet& premises,
                                                const Sentence& conclusion) {
  std::set<std::string> names;
  auto visit = [&names](const Term& t) {
    if (t.is_variable()) names.insert(t.symbol());
  };
  for (const Sentence& s : premises) s.for_each_subterm(visit);
  conclusion.for_each_subterm(visit);
  return std::vector<std::string>(names.begin(), names.end());
}

}  // namespace piref
