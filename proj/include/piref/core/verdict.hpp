#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "piref/core/sentence.hpp"

namespace piref {

/// Resource bound handed to closure oracles. Interpretation is per oracle:
/// truth-table oracles read it as the maximum number of distinct atoms to
/// enumerate, Kripke oracles as the world bound. The default keeps every
/// built-in truth-table oracle exact for the full 8-variable pool and the
/// S5 oracle exact for up to 4 occurring atoms.
struct Budget {
  int limit = 16;
};

/// A boolean assignment to atoms; the counter-structure for truth-table
/// logics. Kept sorted by atom name.
struct Valuation {
  std::vector<std::pair<std::string, bool>> atoms;

  bool value_of(const std::string& name) const {
    for (const auto& [atom, value] : atoms)
      if (atom == name) return value;
    return false;
  }

  bool operator==(const Valuation& o) const { return atoms == o.atoms; }
};

inline std::string to_string(const Valuation& v) {
  std::string out;
  for (const auto& [atom, value] : v.atoms) {
    if (!out.empty()) out += " ";
    out += atom + "=" + (value ? "1" : "0");
  }
  return out.empty() ? "(empty valuation)" : out;
}

/// Finite Kripke structure; the counter-structure for the modal logics.
/// When `universal` is set the relation must be total on worlds (the S5
/// reading); construction sites keep that in sync.
struct KripkeModel {
  std::vector<std::string> atoms;           // sorted
  int world_count = 0;
  std::vector<std::vector<bool>> relation;  // [from][to]
  std::vector<std::vector<bool>> valuation; // [world][atom index]
  bool universal = false;

  bool operator==(const KripkeModel& o) const {
    return atoms == o.atoms && world_count == o.world_count &&
           relation == o.relation && valuation == o.valuation &&
           universal == o.universal;
  }
};

inline std::string to_string(const KripkeModel& m) {
  std::string out = "worlds=" + std::to_string(m.world_count) + " R={";
  bool first = true;
  for (int i = 0; i < m.world_count; ++i)
    for (int j = 0; j < m.world_count; ++j)
      if (m.relation[i][j]) {
        if (!first) out += ",";
        out += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
        first = false;
      }
  out += "}";
  for (int w = 0; w < m.world_count; ++w) {
    out += " w" + std::to_string(w) + ":{";
    for (std::size_t a = 0; a < m.atoms.size(); ++a) {
      if (a) out += " ";
      out += m.atoms[a] + "=" + (m.valuation[w][a] ? "1" : "0");
    }
    out += "}";
  }
  return out;
}

/// Counterexample attached to a NotEntailed verdict. Replayable through the
/// owning oracle family's replay procedure.
struct Witness {
  std::variant<Valuation, KripkeModel> data;

  bool is_valuation() const {
    return std::holds_alternative<Valuation>(data);
  }
  const Valuation& valuation() const { return std::get<Valuation>(data); }
  const KripkeModel& kripke() const { return std::get<KripkeModel>(data); }
};

inline std::string to_string(const Witness& w) {
  if (w.is_valuation()) return to_string(w.valuation());
  return to_string(w.kripke());
}

/// Tri-valued entailment outcome. NotEntailed always carries a witness;
/// Unknown carries the reason the budget ran out.
class Verdict {
public:
  enum class Kind { Entailed, NotEntailed, Unknown };

  static Verdict entailed() { return Verdict(Kind::Entailed, {}, {}); }
  static Verdict not_entailed(Witness w) {
    return Verdict(Kind::NotEntailed, std::move(w), {});
  }
  static Verdict unknown(std::string reason) {
    return Verdict(Kind::Unknown, {}, std::move(reason));
  }

  Kind kind() const { return kind_; }
  bool is_entailed() const { return kind_ == Kind::Entailed; }
  bool is_not_entailed() const { return kind_ == Kind::NotEntailed; }
  bool is_unknown() const { return kind_ == Kind::Unknown; }

  const Witness& witness() const { return *witness_; }
  bool has_witness() const { return witness_.has_value(); }
  const std::string& reason() const { return reason_; }

  bool operator==(const Verdict& o) const { return kind_ == o.kind_; }
  bool operator!=(const Verdict& o) const { return kind_ != o.kind_; }

private:
  Verdict(Kind kind, std::optional<Witness> witness, std::string reason)
      : kind_(kind), witness_(std::move(witness)), reason_(std::move(reason)) {}

  Kind kind_;
  std::optional<Witness> witness_;
  std::string reason_;
};

inline std::string to_string(const Verdict& v) {
  switch (v.kind()) {
    case Verdict::Kind::Entailed:
      return "entailed";
    case Verdict::Kind::NotEntailed:
      return "not-entailed [" + to_string(v.witness()) + "]";
    default:
      return "unknown (" + v.reason() + ")";
  }
}

}  // namespace piref
