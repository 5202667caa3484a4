#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "piref/core/oracle.hpp"
#include "piref/core/signature.hpp"
#include "piref/logics/boolean_eval.hpp"
#include "piref/logics/cpc.hpp"
#include "piref/logics/kripke.hpp"

namespace piref::logics {

enum class ModalLogic { K, S5G };

inline Signature k_signature(
    std::vector<std::string> variables = default_variable_pool()) {
  auto conns = boolean_connectives();
  conns.push_back({"box", 1});
  return Signature("V", 1, std::move(conns), std::move(variables));
}

inline Signature s5g_signature(
    std::vector<std::string> variables = default_variable_pool()) {
  auto conns = boolean_connectives();
  conns.push_back({"box", 1});
  conns.push_back({"dia", 1});
  return Signature("V", 1, std::move(conns), std::move(variables));
}

namespace detail {

inline bool is_modal_term(const Term& t) {
  bool modal = false;
  t.for_each_subterm([&modal](const Term& s) {
    if (!s.is_variable() && (s.symbol() == "box" || s.symbol() == "dia"))
      modal = true;
  });
  return modal;
}

inline bool is_propositional(const SentenceSet& premises,
                             const Sentence& conclusion) {
  for (const Sentence& p : premises)
    if (is_modal_term(p.component(0))) return false;
  return !is_modal_term(conclusion.component(0));
}

/// Formulas flattened to a DAG evaluated bottom-up; node children always
/// precede their parent.
struct FlatNode {
  enum class Op { Var, Top, Bot, Not, And, Or, Imp, Box, Dia };
  Op op = Op::Top;
  int a = -1;
  int b = -1;
  int atom = -1;
};

struct FlatQuery {
  std::vector<FlatNode> nodes;
  std::vector<int> premise_roots;
  int conclusion_root = -1;
  std::vector<std::string> atoms;
};

inline int flatten_term(const Term& t, FlatQuery& q, std::map<Term, int>& memo) {
  auto it = memo.find(t);
  if (it != memo.end()) return it->second;
  FlatNode node;
  if (t.is_variable()) {
    node.op = FlatNode::Op::Var;
    for (std::size_t i = 0; i < q.atoms.size(); ++i)
      if (q.atoms[i] == t.symbol()) node.atom = static_cast<int>(i);
  } else {
    const std::string& sym = t.symbol();
    if (sym == "top") node.op = FlatNode::Op::Top;
    else if (sym == "bot") node.op = FlatNode::Op::Bot;
    else if (sym == "~") node.op = FlatNode::Op::Not;
    else if (sym == "/\\") node.op = FlatNode::Op::And;
    else if (sym == "\\/") node.op = FlatNode::Op::Or;
    else if (sym == "->") node.op = FlatNode::Op::Imp;
    else if (sym == "box") node.op = FlatNode::Op::Box;
    else if (sym == "dia") node.op = FlatNode::Op::Dia;
    else throw InputError("modal: unsupported connective '" + sym + "'");
    if (!t.args().empty()) node.a = flatten_term(t.args()[0], q, memo);
    if (t.args().size() > 1) node.b = flatten_term(t.args()[1], q, memo);
  }
  q.nodes.push_back(node);
  int id = static_cast<int>(q.nodes.size()) - 1;
  memo.emplace(t, id);
  return id;
}

inline FlatQuery flatten(const SentenceSet& premises,
                         const Sentence& conclusion) {
  FlatQuery q;
  q.atoms = occurring_atoms(premises, conclusion);
  std::map<Term, int> memo;
  for (const Sentence& p : premises)
    q.premise_roots.push_back(flatten_term(p.component(0), q, memo));
  q.conclusion_root = flatten_term(conclusion.component(0), q, memo);
  return q;
}

// ---------------------------------------------------------------------------
// K: exhaustive search over pointed-free Kripke models, world count
// ascending, relation mask ascending, valuation mask ascending. Relation bit
// (j -> i) is bit j*w + i; valuation bit of (world j, atom i) is bit j*a + i.
// ---------------------------------------------------------------------------

// Total models examined per query stay below this; K world bounds are
// trimmed to whatever fits.
constexpr std::uint64_t kKWorkCap = 1ull << 18;

inline int k_feasible_bound(int atom_count, int requested) {
  std::uint64_t cumulative = 0;
  int feasible = 1;
  for (int w = 1; w <= requested; ++w) {
    int bits = w * w + w * atom_count;
    if (bits >= 63) break;
    cumulative += 1ull << bits;
    if (cumulative > kKWorkCap && w > 1) break;
    feasible = w;
    if (cumulative > kKWorkCap) break;
  }
  return feasible;
}

inline void eval_k_model(const FlatQuery& q, int worlds,
                         const std::vector<std::uint32_t>& succ,
                         std::uint32_t val, int atom_count,
                         std::vector<std::uint32_t>& scratch) {
  std::uint32_t full = (worlds >= 32) ? ~0u : ((1u << worlds) - 1u);
  for (std::size_t n = 0; n < q.nodes.size(); ++n) {
    const FlatNode& node = q.nodes[n];
    std::uint32_t m = 0;
    switch (node.op) {
      case FlatNode::Op::Var:
        if (node.atom >= 0)
          for (int j = 0; j < worlds; ++j)
            if ((val >> (j * atom_count + node.atom)) & 1u) m |= 1u << j;
        break;
      case FlatNode::Op::Top: m = full; break;
      case FlatNode::Op::Bot: m = 0; break;
      case FlatNode::Op::Not: m = full & ~scratch[node.a]; break;
      case FlatNode::Op::And: m = scratch[node.a] & scratch[node.b]; break;
      case FlatNode::Op::Or: m = scratch[node.a] | scratch[node.b]; break;
      case FlatNode::Op::Imp:
        m = (full & ~scratch[node.a]) | scratch[node.b];
        break;
      case FlatNode::Op::Box:
        for (int j = 0; j < worlds; ++j)
          if ((scratch[node.a] & succ[j]) == succ[j]) m |= 1u << j;
        break;
      case FlatNode::Op::Dia:
        for (int j = 0; j < worlds; ++j)
          if ((scratch[node.a] & succ[j]) != 0) m |= 1u << j;
        break;
    }
    scratch[n] = m;
  }
}

inline KripkeModel make_k_witness(const FlatQuery& q, int worlds,
                                  std::uint64_t rel, std::uint32_t val) {
  KripkeModel m;
  m.atoms = q.atoms;
  m.world_count = worlds;
  int a = static_cast<int>(q.atoms.size());
  m.relation.assign(worlds, std::vector<bool>(worlds, false));
  m.valuation.assign(worlds, std::vector<bool>(a, false));
  for (int j = 0; j < worlds; ++j)
    for (int i = 0; i < worlds; ++i)
      m.relation[j][i] = (rel >> (j * worlds + i)) & 1ull;
  for (int j = 0; j < worlds; ++j)
    for (int i = 0; i < a; ++i)
      m.valuation[j][i] = (val >> (j * a + i)) & 1u;
  return m;
}

inline Verdict k_search(const FlatQuery& q, int world_bound) {
  int a = static_cast<int>(q.atoms.size());
  int bound = k_feasible_bound(a, world_bound);
  std::vector<std::uint32_t> scratch(q.nodes.size());
  for (int w = 1; w <= bound; ++w) {
    std::uint32_t full = (1u << w) - 1u;
    std::uint64_t rel_count = 1ull << (w * w);
    std::uint32_t val_count = 1u << (w * a);
    std::vector<std::uint32_t> succ(w);
    for (std::uint64_t rel = 0; rel < rel_count; ++rel) {
      for (int j = 0; j < w; ++j) {
        std::uint32_t row = 0;
        for (int i = 0; i < w; ++i)
          if ((rel >> (j * w + i)) & 1ull) row |= 1u << i;
        succ[j] = row;
      }
      for (std::uint32_t val = 0; val < val_count; ++val) {
        eval_k_model(q, w, succ, val, a, scratch);
        bool premises_global = true;
        for (int root : q.premise_roots)
          if (scratch[root] != full) {
            premises_global = false;
            break;
          }
        if (!premises_global) continue;
        if (scratch[q.conclusion_root] != full)
          return Verdict::not_entailed(Witness{make_k_witness(q, w, rel, val)});
      }
    }
  }
  return Verdict::unknown("no countermodel within world bound " +
                          std::to_string(bound) +
                          "; K search cannot certify entailment");
}

// ---------------------------------------------------------------------------
// S5 with the universal relation: a model is determined by its set of
// distinct world valuations, so the search enumerates nonempty subsets of
// the valuation space, world count ascending then mask ascending. Exhausting
// sizes up to min(2^atoms, distinct subterm count + 1) decides entailment.
// ---------------------------------------------------------------------------

constexpr int kS5MaxAtoms = 4;

inline void eval_s5_model(const FlatQuery& q, std::uint32_t universe,
                          std::uint32_t model,
                          const std::vector<std::uint32_t>& atom_mask,
                          std::vector<std::uint32_t>& scratch) {
  for (std::size_t n = 0; n < q.nodes.size(); ++n) {
    const FlatNode& node = q.nodes[n];
    std::uint32_t m = 0;
    switch (node.op) {
      case FlatNode::Op::Var:
        m = node.atom >= 0 ? atom_mask[node.atom] : 0;
        break;
      case FlatNode::Op::Top: m = universe; break;
      case FlatNode::Op::Bot: m = 0; break;
      case FlatNode::Op::Not: m = universe & ~scratch[node.a]; break;
      case FlatNode::Op::And: m = scratch[node.a] & scratch[node.b]; break;
      case FlatNode::Op::Or: m = scratch[node.a] | scratch[node.b]; break;
      case FlatNode::Op::Imp:
        m = (universe & ~scratch[node.a]) | scratch[node.b];
        break;
      case FlatNode::Op::Box:
        m = ((scratch[node.a] & model) == model) ? universe : 0;
        break;
      case FlatNode::Op::Dia:
        m = ((scratch[node.a] & model) != 0) ? universe : 0;
        break;
    }
    scratch[n] = m;
  }
}

inline KripkeModel make_s5_witness(const FlatQuery& q, std::uint32_t model) {
  KripkeModel m;
  m.atoms = q.atoms;
  m.universal = true;
  int a = static_cast<int>(q.atoms.size());
  for (std::uint32_t v = 0; v < (1u << a); ++v) {
    if (!((model >> v) & 1u)) continue;
    std::vector<bool> val(a);
    for (int i = 0; i < a; ++i) val[i] = (v >> i) & 1u;
    m.valuation.push_back(std::move(val));
  }
  m.world_count = static_cast<int>(m.valuation.size());
  m.relation.assign(m.world_count, std::vector<bool>(m.world_count, true));
  return m;
}

inline Verdict s5_search(const FlatQuery& q, const SentenceSet& premises,
                         const Sentence& conclusion, int world_bound) {
  int a = static_cast<int>(q.atoms.size());
  if (a > kS5MaxAtoms)
    return Verdict::unknown(std::to_string(a) +
                            " occurring atoms exceed the S5 search capacity "
                            "of " + std::to_string(kS5MaxAtoms));
  std::uint32_t value_count = 1u << a;
  int small_model =
      static_cast<int>(distinct_subterm_count(premises, conclusion)) + 1;
  int exhaustive = std::min<int>(static_cast<int>(value_count), small_model);
  int bound = std::min(world_bound, exhaustive);
  std::uint32_t universe = (1u << value_count) - 1u;
  std::vector<std::uint32_t> atom_mask(a);
  for (int i = 0; i < a; ++i) {
    std::uint32_t mask = 0;
    for (std::uint32_t v = 0; v < value_count; ++v)
      if ((v >> i) & 1u) mask |= 1u << v;
    atom_mask[i] = mask;
  }
  std::vector<std::uint32_t> scratch(q.nodes.size());
  for (int w = 1; w <= bound; ++w) {
    for (std::uint32_t model = 1; model <= universe; ++model) {
      if (__builtin_popcount(model) != w) continue;
      eval_s5_model(q, universe, model, atom_mask, scratch);
      bool premises_global = true;
      for (int root : q.premise_roots)
        if ((scratch[root] & model) != model) {
          premises_global = false;
          break;
        }
      if (!premises_global) continue;
      if ((scratch[q.conclusion_root] & model) != model)
        return Verdict::not_entailed(Witness{make_s5_witness(q, model)});
    }
  }
  if (bound >= exhaustive) return Verdict::entailed();
  return Verdict::unknown("no countermodel within world bound " +
                          std::to_string(bound) + "; exhaustive bound is " +
                          std::to_string(exhaustive));
}

}  // namespace detail

/// Global modal consequence: the premises hold at every world of a model iff
/// the conclusion does. Purely propositional queries reduce to truth tables
/// (a one-world model realizes any propositional counterexample), which keeps
/// the built-in refinement chains exact on propositional corpora.
///
/// K enumerates arbitrary finite models up to a work-capped world bound and
/// can only ever refute; with no countermodel in range the verdict is
/// Unknown. S5 is exact whenever the bound reaches its small-model bound.
/// Countermodels are reported for the deterministic enumeration order
/// documented on the searches above.
inline Verdict modal_entails(ModalLogic logic, const SentenceSet& premises,
                             const Sentence& conclusion, int world_bound) {
  const Signature sig =
      logic == ModalLogic::K ? k_signature() : s5g_signature();
  for (const Sentence& p : premises) require_sentence(sig, p);
  require_sentence(sig, conclusion);
  if (world_bound < 1) throw InputError("modal: world bound must be >= 1");
  if (detail::is_propositional(premises, conclusion)) {
    Verdict v = truth_table_entails(premises, conclusion, Budget{16});
    if (!v.is_not_entailed()) return v;
    // Re-express the falsifying valuation as a one-world model so modal
    // witnesses replay uniformly through the Kripke evaluator.
    KripkeModel m;
    m.world_count = 1;
    m.relation = {{true}};
    m.universal = logic == ModalLogic::S5G;
    m.valuation.assign(1, {});
    for (const auto& [atom, value] : v.witness().valuation().atoms) {
      m.atoms.push_back(atom);
      m.valuation[0].push_back(value);
    }
    return Verdict::not_entailed(Witness{std::move(m)});
  }
  detail::FlatQuery q = detail::flatten(premises, conclusion);
  if (logic == ModalLogic::K) return detail::k_search(q, world_bound);
  return detail::s5_search(q, premises, conclusion, world_bound);
}

/// Small-model world bound sufficient for S5 exactness on a query:
/// distinct subterm count of premises and conclusion, plus one.
inline int s5_small_model_bound(const SentenceSet& premises,
                                const Sentence& conclusion) {
  return static_cast<int>(distinct_subterm_count(premises, conclusion)) + 1;
}

inline ClosureOracle k_oracle(
    std::vector<std::string> variables = default_variable_pool()) {
  return ClosureOracle(
      k_signature(std::move(variables)),
      [](const SentenceSet& premises, const Sentence& conclusion,
         Budget budget) {
        return modal_entails(ModalLogic::K, premises, conclusion,
                             budget.limit);
      },
      kripke_replay);
}

inline ClosureOracle s5g_oracle(
    std::vector<std::string> variables = default_variable_pool()) {
  return ClosureOracle(
      s5g_signature(std::move(variables)),
      [](const SentenceSet& premises, const Sentence& conclusion,
         Budget budget) {
        return modal_entails(ModalLogic::S5G, premises, conclusion,
                             budget.limit);
      },
      kripke_replay);
}

}  // namespace piref::logics
