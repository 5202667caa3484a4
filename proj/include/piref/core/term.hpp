#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace piref {

/// Immutable syntax tree: either a variable reference or a connective
/// application. Copies share structure; nodes are never mutated after
/// construction, so terms are safe to use from any number of threads.
class Term {
public:
  static Term variable(std::string name) {
    return Term(std::make_shared<const Node>(Node{true, std::move(name), {}}));
  }

  static Term apply(std::string connective, std::vector<Term> args) {
    return Term(std::make_shared<const Node>(
        Node{false, std::move(connective), std::move(args)}));
  }

  bool is_variable() const { return node_->is_var; }
  const std::string& symbol() const { return node_->symbol; }
  const std::vector<Term>& args() const { return node_->args; }

  std::size_t depth() const {
    std::size_t d = 0;
    for (const Term& a : node_->args) d = std::max(d, a.depth() + 1);
    return d;
  }

  /// Total structural order: variables sort before applications, then by
  /// symbol, then by argument lists. Gives canonical, reproducible set
  /// orderings everywhere.
  int compare(const Term& other) const {
    if (node_ == other.node_) return 0;
    if (node_->is_var != other.node_->is_var) return node_->is_var ? -1 : 1;
    if (int c = node_->symbol.compare(other.node_->symbol); c != 0)
      return c < 0 ? -1 : 1;
    const auto& a = node_->args;
    const auto& b = other.node_->args;
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (int c = a[i].compare(b[i]); c != 0) return c;
    return 0;
  }

  bool operator==(const Term& other) const { return compare(other) == 0; }
  bool operator!=(const Term& other) const { return compare(other) != 0; }
  bool operator<(const Term& other) const { return compare(other) < 0; }

  template <typename Fn>
  void for_each_subterm(Fn&& fn) const {
    fn(*this);
    for (const Term& a : node_->args) a.for_each_subterm(fn);
  }

private:
  struct Node {
    bool is_var;
    std::string symbol;
    std::vector<Term> args;
  };

  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

namespace syntax {

// Precedence table for the shared ASCII connective spelling. Symbols not
// listed here render in prefix form `sym(arg, ...)`.
inline int precedence(const std::string& sym) {
  if (sym == "->") return 1;
  if (sym == "\\/") return 2;
  if (sym == "/\\") return 3;
  if (sym == "~" || sym == "box" || sym == "dia") return 4;
  return 5;
}

inline bool is_unary_prefix(const std::string& sym) {
  return sym == "~" || sym == "box" || sym == "dia";
}

inline std::string to_string(const Term& t, int parent_prec = 0) {
  if (t.is_variable()) return t.symbol();
  const std::string& sym = t.symbol();
  if (t.args().empty()) return sym;
  std::string out;
  int prec = precedence(sym);
  if (t.args().size() == 1 && is_unary_prefix(sym)) {
    std::string sep = (sym == "~") ? "" : " ";
    out = sym + sep + to_string(t.args()[0], prec);
  } else if (t.args().size() == 2 && prec <= 3) {
    // "->" associates right; "/\" and "\/" render left-associated.
    int lp = (sym == "->") ? prec + 1 : prec;
    int rp = (sym == "->") ? prec : prec + 1;
    out = to_string(t.args()[0], lp) + " " + sym + " " +
          to_string(t.args()[1], rp);
  } else {
    out = sym + "(";
    for (std::size_t i = 0; i < t.args().size(); ++i) {
      if (i) out += ", ";
      out += to_string(t.args()[i], 0);
    }
    out += ")";
    return out;
  }
  if (prec < parent_prec) out = "(" + out + ")";
  return out;
}

}  // namespace syntax

// Term builders for the boolean/modal vocabulary used by the built-in
// logics. The symbol strings double as the concrete syntax.
namespace mk {

inline Term v(std::string name) { return Term::variable(std::move(name)); }
inline Term imp(Term a, Term b) {
  return Term::apply("->", {std::move(a), std::move(b)});
}
inline Term and_(Term a, Term b) {
  return Term::apply("/\\", {std::move(a), std::move(b)});
}
inline Term or_(Term a, Term b) {
  return Term::apply("\\/", {std::move(a), std::move(b)});
}
inline Term not_(Term a) { return Term::apply("~", {std::move(a)}); }
inline Term box(Term a) { return Term::apply("box", {std::move(a)}); }
inline Term dia(Term a) { return Term::apply("dia", {std::move(a)}); }
inline Term top() { return Term::apply("top", {}); }
inline Term bot() { return Term::apply("bot", {}); }

}  // namespace mk

}  // namespace piref
