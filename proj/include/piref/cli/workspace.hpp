#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "piref/logics/deductive_system.hpp"
#include "piref/specs/specification.hpp"
#include "piref/translation/translation.hpp"

namespace piref::cli {

struct Diagnostic {
  int line = 0;
  int column = 0;
  std::string message;
};

inline std::string to_string(const Diagnostic& d) {
  return std::to_string(d.line) + ":" + std::to_string(d.column) + ": error: " +
         d.message;
}

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

struct Token {
  enum class Kind { Ident, Integer, Symbol, End };
  Kind kind = Kind::End;
  std::string text;
  int line = 1;
  int column = 1;
};

class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

private:
  void advance() {
    skip_space();
    current_.line = line_;
    current_.column = column_;
    if (pos_ >= text_.size()) {
      current_.kind = Token::Kind::End;
      current_.text.clear();
      return;
    }
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string ident;
      while (pos_ < text_.size()) {
        char d = text_[pos_];
        bool ident_char = std::isalnum(static_cast<unsigned char>(d)) ||
                          d == '_';
        // '-' joins identifiers like modal-k but never eats the '->' arrow.
        if (!ident_char && d == '-' && pos_ + 1 < text_.size()) {
          char e = text_[pos_ + 1];
          ident_char = std::isalnum(static_cast<unsigned char>(e)) || e == '_';
        }
        if (!ident_char) break;
        ident += d;
        bump();
      }
      current_.kind = Token::Kind::Ident;
      current_.text = std::move(ident);
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        digits += text_[pos_];
        bump();
      }
      current_.kind = Token::Kind::Integer;
      current_.text = std::move(digits);
      return;
    }
    current_.kind = Token::Kind::Symbol;
    if (starts_with("|->")) {
      current_.text = "|->";
    } else if (starts_with("->")) {
      current_.text = "->";
    } else if (starts_with("/\\")) {
      current_.text = "/\\";
    } else if (starts_with("\\/")) {
      current_.text = "\\/";
    } else if (starts_with("~=")) {
      current_.text = "~=";
    } else {
      current_.text = std::string(1, c);
    }
    for (std::size_t i = 0; i < current_.text.size(); ++i) bump();
  }

  bool starts_with(std::string_view s) const {
    return text_.substr(pos_, s.size()) == s;
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {  // line comment
        while (pos_ < text_.size() && text_[pos_] != '\n') bump();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        bump();
      } else {
        break;
      }
    }
  }

  void bump() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  Token current_;
};

// ---------------------------------------------------------------------------
// Workspace model
// ---------------------------------------------------------------------------

struct NamedMorphism {
  std::string source_institution;
  std::string target_institution;
  SignatureMorphism morphism;
};

/// A translation given by a finite rule table: connective and variable
/// renamings extended homomorphically over terms, plus wrap templates that
/// package the translated components of a source sentence into a set of
/// target sentences. With no wrap rules the packaging is the identity.
struct TranslationDef {
  std::string name;
  std::string source_institution;
  std::string target_institution;
  std::map<std::string, std::string> connective_renames;
  std::map<std::string, std::string> variable_renames;
  std::vector<std::string> wrap_params;
  std::vector<Sentence> wrap_templates;
};

struct CorpusDef {
  enum class Kind { Entailments, Squares };
  Kind kind = Kind::Entailments;
  std::string institution;
  int size = 100;
  std::uint64_t seed = 1;
  int depth = 4;
};

struct Workspace {
  std::map<std::string, std::shared_ptr<const PiInstitution>> institutions;
  std::map<std::string, NamedMorphism> morphisms;
  std::map<std::string, TranslationDef> translations;
  std::map<std::string, Specification> specifications;
  std::map<std::string, CorpusDef> corpora;

  bool has_name(const std::string& name) const {
    return institutions.count(name) || morphisms.count(name) ||
           translations.count(name) || specifications.count(name) ||
           corpora.count(name);
  }

  std::shared_ptr<const PiInstitution> institution(
      const std::string& name) const {
    auto it = institutions.find(name);
    if (it == institutions.end())
      throw InputError("unknown institution '" + name + "'");
    return it->second;
  }

  const NamedMorphism& morphism(const std::string& name) const {
    auto it = morphisms.find(name);
    if (it == morphisms.end())
      throw InputError("unknown morphism '" + name + "'");
    return it->second;
  }

  const TranslationDef& translation(const std::string& name) const {
    auto it = translations.find(name);
    if (it == translations.end())
      throw InputError("unknown translation '" + name + "'");
    return it->second;
  }

  const Specification& specification(const std::string& name) const {
    auto it = specifications.find(name);
    if (it == specifications.end())
      throw InputError("unknown spec '" + name + "'");
    return it->second;
  }

  const CorpusDef& corpus(const std::string& name) const {
    auto it = corpora.find(name);
    if (it == corpora.end())
      throw InputError("unknown corpus '" + name + "'");
    return it->second;
  }
};

struct ParseResult {
  Workspace workspace;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return diagnostics.empty(); }
};

// ---------------------------------------------------------------------------
// Term and sentence parsing (shared by workspace files and `eval`)
// ---------------------------------------------------------------------------

namespace detail {

struct ParseError {
  Diagnostic diagnostic;
};

[[noreturn]] inline void fail(const Token& at, const std::string& message) {
  throw ParseError{{at.line, at.column, message}};
}

inline Term parse_term(Lexer& lex);

inline Term parse_atom(Lexer& lex) {
  Token t = lex.take();
  if (t.kind == Token::Kind::Symbol && t.text == "(") {
    Term inner = parse_term(lex);
    Token close = lex.take();
    if (close.kind != Token::Kind::Symbol || close.text != ")")
      fail(close, "expected ')'");
    return inner;
  }
  if (t.kind == Token::Kind::Symbol && t.text == "~")
    return mk::not_(parse_atom(lex));
  if (t.kind == Token::Kind::Ident) {
    if (t.text == "top") return mk::top();
    if (t.text == "bot") return mk::bot();
    if (t.text == "box") return mk::box(parse_atom(lex));
    if (t.text == "dia") return mk::dia(parse_atom(lex));
    return Term::variable(t.text);
  }
  fail(t, "expected a term, found '" + t.text + "'");
}

inline Term parse_and(Lexer& lex) {
  Term left = parse_atom(lex);
  while (lex.peek().kind == Token::Kind::Symbol && lex.peek().text == "/\\") {
    lex.take();
    left = mk::and_(std::move(left), parse_atom(lex));
  }
  return left;
}

inline Term parse_or(Lexer& lex) {
  Term left = parse_and(lex);
  while (lex.peek().kind == Token::Kind::Symbol && lex.peek().text == "\\/") {
    lex.take();
    left = mk::or_(std::move(left), parse_and(lex));
  }
  return left;
}

inline Term parse_term(Lexer& lex) {
  Term left = parse_or(lex);
  if (lex.peek().kind == Token::Kind::Symbol && lex.peek().text == "->") {
    lex.take();
    return mk::imp(std::move(left), parse_term(lex));  // right associative
  }
  return left;
}

inline Sentence parse_sentence(Lexer& lex) {
  Term first = parse_term(lex);
  if (lex.peek().kind == Token::Kind::Symbol && lex.peek().text == "~=") {
    lex.take();
    Term second = parse_term(lex);
    return Sentence(std::move(first), std::move(second));
  }
  return Sentence(std::move(first));
}

}  // namespace detail

/// Parse a single sentence literal and validate it over a signature.
/// Used by `eval` and other command arguments.
inline Sentence parse_sentence_text(const std::string& text,
                                    const Signature& sig) {
  Lexer lex(text);
  Sentence s = [&] {
    try {
      return detail::parse_sentence(lex);
    } catch (const detail::ParseError& e) {
      throw InputError("sentence '" + text + "': " + e.diagnostic.message);
    }
  }();
  if (lex.peek().kind != Token::Kind::End)
    throw InputError("sentence '" + text + "': trailing input '" +
                     lex.peek().text + "'");
  require_sentence(sig, s);
  return s;
}

// ---------------------------------------------------------------------------
// Building library values out of workspace definitions
// ---------------------------------------------------------------------------

/// Homomorphic term translation from a rule table; symbols without a rule
/// keep their spelling, and the result is validated against the target
/// signature on use.
inline Term apply_rule_table(const TranslationDef& def, const Term& t) {
  if (t.is_variable()) {
    auto it = def.variable_renames.find(t.symbol());
    return Term::variable(it == def.variable_renames.end() ? t.symbol()
                                                           : it->second);
  }
  std::string sym = t.symbol();
  auto it = def.connective_renames.find(sym);
  if (it != def.connective_renames.end()) sym = it->second;
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const Term& a : t.args()) args.push_back(apply_rule_table(def, a));
  return Term::apply(std::move(sym), std::move(args));
}

namespace detail {

inline Term instantiate_template(const Term& tmpl,
                                 const std::map<std::string, Term>& binding) {
  if (tmpl.is_variable()) {
    auto it = binding.find(tmpl.symbol());
    return it == binding.end() ? tmpl : it->second;
  }
  std::vector<Term> args;
  args.reserve(tmpl.args().size());
  for (const Term& a : tmpl.args())
    args.push_back(instantiate_template(a, binding));
  return Term::apply(tmpl.symbol(), std::move(args));
}

}  // namespace detail

/// Sentence-level multifunction of a rule table between two signatures.
inline std::vector<Sentence> apply_translation_def(const TranslationDef& def,
                                                   const Signature& target_sig,
                                                   const Sentence& s) {
  std::vector<Term> translated;
  translated.reserve(s.components().size());
  for (const Term& t : s.components())
    translated.push_back(apply_rule_table(def, t));
  if (def.wrap_templates.empty()) {
    if (static_cast<int>(translated.size()) != target_sig.dimension())
      throw InputError(
          "translation '" + def.name + "': no wrap rule, but source "
          "dimension " + std::to_string(translated.size()) +
          " differs from target dimension " +
          std::to_string(target_sig.dimension()));
    return {Sentence(std::move(translated))};
  }
  if (def.wrap_params.size() != translated.size())
    throw InputError("translation '" + def.name + "': wrap arity " +
                     std::to_string(def.wrap_params.size()) +
                     " differs from source dimension " +
                     std::to_string(translated.size()));
  std::map<std::string, Term> binding;
  for (std::size_t i = 0; i < translated.size(); ++i)
    binding.emplace(def.wrap_params[i], translated[i]);
  std::vector<Sentence> images;
  for (const Sentence& tmpl : def.wrap_templates) {
    std::vector<Term> components;
    components.reserve(tmpl.components().size());
    for (const Term& t : tmpl.components())
      components.push_back(detail::instantiate_template(t, binding));
    images.emplace_back(std::move(components));
  }
  return images;
}

/// Realize a rule-table translation as a Translation between the named
/// one-object institutions. The functor part maps the single object across
/// and pushes substitutions through the rule table.
inline Translation build_translation(const Workspace& ws,
                                     const TranslationDef& def) {
  auto source = ws.institution(def.source_institution);
  auto target = ws.institution(def.target_institution);
  Signature source_sig = source->only_signature();
  Signature target_sig = target->only_signature();
  TranslationDef table = def;
  return Translation(
      def.name, *source, *target,
      [target_sig](const Signature&) { return target_sig; },
      [table, target_sig](const SignatureMorphism& m) {
        if (!m.is_substitution())
          throw InputError("translation '" + table.name +
                           "': only substitutions cross the bridge");
        std::map<std::string, Term> images;
        for (const auto& [var, term] : m.term_images()) {
          auto it = table.variable_renames.find(var);
          std::string mapped =
              it == table.variable_renames.end() ? var : it->second;
          images.emplace(mapped, apply_rule_table(table, term));
        }
        return SignatureMorphism::substitution(target_sig, std::move(images));
      },
      [table, target_sig](const Signature&, const Sentence& s) {
        return apply_translation_def(table, target_sig, s);
      });
}

/// The rule table read as a local multifunction between two signatures.
inline Multifunction build_multifunction(const TranslationDef& def,
                                         const Signature& source_sig,
                                         const Signature& target_sig) {
  TranslationDef table = def;
  return Multifunction(source_sig, target_sig,
                       [table, target_sig](const Sentence& s) {
                         return apply_translation_def(table, target_sig, s);
                       });
}

// ---------------------------------------------------------------------------
// Workspace parser: total, collecting positioned diagnostics
// ---------------------------------------------------------------------------

namespace detail {

class WorkspaceParser {
public:
  explicit WorkspaceParser(std::string_view text) : lex_(text) {}

  ParseResult run() {
    while (lex_.peek().kind != Token::Kind::End) {
      try {
        parse_decl();
      } catch (const ParseError& e) {
        result_.diagnostics.push_back(e.diagnostic);
        recover();
      } catch (const InputError& e) {
        result_.diagnostics.push_back({decl_line_, decl_column_, e.what()});
        recover();
      }
    }
    return std::move(result_);
  }

private:
  void recover() {
    // Resynchronize after the next ';' or before the next declaration
    // keyword, whichever comes first.
    while (lex_.peek().kind != Token::Kind::End) {
      const Token& next = lex_.peek();
      if (next.kind == Token::Kind::Ident &&
          (next.text == "institution" || next.text == "morphism" ||
           next.text == "translation" || next.text == "spec" ||
           next.text == "corpus"))
        return;
      Token t = lex_.take();
      if (t.kind == Token::Kind::Symbol && t.text == ";") return;
    }
  }

  Token expect_ident(const std::string& what) {
    Token t = lex_.take();
    if (t.kind != Token::Kind::Ident)
      fail(t, "expected " + what + ", found '" + t.text + "'");
    return t;
  }

  int expect_integer(const std::string& what) {
    Token t = lex_.take();
    if (t.kind != Token::Kind::Integer)
      fail(t, "expected " + what + ", found '" + t.text + "'");
    return std::stoi(t.text);
  }

  void expect_symbol(const std::string& sym) {
    Token t = lex_.take();
    if (t.kind != Token::Kind::Symbol || t.text != sym)
      fail(t, "expected '" + sym + "', found '" + t.text + "'");
  }

  void expect_keyword(const std::string& word) {
    Token t = lex_.take();
    if (t.kind != Token::Kind::Ident || t.text != word)
      fail(t, "expected '" + word + "', found '" + t.text + "'");
  }

  std::string fresh_name() {
    Token t = expect_ident("a name");
    if (result_.workspace.has_name(t.text))
      fail(t, "duplicate name '" + t.text + "'");
    return t.text;
  }

  std::shared_ptr<const PiInstitution> resolve_institution(const Token& at) {
    auto it = result_.workspace.institutions.find(at.text);
    if (it == result_.workspace.institutions.end())
      fail(at, "unknown institution '" + at.text + "'");
    return it->second;
  }

  void parse_decl() {
    Token head = lex_.peek();
    decl_line_ = head.line;
    decl_column_ = head.column;
    if (head.kind != Token::Kind::Ident)
      fail(head, "expected a declaration, found '" + head.text + "'");
    lex_.take();
    if (head.text == "institution") parse_institution();
    else if (head.text == "morphism") parse_morphism();
    else if (head.text == "translation") parse_translation();
    else if (head.text == "spec") parse_spec();
    else if (head.text == "corpus") parse_corpus();
    else fail(head, "unknown declaration '" + head.text + "'");
  }

  void parse_institution() {
    std::string name = fresh_name();
    expect_symbol("=");
    Token kind = expect_ident("'builtin' or 'extend'");
    if (kind.text == "builtin") {
      Token what = expect_ident("a builtin logic name");
      expect_symbol(";");
      PiInstitution inst = logics::builtin_institution(what.text);
      result_.workspace.institutions.emplace(
          name, std::make_shared<const PiInstitution>(std::move(inst)));
      return;
    }
    if (kind.text == "extend") {
      Token base_name = expect_ident("an institution name");
      auto base = resolve_institution(base_name);
      expect_keyword("with");
      expect_symbol("{");
      std::vector<Sentence> extra;
      while (!(lex_.peek().kind == Token::Kind::Symbol &&
               lex_.peek().text == "}")) {
        extra.push_back(parse_sentence(lex_));
        expect_symbol(";");
      }
      expect_symbol("}");
      expect_symbol(";");
      PiInstitution inst = logics::extend_with_axioms(
          *base, SentenceSet(std::move(extra)), name);
      result_.workspace.institutions.emplace(
          name, std::make_shared<const PiInstitution>(std::move(inst)));
      return;
    }
    fail(kind, "expected 'builtin' or 'extend', found '" + kind.text + "'");
  }

  void parse_morphism() {
    std::string name = fresh_name();
    expect_symbol(":");
    Token source_name = expect_ident("an institution name");
    auto source = resolve_institution(source_name);
    expect_symbol("->");
    Token target_name = expect_ident("an institution name");
    auto target = resolve_institution(target_name);
    expect_symbol("=");
    expect_symbol("{");
    bool same = source_name.text == target_name.text;
    std::map<std::string, Term> term_images;      // substitution case
    std::map<std::string, std::string> renames;   // symbol-map case
    while (!(lex_.peek().kind == Token::Kind::Symbol &&
             lex_.peek().text == "}")) {
      Token lhs = lex_.take();
      if (lhs.kind != Token::Kind::Ident && lhs.kind != Token::Kind::Symbol)
        fail(lhs, "expected a mapped symbol");
      expect_symbol("|->");
      if (same) {
        Term image = parse_term(lex_);
        term_images.emplace(lhs.text, std::move(image));
      } else {
        Token rhs = lex_.take();
        if (rhs.kind != Token::Kind::Ident && rhs.kind != Token::Kind::Symbol)
          fail(rhs, "expected a symbol image");
        renames.emplace(lhs.text, rhs.text);
      }
      expect_symbol(";");
    }
    expect_symbol("}");
    expect_symbol(";");
    SignatureMorphism mor = [&] {
      if (same)
        return SignatureMorphism::substitution(source->only_signature(),
                                               std::move(term_images));
      std::map<std::string, std::string> conns;
      std::map<std::string, std::string> vars;
      const Signature& src = source->only_signature();
      for (auto& [sym, image] : renames) {
        if (src.has_variable(sym)) vars.emplace(sym, image);
        else conns.emplace(sym, image);
      }
      return SignatureMorphism::symbol_map(src, target->only_signature(),
                                           std::move(conns), std::move(vars));
    }();
    result_.workspace.morphisms.emplace(
        name,
        NamedMorphism{source_name.text, target_name.text, std::move(mor)});
  }

  void parse_translation() {
    std::string name = fresh_name();
    expect_symbol(":");
    Token source_name = expect_ident("an institution name");
    auto source = resolve_institution(source_name);
    expect_symbol("->");
    Token target_name = expect_ident("an institution name");
    auto target = resolve_institution(target_name);
    expect_symbol("=");
    expect_symbol("{");
    TranslationDef def;
    def.name = name;
    def.source_institution = source_name.text;
    def.target_institution = target_name.text;
    while (!(lex_.peek().kind == Token::Kind::Symbol &&
             lex_.peek().text == "}")) {
      Token rule = expect_ident("'wrap', 'map' or 'var'");
      if (rule.text == "wrap") {
        if (!def.wrap_templates.empty())
          fail(rule, "only one wrap rule is allowed");
        expect_symbol("(");
        def.wrap_params.push_back(expect_ident("a placeholder").text);
        while (lex_.peek().kind == Token::Kind::Symbol &&
               lex_.peek().text == ",") {
          lex_.take();
          def.wrap_params.push_back(expect_ident("a placeholder").text);
        }
        expect_symbol(")");
        expect_symbol("|->");
        expect_symbol("{");
        def.wrap_templates.push_back(parse_sentence(lex_));
        while (lex_.peek().kind == Token::Kind::Symbol &&
               lex_.peek().text == ",") {
          lex_.take();
          def.wrap_templates.push_back(parse_sentence(lex_));
        }
        expect_symbol("}");
      } else if (rule.text == "map") {
        Token lhs = lex_.take();
        expect_symbol("|->");
        Token rhs = lex_.take();
        def.connective_renames.emplace(lhs.text, rhs.text);
      } else if (rule.text == "var") {
        Token lhs = expect_ident("a variable");
        expect_symbol("|->");
        Token rhs = expect_ident("a variable");
        def.variable_renames.emplace(lhs.text, rhs.text);
      } else {
        fail(rule, "unknown rule '" + rule.text + "'");
      }
      expect_symbol(";");
    }
    expect_symbol("}");
    expect_symbol(";");
    validate_translation_def(def, source->only_signature(),
                             target->only_signature());
    result_.workspace.translations.emplace(name, std::move(def));
  }

  void validate_translation_def(const TranslationDef& def,
                                const Signature& source_sig,
                                const Signature& target_sig) {
    // Templates may use target symbols plus the wrap placeholders.
    std::vector<std::string> vars = target_sig.variables();
    for (const std::string& p : def.wrap_params)
      if (std::find(vars.begin(), vars.end(), p) == vars.end())
        vars.push_back(p);
    Signature probe("template", target_sig.dimension(),
                    target_sig.connectives(), vars);
    for (const Sentence& tmpl : def.wrap_templates)
      require_sentence(probe, tmpl);
    if (def.wrap_templates.empty() &&
        source_sig.dimension() != target_sig.dimension())
      throw InputError("translation '" + def.name + "' needs a wrap rule to "
                       "change dimension");
  }

  void parse_spec() {
    std::string name = fresh_name();
    expect_symbol("=");
    Token kind = expect_ident("a specification constructor");
    if (kind.text == "flat") {
      Token inst_name = expect_ident("an institution name");
      auto inst = resolve_institution(inst_name);
      expect_symbol("{");
      std::vector<Sentence> axioms;
      while (!(lex_.peek().kind == Token::Kind::Symbol &&
               lex_.peek().text == "}")) {
        axioms.push_back(parse_sentence(lex_));
        expect_symbol(";");
      }
      expect_symbol("}");
      expect_symbol(";");
      result_.workspace.specifications.emplace(
          name, Specification::flat(inst, inst->only_signature(),
                                    SentenceSet(std::move(axioms))));
      return;
    }
    if (kind.text == "union") {
      Token a = expect_ident("a spec name");
      Token b = expect_ident("a spec name");
      expect_symbol(";");
      result_.workspace.specifications.emplace(
          name, Specification::union_of(resolve_spec(a), resolve_spec(b)));
      return;
    }
    if (kind.text == "translate" || kind.text == "derive") {
      Token spec_name = expect_ident("a spec name");
      expect_keyword("through");
      Token mor_name = expect_ident("a morphism name");
      expect_symbol(";");
      const Specification& inner = resolve_spec(spec_name);
      auto it = result_.workspace.morphisms.find(mor_name.text);
      if (it == result_.workspace.morphisms.end())
        fail(mor_name, "unknown morphism '" + mor_name.text + "'");
      if (kind.text == "translate")
        result_.workspace.specifications.emplace(
            name, Specification::translate(inner, it->second.morphism));
      else
        result_.workspace.specifications.emplace(
            name, Specification::derive(inner, it->second.morphism));
      return;
    }
    fail(kind, "expected flat, union, translate or derive");
  }

  const Specification& resolve_spec(const Token& at) {
    auto it = result_.workspace.specifications.find(at.text);
    if (it == result_.workspace.specifications.end())
      fail(at, "unknown spec '" + at.text + "'");
    return it->second;
  }

  void parse_corpus() {
    std::string name = fresh_name();
    expect_symbol("=");
    Token kind = expect_ident("'entailments' or 'squares'");
    CorpusDef def;
    if (kind.text == "entailments") def.kind = CorpusDef::Kind::Entailments;
    else if (kind.text == "squares") def.kind = CorpusDef::Kind::Squares;
    else fail(kind, "expected 'entailments' or 'squares'");
    Token inst_name = expect_ident("an institution name");
    resolve_institution(inst_name);
    def.institution = inst_name.text;
    while (lex_.peek().kind == Token::Kind::Ident) {
      Token knob = lex_.take();
      if (knob.text == "size") def.size = expect_integer("a size");
      else if (knob.text == "seed")
        def.seed = static_cast<std::uint64_t>(expect_integer("a seed"));
      else if (knob.text == "depth") def.depth = expect_integer("a depth");
      else fail(knob, "unknown corpus parameter '" + knob.text + "'");
    }
    expect_symbol(";");
    result_.workspace.corpora.emplace(name, def);
  }

  Lexer lex_;
  ParseResult result_;
  int decl_line_ = 1;
  int decl_column_ = 1;
};

}  // namespace detail

/// Parse a workspace file. Total: collects positioned diagnostics instead of
/// aborting, resynchronizing after each bad declaration.
inline ParseResult parse_workspace(std::string_view text) {
  return detail::WorkspaceParser(text).run();
}

}  // namespace piref::cli
