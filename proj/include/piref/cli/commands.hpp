#pragma once

#include <ctime>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "piref/cli/workspace.hpp"
#include "piref/core/closure_laws.hpp"
#include "piref/corpus/generators.hpp"
#include "piref/logics/sub_institution.hpp"
#include "piref/refinement/by_interpretation.hpp"
#include "piref/refinement/deductive_bridge.hpp"
#include "piref/refinement/syntactic.hpp"
#include "piref/specs/conservative.hpp"
#include "piref/specs/local.hpp"
#include "piref/specs/structural.hpp"
#include "piref/translation/interpretation.hpp"
#include "piref/translation/naturality.hpp"

namespace piref::cli {

struct RunOptions {
  std::uint64_t seed = 1;
  int size = 100;
  int depth = 4;
  int budget = 16;
  bool no_timestamp = false;
  std::string report_path;
  std::string via;           // --via: translation name
  std::string interpretant;  // --interpretant: institution name
  std::string witness;       // --witness: spec name
  std::string corpus_name;   // --corpus: named corpus override
};

struct RunResult {
  int exit_code = 3;
  std::string text;
  nlohmann::json json;
};

namespace detail {

inline std::string timestamp_now() {
  std::time_t now = std::time(nullptr);
  char buffer[32];
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ",
                std::gmtime(&now));
  return buffer;
}

inline std::string quote_args(const std::vector<std::string>& args) {
  std::string out;
  for (const std::string& a : args) {
    out += " ";
    if (a.find(' ') != std::string::npos) out += "\"" + a + "\"";
    else out += a;
  }
  return out;
}

inline const char* result_word(int exit_code) {
  switch (exit_code) {
    case 0: return "PASS";
    case 1: return "FAIL";
    case 2: return "INCONCLUSIVE";
    default: return "ERROR";
  }
}

/// Render a check report: header, one line per failing or unknown item,
/// per-aspect counts, totals and the result word. Deterministic for a fixed
/// seed; the timestamp line is the only varying part and --no-timestamp
/// drops it.
inline RunResult render_report(const std::string& command,
                               const std::vector<std::string>& args,
                               const RunOptions& options,
                               const CheckReport& report) {
  RunResult result;
  result.exit_code = report.exit_code();
  std::string text = "command: " + command + quote_args(args) + "\n";
  text += "seed: " + std::to_string(options.seed) +
          "  size: " + std::to_string(options.size) +
          "  depth: " + std::to_string(options.depth) +
          "  budget: " + std::to_string(options.budget) + "\n";
  if (!options.no_timestamp) text += "generated: " + timestamp_now() + "\n";
  text += "check: " + report.name() + "\n";
  nlohmann::json items = nlohmann::json::array();
  std::vector<std::string> aspects;
  for (const CheckItem& item : report.items()) {
    if (std::find(aspects.begin(), aspects.end(), item.aspect) == aspects.end())
      aspects.push_back(item.aspect);
    if (item.outcome != CheckOutcome::Pass) {
      text += std::string(item.outcome == CheckOutcome::Fail ? "FAIL "
                                                             : "UNKNOWN ");
      text += item.label;
      if (!item.aspect.empty()) text += " [" + item.aspect + "]";
      text += ": " + item.detail + "\n";
    }
    items.push_back({{"label", item.label},
                     {"aspect", item.aspect},
                     {"outcome", piref::to_string(item.outcome)},
                     {"detail", item.detail}});
  }
  for (const std::string& aspect : aspects) {
    if (aspect.empty()) continue;
    text += "aspect " + aspect +
            ": pass=" + std::to_string(report.count(CheckOutcome::Pass, aspect)) +
            " fail=" + std::to_string(report.count(CheckOutcome::Fail, aspect)) +
            " unknown=" +
            std::to_string(report.count(CheckOutcome::Unknown, aspect)) + "\n";
  }
  text += "counts: pass=" + std::to_string(report.pass_count()) +
          " fail=" + std::to_string(report.fail_count()) +
          " unknown=" + std::to_string(report.unknown_count()) + "\n";
  text += "result: " + std::string(result_word(result.exit_code)) + "\n";
  result.text = std::move(text);
  result.json = {{"command", command},
                 {"args", args},
                 {"seed", options.seed},
                 {"size", options.size},
                 {"depth", options.depth},
                 {"budget", options.budget},
                 {"check", report.name()},
                 {"items", std::move(items)},
                 {"counts",
                  {{"pass", report.pass_count()},
                   {"fail", report.fail_count()},
                   {"unknown", report.unknown_count()}}},
                 {"exit", result.exit_code}};
  if (!options.no_timestamp) result.json["generated"] = timestamp_now();
  return result;
}

inline corpus::GenOptions gen_options(const RunOptions& options) {
  corpus::GenOptions gen;
  gen.depth = options.depth;
  gen.budget = Budget{options.budget};
  return gen;
}

/// Entailment corpus for a command: the named corpus when --corpus is given,
/// otherwise seeded generation over the institution's one signature.
inline corpus::CheckCorpus entailment_corpus(const Workspace& ws,
                                             const RunOptions& options,
                                             const PiInstitution& inst) {
  if (!options.corpus_name.empty()) {
    const CorpusDef& def = ws.corpus(options.corpus_name);
    if (def.kind != CorpusDef::Kind::Entailments)
      throw InputError("corpus '" + options.corpus_name +
                       "' is not an entailment corpus");
    auto base = ws.institution(def.institution);
    corpus::GenOptions gen;
    gen.depth = def.depth;
    gen.budget = Budget{options.budget};
    return corpus::gen_entailment_corpus(*base, base->only_signature(),
                                         def.size, def.seed, gen);
  }
  return corpus::gen_entailment_corpus(inst, inst.only_signature(),
                                       options.size, options.seed,
                                       gen_options(options));
}

inline corpus::CheckCorpus square_corpus(const Workspace& ws,
                                         const RunOptions& options,
                                         const PiInstitution& inst) {
  if (!options.corpus_name.empty()) {
    const CorpusDef& def = ws.corpus(options.corpus_name);
    if (def.kind != CorpusDef::Kind::Squares)
      throw InputError("corpus '" + options.corpus_name +
                       "' is not a squares corpus");
    auto base = ws.institution(def.institution);
    corpus::GenOptions gen;
    gen.depth = def.depth;
    return corpus::gen_morphism_squares(*base, def.size, def.seed, gen);
  }
  return corpus::gen_morphism_squares(inst, options.size, options.seed,
                                      gen_options(options));
}

inline std::vector<Sentence> sentence_corpus(const Signature& sig,
                                             const RunOptions& options) {
  return corpus::gen_sentences(sig, options.depth, options.size,
                               options.seed);
}

inline const std::string& positional(const std::vector<std::string>& args,
                                     std::size_t index,
                                     const std::string& what) {
  if (index >= args.size())
    throw InputError("missing argument: expected " + what);
  return args[index];
}

}  // namespace detail

/// Execute one command against a parsed workspace. Never prints; the caller
/// decides where the text and the JSON document go. InputError propagates
/// for usage problems (exit code 3 at the CLI surface).
inline RunResult run_command(const Workspace& ws, const std::string& command,
                             const std::vector<std::string>& args,
                             const RunOptions& options) {
  Budget budget{options.budget};

  if (command == "check-closure") {
    auto inst =
        ws.institution(detail::positional(args, 0, "an institution name"));
    corpus::CheckCorpus corpus = detail::entailment_corpus(ws, options, *inst);
    corpus.squares =
        corpus::gen_morphism_squares(*inst, std::max(1, options.size / 2),
                                     options.seed, detail::gen_options(options))
            .squares;
    return detail::render_report(command, args, options,
                                 check_closure_axioms(*inst, corpus, budget));
  }

  if (command == "check-naturality") {
    const TranslationDef& def =
        ws.translation(detail::positional(args, 0, "a translation name"));
    Translation t = build_translation(ws, def);
    corpus::CheckCorpus corpus =
        detail::square_corpus(ws, options, t.source());
    return detail::render_report(command, args, options,
                                 check_naturality(t, corpus));
  }

  if (command == "check-interpretation" || command == "check-semi") {
    const TranslationDef& def =
        ws.translation(detail::positional(args, 0, "a translation name"));
    Translation t = build_translation(ws, def);
    corpus::CheckCorpus corpus =
        detail::entailment_corpus(ws, options, t.source());
    CheckReport report = command == "check-semi"
                             ? is_semi_interpretation(t, corpus, budget)
                             : is_interpretation(t, corpus, budget);
    return detail::render_report(command, args, options, report);
  }

  if (command == "check-refinement") {
    auto source =
        ws.institution(detail::positional(args, 0, "an institution name"));
    auto target =
        ws.institution(detail::positional(args, 1, "an institution name"));
    if (options.via.empty())
      throw InputError("check-refinement needs --via <translation>");
    if (options.interpretant.empty())
      throw InputError("check-refinement needs --interpretant <institution>; "
                       "the interpretant is never searched for");
    Translation t = build_translation(ws, ws.translation(options.via));
    RefinementQuery query{*source,
                          *target,
                          std::move(t),
                          *ws.institution(options.interpretant),
                          detail::entailment_corpus(ws, options, *source),
                          budget};
    return detail::render_report(command, args, options,
                                 is_refinement_by_interpretation(query));
  }

  if (command == "check-syntactic") {
    auto coarse =
        ws.institution(detail::positional(args, 0, "an institution name"));
    auto fine =
        ws.institution(detail::positional(args, 1, "an institution name"));
    corpus::CheckCorpus corpus =
        detail::entailment_corpus(ws, options, *coarse);
    return detail::render_report(
        command, args, options,
        is_syntactic_refinement(*coarse, *fine, corpus, budget));
  }

  if (command == "check-sub") {
    auto smaller =
        ws.institution(detail::positional(args, 0, "an institution name"));
    auto larger =
        ws.institution(detail::positional(args, 1, "an institution name"));
    corpus::CheckCorpus corpus =
        detail::entailment_corpus(ws, options, *smaller);
    return detail::render_report(
        command, args, options,
        logics::is_sub_institution(*smaller, *larger, corpus, budget));
  }

  if (command == "check-local") {
    const Specification& sp =
        ws.specification(detail::positional(args, 0, "a spec name"));
    const Specification& refined =
        ws.specification(detail::positional(args, 1, "a spec name"));
    if (options.via.empty())
      throw InputError("check-local needs --via <translation>");
    Multifunction i =
        build_multifunction(ws.translation(options.via), sp.outer_signature(),
                            refined.outer_signature());
    std::vector<Sentence> corpus =
        detail::sentence_corpus(sp.outer_signature(), options);
    std::optional<Specification> witness;
    if (!options.witness.empty()) witness = ws.specification(options.witness);
    return detail::render_report(
        command, args, options,
        local_refines(sp, refined, i, corpus, budget, witness));
  }

  if (command == "check-local-interpretation") {
    const Specification& sp =
        ws.specification(detail::positional(args, 0, "a spec name"));
    const Specification& refined =
        ws.specification(detail::positional(args, 1, "a spec name"));
    if (options.via.empty())
      throw InputError("check-local-interpretation needs --via <translation>");
    Multifunction i =
        build_multifunction(ws.translation(options.via), sp.outer_signature(),
                            refined.outer_signature());
    std::vector<Sentence> corpus =
        detail::sentence_corpus(sp.outer_signature(), options);
    return detail::render_report(
        command, args, options,
        is_local_interpretation(i, sp, refined, corpus, budget));
  }

  if (command == "check-conservative") {
    const NamedMorphism& named =
        ws.morphism(detail::positional(args, 0, "a morphism name"));
    auto inst =
        ws.institution(detail::positional(args, 1, "an institution name"));
    corpus::CheckCorpus corpus = detail::entailment_corpus(ws, options, *inst);
    return detail::render_report(
        command, args, options,
        is_conservative(named.morphism, *inst, corpus, budget));
  }

  if (command == "check-structural") {
    const TranslationDef& def =
        ws.translation(detail::positional(args, 0, "a translation name"));
    Translation t = build_translation(ws, def);
    const Specification& sp =
        ws.specification(detail::positional(args, 1, "a spec name"));
    corpus::CheckCorpus corpus =
        detail::entailment_corpus(ws, options, t.source());
    corpus.squares =
        corpus::gen_morphism_squares(t.source(), std::max(1, options.size / 2),
                                     options.seed, detail::gen_options(options))
            .squares;
    return detail::render_report(command, args, options,
                                 check_structural_lemma(t, sp, corpus, budget));
  }

  if (command == "eval") {
    const Specification& sp =
        ws.specification(detail::positional(args, 0, "a spec name"));
    const std::string& literal = detail::positional(args, 1, "a sentence");
    Sentence s = parse_sentence_text(literal, sp.outer_signature());
    Verdict v = sp.holds(s, budget);
    RunResult result;
    result.exit_code = v.is_entailed() ? 0 : (v.is_not_entailed() ? 1 : 2);
    result.text = "command: eval" + detail::quote_args(args) + "\n";
    if (!options.no_timestamp)
      result.text += "generated: " + detail::timestamp_now() + "\n";
    result.text += "verdict: " + to_string(v) + "\n";
    result.text +=
        "result: " + std::string(detail::result_word(result.exit_code)) + "\n";
    result.json = {{"command", "eval"},
                   {"args", args},
                   {"verdict", to_string(v)},
                   {"exit", result.exit_code}};
    if (!options.no_timestamp)
      result.json["generated"] = detail::timestamp_now();
    return result;
  }

  if (command == "normalize") {
    const Specification& sp =
        ws.specification(detail::positional(args, 0, "a spec name"));
    FlatSpec flat = sp.normalize();
    RunResult result;
    result.exit_code = 0;
    result.text = "command: normalize" + detail::quote_args(args) + "\n";
    if (!options.no_timestamp)
      result.text += "generated: " + detail::timestamp_now() + "\n";
    result.text += "signature: " + flat.signature.id() + "\n";
    nlohmann::json axioms = nlohmann::json::array();
    for (const Sentence& s : flat.axioms) {
      result.text += "axiom: " + to_string(s) + "\n";
      axioms.push_back(to_string(s));
    }
    result.text += "result: PASS\n";
    result.json = {{"command", "normalize"},
                   {"args", args},
                   {"signature", flat.signature.id()},
                   {"axioms", std::move(axioms)},
                   {"exit", 0}};
    if (!options.no_timestamp)
      result.json["generated"] = detail::timestamp_now();
    return result;
  }

  throw InputError("unknown command '" + command + "'");
}

}  // namespace piref::cli
