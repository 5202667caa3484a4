#include <doctest.h>

#include "piref/cli/commands.hpp"

using namespace piref;
using namespace piref::cli;

namespace {

const char* kMiniWorkspace = R"(
institution C = builtin cpc;
institution B = builtin ba-eq;

translation c2b : C -> B = {
  wrap (a) |-> { a ~= top };
};

translation collapse : C -> B = {
  wrap (a) |-> { top ~= top };
};

morphism swap : C -> C = {
  p |-> q;
  q |-> p;
};

spec S = flat C { p; p -> q; };
spec T = union S S;
)";

Workspace parse_or_fail(const std::string& text) {
  ParseResult parsed = parse_workspace(text);
  std::string first_diagnostic =
      parsed.diagnostics.empty() ? "" : to_string(parsed.diagnostics.front());
  REQUIRE_MESSAGE(parsed.ok(), first_diagnostic);
  return std::move(parsed.workspace);
}

RunOptions quiet_options() {
  RunOptions options;
  options.no_timestamp = true;
  options.size = 40;
  return options;
}

}  // namespace

TEST_CASE("the smallest workspace parses") {
  ParseResult parsed = parse_workspace("institution C = builtin cpc;");
  REQUIRE(parsed.ok());
  CHECK(parsed.workspace.institutions.count("C") == 1);
}

TEST_CASE("parsing is total and reports positioned diagnostics") {
  // The dangling reference names sigma; the following declaration still
  // parses.
  ParseResult parsed = parse_workspace(
      "institution C = builtin cpc;\n"
      "spec S = flat C { p; p -> q; };\n"
      "spec U = translate S through sigma;\n"
      "spec V = flat C { p; };\n");
  REQUIRE(parsed.diagnostics.size() == 1);
  CHECK(parsed.diagnostics[0].line == 3);
  CHECK(parsed.diagnostics[0].message.find("sigma") != std::string::npos);
  CHECK(parsed.workspace.specifications.count("V") == 1);
}

TEST_CASE("parse diagnostics carry line and column for syntax errors") {
  ParseResult parsed = parse_workspace("institution C = builtin cpc\n");
  REQUIRE(parsed.diagnostics.size() == 1);
  CHECK(parsed.diagnostics[0].message.find("';'") != std::string::npos);
}

TEST_CASE("duplicate names are rejected") {
  ParseResult parsed = parse_workspace(
      "institution C = builtin cpc;\ninstitution C = builtin cpc;\n");
  REQUIRE(parsed.diagnostics.size() == 1);
  CHECK(parsed.diagnostics[0].message.find("duplicate") != std::string::npos);
}

TEST_CASE("sentence literals parse with the documented precedence") {
  Signature sig = logics::cpc_signature();
  using namespace piref::mk;
  CHECK(parse_sentence_text("p -> q -> r", sig) ==
        Sentence(imp(v("p"), imp(v("q"), v("r")))));
  CHECK(parse_sentence_text("p \\/ q /\\ r", sig) ==
        Sentence(or_(v("p"), and_(v("q"), v("r")))));
  CHECK(parse_sentence_text("~p \\/ ~q", sig) ==
        Sentence(or_(not_(v("p")), not_(v("q")))));
  CHECK(parse_sentence_text("(p -> q) -> r", sig) ==
        Sentence(imp(imp(v("p"), v("q")), v("r"))));
  Signature ba = logics::ba_signature();
  CHECK(parse_sentence_text("p /\\ q ~= q /\\ p", ba) ==
        Sentence(and_(v("p"), v("q")), and_(v("q"), v("p"))));
  CHECK_THROWS_AS(parse_sentence_text("p ->", sig), InputError);
  CHECK_THROWS_AS(parse_sentence_text("p q", sig), InputError);
  CHECK_THROWS_AS(parse_sentence_text("box p", sig), InputError);
}

TEST_CASE("printing and parsing round-trip on sampled sentences") {
  Signature sig = logics::s5g_signature();
  for (const Sentence& s : corpus::gen_sentences(sig, 4, 60, 27))
    CHECK(parse_sentence_text(piref::to_string(s), sig) == s);
  Signature ba = logics::ba_signature();
  for (const Sentence& s : corpus::gen_sentences(ba, 3, 40, 28))
    CHECK(parse_sentence_text(piref::to_string(s), ba) == s);
}

TEST_CASE("eval answers membership queries with matching exit codes") {
  Workspace ws = parse_or_fail(kMiniWorkspace);
  RunOptions options = quiet_options();

  RunResult good = run_command(ws, "eval", {"S", "q"}, options);
  CHECK(good.exit_code == 0);
  CHECK(good.text.find("verdict: entailed") != std::string::npos);

  RunResult bad = run_command(ws, "eval", {"S", "r"}, options);
  CHECK(bad.exit_code == 1);
  CHECK(bad.text.find("not-entailed") != std::string::npos);

  CHECK_THROWS_AS(run_command(ws, "eval", {"S", "p +"}, options), InputError);
  CHECK_THROWS_AS(run_command(ws, "eval", {"missing", "p"}, options),
                  InputError);
}

TEST_CASE("normalize renders the flattened presentation") {
  Workspace ws = parse_or_fail(kMiniWorkspace);
  RunOptions options = quiet_options();
  RunResult on_union = run_command(ws, "normalize", {"T"}, options);
  RunResult on_flat = run_command(ws, "normalize", {"S"}, options);
  CHECK(on_union.exit_code == 0);
  // union S S has the same presentation as S.
  CHECK(on_union.json["axioms"] == on_flat.json["axioms"]);
}

TEST_CASE("check commands map report content to exit codes") {
  Workspace ws = parse_or_fail(kMiniWorkspace);
  RunOptions options = quiet_options();

  RunResult pass = run_command(ws, "check-interpretation", {"c2b"}, options);
  CHECK(pass.exit_code == 0);
  CHECK(pass.text.find("result: PASS") != std::string::npos);
  CHECK(pass.json["counts"]["fail"] == 0);

  RunResult fail = run_command(ws, "check-interpretation", {"collapse"},
                               options);
  CHECK(fail.exit_code == 1);
  CHECK(fail.text.find("result: FAIL") != std::string::npos);
  CHECK(fail.json["counts"]["fail"].get<int>() > 0);

  CHECK_THROWS_AS(run_command(ws, "definitely-not-a-command", {}, options),
                  InputError);
}

TEST_CASE("unknown-only reports exit with the inconclusive code") {
  // modal-k over a modal corpus cannot certify entailments, so the closure
  // suite carries Unknowns but no failures.
  Workspace ws =
      parse_or_fail("institution MK = builtin modal-k;");
  RunOptions options = quiet_options();
  options.size = 30;
  RunResult result = run_command(ws, "check-closure", {"MK"}, options);
  CHECK(result.exit_code == 2);
  CHECK(result.text.find("result: INCONCLUSIVE") != std::string::npos);
  CHECK(result.json["counts"]["fail"] == 0);
  CHECK(result.json["counts"]["unknown"].get<int>() > 0);
}

TEST_CASE("reports are byte-identical for a fixed seed") {
  Workspace ws = parse_or_fail(kMiniWorkspace);
  RunOptions options = quiet_options();
  for (const char* command :
       {"check-interpretation", "check-semi", "check-naturality"}) {
    RunResult first = run_command(ws, command, {"c2b"}, options);
    RunResult again = run_command(ws, command, {"c2b"}, options);
    CHECK(first.text == again.text);
    CHECK(first.json.dump() == again.json.dump());
  }
}

TEST_CASE("check-conservative distinguishes renamings from collapses") {
  Workspace ws = parse_or_fail(
      "institution C = builtin cpc;\n"
      "morphism swap : C -> C = { p |-> q; q |-> p; };\n"
      "morphism squash : C -> C = { p |-> q; };\n");
  RunOptions options = quiet_options();
  options.size = 80;
  CHECK(run_command(ws, "check-conservative", {"swap", "C"}, options)
            .exit_code == 0);
  RunResult squash =
      run_command(ws, "check-conservative", {"squash", "C"}, options);
  CHECK(squash.exit_code == 1);
  CHECK(squash.text.find("[reflection]") != std::string::npos);
}

TEST_CASE("named corpora override the generated ones") {
  Workspace ws = parse_or_fail(
      "institution C = builtin cpc;\n"
      "institution MK = builtin modal-k;\n"
      "corpus props = entailments C size 30 seed 5 depth 3;\n");
  RunOptions options = quiet_options();
  options.corpus_name = "props";
  // A propositional corpus keeps modal-k exact, so the syntactic refinement
  // check is conclusive.
  RunResult result = run_command(ws, "check-syntactic", {"C", "MK"}, options);
  CHECK(result.exit_code == 0);
}
