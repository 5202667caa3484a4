#include <doctest.h>

#include "piref/corpus/generators.hpp"
#include "piref/logics/deductive_system.hpp"
#include "piref/logics/sub_institution.hpp"

using namespace piref;
using namespace piref::mk;
using logics::ModalLogic;

TEST_CASE("cpc entailment examples") {
  CHECK(logics::cpc_entails(SentenceSet{Sentence(and_(v("p"), v("q")))},
                            Sentence(v("p")))
            .is_entailed());
  CHECK(logics::cpc_entails({}, Sentence(or_(v("p"), not_(v("p")))))
            .is_entailed());

  Verdict refuted = logics::cpc_entails(
      SentenceSet{Sentence(imp(v("p"), v("q")))}, Sentence(v("q")));
  REQUIRE(refuted.is_not_entailed());
  CHECK(to_string(refuted.witness()) == "p=0 q=0");

  CHECK_THROWS_AS(logics::cpc_entails({}, Sentence(v("p"), v("q"))),
                  InputError);
}

TEST_CASE("boolean equational entailment examples") {
  CHECK(logics::ba_entails(SentenceSet{Sentence(v("p"), top())},
                           Sentence(or_(v("p"), v("q")), top()))
            .is_entailed());
  CHECK(logics::ba_entails({}, Sentence(and_(v("p"), v("q")),
                                        and_(v("q"), v("p"))))
            .is_entailed());

  Verdict refuted =
      logics::ba_entails(SentenceSet{Sentence(or_(v("p"), v("q")), top())},
                         Sentence(v("p"), top()));
  REQUIRE(refuted.is_not_entailed());
  CHECK(to_string(refuted.witness()) == "p=0 q=1");

  CHECK_THROWS_AS(logics::ba_entails({}, Sentence(v("p"))), InputError);
}

TEST_CASE("truth-table oracles are exact over the full pool") {
  for (auto* inst_name : {"cpc", "ba-eq"}) {
    PiInstitution inst = logics::builtin_institution(inst_name);
    const Signature& sig = inst.only_signature();
    corpus::GenOptions wide;
    wide.variable_cap = 8;  // all pool atoms still fit the default budget
    auto corpus = corpus::gen_entailment_corpus(inst, sig, 60, 31, wide);
    for (const auto& item : corpus.items) {
      Verdict verdict = inst.entails(sig, item.premises, item.conclusion);
      CHECK_FALSE(verdict.is_unknown());
    }
  }
}

TEST_CASE("modal axioms of the S5 presentation are theorems") {
  Sentence axiom_k(imp(box(imp(v("p"), v("q"))),
                       imp(box(v("p")), box(v("q")))));
  Sentence axiom_t(imp(box(v("p")), v("p")));
  Sentence axiom_4(imp(box(v("p")), box(box(v("p")))));
  Sentence axiom_5(imp(dia(v("p")), box(dia(v("p")))));
  for (const Sentence& axiom : {axiom_k, axiom_t, axiom_4, axiom_5}) {
    int bound = logics::s5_small_model_bound({}, axiom);
    CHECK(logics::modal_entails(ModalLogic::S5G, {}, axiom, bound)
              .is_entailed());
  }
}

TEST_CASE("K refutes the reflexivity axiom but cannot certify its own") {
  Sentence axiom_t(imp(box(v("p")), v("p")));
  Verdict refuted = logics::modal_entails(ModalLogic::K, {}, axiom_t, 8);
  REQUIRE(refuted.is_not_entailed());
  CHECK(logics::kripke_replay(refuted.witness(), {}, axiom_t));

  // The K axiom has no countermodel, and the bounded search can only ever
  // refute, so the verdict stays Unknown.
  Sentence axiom_k(imp(box(imp(v("p"), v("q"))),
                       imp(box(v("p")), box(v("q")))));
  Verdict swept = logics::modal_entails(ModalLogic::K, {}, axiom_k, 8);
  CHECK(swept.is_unknown());
}

TEST_CASE("K rejects diamonds") {
  CHECK_THROWS_AS(
      logics::modal_entails(ModalLogic::K, {}, Sentence(dia(v("p"))), 4),
      InputError);
}

TEST_CASE("modal witnesses are deterministic and replay") {
  auto inst = logics::s5g_institution();
  const Signature& sig = inst.only_signature();
  corpus::GenOptions narrow;
  narrow.variable_cap = 3;
  auto corpus = corpus::gen_entailment_corpus(inst, sig, 40, 17, narrow);
  const ClosureOracle& oracle = inst.oracle_for(sig);
  for (const auto& item : corpus.items) {
    Verdict first = oracle.entails(item.premises, item.conclusion);
    Verdict again = oracle.entails(item.premises, item.conclusion);
    CHECK(first.kind() == again.kind());
    if (first.is_not_entailed()) {
      CHECK(to_string(first.witness()) == to_string(again.witness()));
      CHECK(oracle.replay(first.witness(), item.premises, item.conclusion));
    }
  }
}

TEST_CASE("global consequence validates the necessitation rule") {
  // p globally forces box p; locally this would fail.
  CHECK(logics::modal_entails(ModalLogic::S5G,
                              SentenceSet{Sentence(v("p"))},
                              Sentence(box(v("p"))), 8)
            .is_entailed());
}

TEST_CASE("institution_of builds the one-object institution") {
  auto system = logics::cpc_system();
  PiInstitution inst = logics::institution_of(system);
  CHECK(inst.signatures().size() == 1);
  REQUIRE(inst.morphisms().size() == 1);
  CHECK(inst.morphisms().front().is_identity());
  CHECK(inst.morphisms().front().is_substitution());

  SUBCASE("entails agrees with the raw oracle on sampled queries") {
    auto ba = logics::ba_institution();
    const Signature& sig = ba.only_signature();
    auto corpus = corpus::gen_entailment_corpus(ba, sig, 50, 23);
    for (const auto& item : corpus.items) {
      Verdict through_institution =
          ba.entails(sig, item.premises, item.conclusion);
      Verdict direct = logics::ba_entails(item.premises, item.conclusion);
      CHECK(through_institution.kind() == direct.kind());
    }
  }
}

TEST_CASE("sub-institution checks") {
  auto cpc = logics::cpc_institution();
  const Signature& sig = cpc.only_signature();

  SUBCASE("every institution is its own sub-institution") {
    auto corpus = corpus::gen_entailment_corpus(cpc, sig, 30, 3);
    CheckReport report = logics::is_sub_institution(cpc, cpc, corpus);
    CHECK(report.all_pass());
  }

  SUBCASE("a smaller atom pool embeds into the full one") {
    std::vector<std::string> few = {"p", "q", "r", "s"};
    PiInstitution small("cpc4", {logics::cpc_signature(few)},
                        {SignatureMorphism::identity(logics::cpc_signature(few))},
                        {logics::cpc_oracle(few)});
    auto corpus = corpus::gen_entailment_corpus(small,
                                                small.only_signature(), 40, 3);
    CheckReport report = logics::is_sub_institution(small, cpc, corpus);
    CHECK(report.all_pass());
  }

  SUBCASE("the modal closure restricts to the propositional one") {
    auto s5 = logics::s5g_institution();
    auto corpus = corpus::gen_entailment_corpus(cpc, sig, 100, 3);
    CheckReport report = logics::is_sub_institution(cpc, s5, corpus);
    CHECK(report.all_pass());
  }

  SUBCASE("containment fails in the reverse direction") {
    auto s5 = logics::s5g_institution();
    auto corpus = corpus::gen_entailment_corpus(cpc, sig, 10, 3);
    CheckReport report = logics::is_sub_institution(s5, cpc, corpus);
    CHECK(report.fail_count() > 0);
  }
}

TEST_CASE("cpc and boolean-equation consequence interpret each other") {
  auto cpc = logics::cpc_institution();
  const Signature& sig = cpc.only_signature();
  auto corpus = corpus::gen_entailment_corpus(cpc, sig, 100, 41);
  for (const auto& item : corpus.items) {
    Verdict prop = logics::cpc_entails(item.premises, item.conclusion);
    std::vector<Sentence> equations;
    for (const Sentence& premise : item.premises)
      equations.emplace_back(premise.component(0), top());
    Verdict equational =
        logics::ba_entails(SentenceSet(std::move(equations)),
                           Sentence(item.conclusion.component(0), top()));
    CHECK(prop.is_entailed() == equational.is_entailed());
  }
}

TEST_CASE("premise-merged extensions refine the base institution") {
  auto ba = logics::ba_institution();
  SentenceSet extra{Sentence(v("p"), top())};
  PiInstitution stronger = logics::extend_with_axioms(ba, extra, "ba-plus");
  const Signature& sig = stronger.only_signature();
  CHECK(stronger.entails(sig, {}, Sentence(v("p"), top())).is_entailed());
  CHECK(ba.entails(sig, {}, Sentence(v("p"), top())).is_not_entailed());
}
