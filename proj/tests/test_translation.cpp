#include <doctest.h>

#include "piref/corpus/generators.hpp"
#include "piref/translation/interpretation.hpp"
#include "piref/translation/naturality.hpp"
#include "test_helpers.hpp"

using namespace piref;
using namespace piref::mk;

TEST_CASE("translate_sentence maps sentences to validated image sets") {
  auto cpc = logics::cpc_institution();
  const Signature& sig = cpc.only_signature();

  SUBCASE("identity translation gives singletons") {
    Translation id = identity_translation(cpc);
    Sentence s(and_(v("p"), v("q")));
    CHECK(translate_sentence(id, sig, s) == SentenceSet{s});
  }

  SUBCASE("the flagship translation equates formulas with top") {
    Translation t = testing::make_cpc2ba();
    Sentence s(and_(v("p"), v("q")));
    CHECK(translate_sentence(t, sig, s) ==
          SentenceSet{Sentence(and_(v("p"), v("q")), top())});
  }

  SUBCASE("elementwise extension unions the images") {
    Translation t = testing::make_cpc2ba();
    SentenceSet set{Sentence(v("p")), Sentence(v("q"))};
    CHECK(translate_sentence(t, sig, set) ==
          SentenceSet{Sentence(v("p"), top()), Sentence(v("q"), top())});
  }

  SUBCASE("empty images are rejected as ill-formed") {
    Translation bad(
        "empty", cpc, cpc, [](const Signature& s) { return s; },
        [](const SignatureMorphism& m) { return m; },
        [](const Signature&, const Sentence&) {
          return std::vector<Sentence>{};
        });
    CHECK_THROWS_AS(translate_sentence(bad, sig, Sentence(v("p"))),
                    InputError);
  }

  SUBCASE("unknown signatures are rejected") {
    Translation t = testing::make_cpc2ba();
    Signature other("W", 1, logics::boolean_connectives(), {"x"});
    CHECK_THROWS_AS(translate_sentence(t, other, Sentence(v("x"))),
                    InputError);
  }
}

TEST_CASE("elementwise extension is monotone and union-preserving") {
  auto cpc = logics::cpc_institution();
  const Signature& sig = cpc.only_signature();
  Translation t = testing::make_cpc2ba();
  auto sentences = corpus::gen_sentences(sig, 3, 30, 19);
  for (std::size_t i = 0; i + 3 < sentences.size(); i += 4) {
    SentenceSet a{sentences[i], sentences[i + 1]};
    SentenceSet b{sentences[i + 2], sentences[i + 3]};
    SentenceSet joint = translate_sentence(t, sig, a.union_with(b));
    SentenceSet split = translate_sentence(t, sig, a)
                            .union_with(translate_sentence(t, sig, b));
    CHECK(joint == split);
    CHECK(translate_sentence(t, sig, a).subset_of(joint));
  }
}

TEST_CASE("classify separates self, functional and identity translations") {
  auto cpc = logics::cpc_institution();
  const Signature& sig = cpc.only_signature();
  auto corpus = corpus::gen_entailment_corpus(cpc, sig, 30, 2);

  SUBCASE("identity translation carries all three flags") {
    TranslationFlags flags = classify(identity_translation(cpc), corpus);
    CHECK(flags.self);
    CHECK(flags.functional);
    CHECK(flags.identity);
  }

  SUBCASE("the flagship translation is functional only") {
    TranslationFlags flags = classify(testing::make_cpc2ba(), corpus);
    CHECK_FALSE(flags.self);
    CHECK(flags.functional);
    CHECK_FALSE(flags.identity);
  }

  SUBCASE("a doubling self-translation is self only") {
    Translation doubling(
        "doubling", cpc, cpc, [](const Signature& s) { return s; },
        [](const SignatureMorphism& m) { return m; },
        [](const Signature&, const Sentence& s) {
          return std::vector<Sentence>{
              s, Sentence(and_(s.component(0), s.component(0)))};
        });
    TranslationFlags flags = classify(doubling, corpus);
    CHECK(flags.self);
    CHECK_FALSE(flags.functional);
    CHECK_FALSE(flags.identity);
  }
}

TEST_CASE("naturality squares") {
  auto cpc = logics::cpc_institution();
  const Signature& sig = cpc.only_signature();

  SUBCASE("identity translation always passes") {
    auto squares = corpus::gen_morphism_squares(cpc, 30, 7);
    CheckReport report = check_naturality(identity_translation(cpc), squares);
    CHECK(report.all_pass());
  }

  SUBCASE("hand-checked square for the flagship translation") {
    Translation t = testing::make_cpc2ba();
    corpus::CheckCorpus corpus;
    corpus.squares.push_back(
        {SignatureMorphism::substitution(sig,
                                         {{"p", and_(v("q"), v("r"))}}),
         Sentence(v("p"))});
    CheckReport report = check_naturality(t, corpus);
    CHECK(report.all_pass());
  }

  SUBCASE("flagship translation passes on sampled squares") {
    Translation t = testing::make_cpc2ba();
    auto squares = corpus::gen_morphism_squares(cpc, 50, 7);
    CheckReport report = check_naturality(t, squares);
    CHECK(report.all_pass());
  }

  SUBCASE("a non-natural sentence map is caught with its square") {
    // Sends p to {p ~= top} but anything built with /\ to {bot ~= top}:
    // the square for p |-> p /\ p breaks.
    auto ba = logics::ba_institution();
    Signature ba_sig = ba.only_signature();
    Translation skew(
        "skew", cpc, ba, [ba_sig](const Signature&) { return ba_sig; },
        [ba_sig](const SignatureMorphism& m) {
          std::map<std::string, Term> images(m.term_images().begin(),
                                             m.term_images().end());
          return SignatureMorphism::substitution(ba_sig, std::move(images));
        },
        [](const Signature&, const Sentence& s) {
          if (!s.component(0).is_variable())
            return std::vector<Sentence>{Sentence(bot(), top())};
          return std::vector<Sentence>{Sentence(s.component(0), top())};
        });
    corpus::CheckCorpus corpus;
    corpus.squares.push_back(
        {SignatureMorphism::substitution(sig, {{"p", and_(v("p"), v("p"))}}),
         Sentence(v("p"))});
    CheckReport report = check_naturality(skew, corpus);
    CHECK(report.fail_count() == 1);
  }
}

TEST_CASE("semi-interpretation checks") {
  auto cpc = logics::cpc_institution();
  const Signature& sig = cpc.only_signature();
  auto corpus = corpus::gen_entailment_corpus(cpc, sig, 100, 3);

  SUBCASE("the identity self-translation always passes") {
    CheckReport report =
        is_semi_interpretation(identity_translation(cpc), corpus);
    CHECK(report.all_pass());
  }

  SUBCASE("the flagship translation preserves consequence") {
    CheckReport report =
        is_semi_interpretation(testing::make_cpc2ba(), corpus);
    CHECK(report.all_pass());
  }

  SUBCASE("mapping to 'formula ~= bot' breaks preservation on a tautology") {
    corpus::CheckCorpus single;
    single.items.push_back({sig, {}, Sentence(or_(v("p"), not_(v("p")))),
                            Verdict::Kind::Entailed});
    CheckReport report = is_semi_interpretation(testing::make_tobot(), single);
    CHECK(report.count(CheckOutcome::Fail, "preservation") == 1);
  }
}

TEST_CASE("interpretation checks both directions") {
  auto cpc = logics::cpc_institution();
  const Signature& sig = cpc.only_signature();
  auto corpus = corpus::gen_entailment_corpus(cpc, sig, 100, 3);

  SUBCASE("identity and flagship translations pass") {
    CHECK(is_interpretation(identity_translation(cpc), corpus).all_pass());
    CHECK(is_interpretation(testing::make_cpc2ba(), corpus).all_pass());
  }

  SUBCASE("the collapse translation preserves but fails reflection") {
    corpus::CheckCorpus single;
    single.items.push_back(
        {sig, {}, Sentence(v("p")), Verdict::Kind::NotEntailed});
    CheckReport report = is_interpretation(testing::make_collapse(), single);
    CHECK(report.count(CheckOutcome::Fail, "reflection") == 1);
    CHECK(report.count(CheckOutcome::Fail, "preservation") == 0);
  }

  SUBCASE("interpretation subsumes semi-interpretation on the same corpus") {
    for (const Translation& t :
         {identity_translation(cpc), testing::make_cpc2ba(),
          testing::make_collapse()}) {
      CheckReport full = is_interpretation(t, corpus);
      CheckReport semi = is_semi_interpretation(t, corpus);
      CHECK(full.count(CheckOutcome::Fail, "preservation") ==
            semi.count(CheckOutcome::Fail, "preservation"));
      if (full.all_pass()) CHECK(semi.all_pass());
    }
  }

  SUBCASE("reported failures replay item by item") {
    CheckReport report = is_interpretation(testing::make_collapse(), corpus);
    for (std::size_t i = 0; i < report.items().size(); ++i) {
      if (report.items()[i].outcome != CheckOutcome::Fail) continue;
      corpus::CheckCorpus single;
      single.items.push_back(corpus.items[i]);
      CheckReport rerun = is_interpretation(testing::make_collapse(), single);
      REQUIRE(rerun.items().size() == 1);
      CHECK(rerun.items()[0].outcome == CheckOutcome::Fail);
      CHECK(rerun.items()[0].aspect == report.items()[i].aspect);
    }
  }
}
