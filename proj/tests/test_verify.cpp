#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hitrans/verify.hpp"

using namespace hitrans;

namespace {
Word W(const char* text) { return Word::parse(text); }
}

TEST_CASE("check_freeness flags identity-acting generators") {
  GeneratorAssignment a;
  a.set("t1", complete(PartialInjection{}));  // identity
  a.set("s", FinPerm::shift(1));
  FreenessReport report = check_freeness(a, 1, Window(10));
  REQUIRE(report.flagged.size() == 2);  // t1 and ~t1 fix everything
  CHECK(report.flagged[0] == W("t1"));
  CHECK(report.flagged[1] == W("~t1"));
  CHECK(report.words_checked == 4);
}

TEST_CASE("shift-only words are never flagged") {
  GeneratorAssignment a;
  a.set("s", FinPerm::shift(1));
  FreenessReport report = check_freeness(a, 3, Window(2));
  CHECK(report.clean());
}

TEST_CASE("a completed run has no freeness flags at the swept length") {
  ConstructionBudget b;
  b.n_free = 2;
  b.word_len = 2;
  b.tuple_max = 0;
  b.window = Window(0);
  ConstructionResult run = run_construction(b);
  GeneratorAssignment total = finalize(run.assignment);
  Window search(log_extent(run.log));
  CHECK(check_freeness(total, 2, search).clean());
}

TEST_CASE("the shift alone is 1-transitive on any window") {
  GeneratorAssignment a;
  a.set("s", FinPerm::shift(1));
  TransitivityReport report = check_transitivity(a, 1, Window(1), 2);
  CHECK(report.pairs_checked == 9);
  CHECK(report.clean());
}

TEST_CASE("an identity-only assignment realizes nothing off the diagonal") {
  GeneratorAssignment a;
  a.set("t1", complete(PartialInjection{}));
  TransitivityReport report = check_transitivity(a, 2, Window(1), 3);
  CHECK(report.pairs_checked == 36);
  CHECK(report.unrealized.size() == 30);  // only the six diagonal pairs work
}

TEST_CASE("a completed run realizes every swept tuple pair") {
  ConstructionBudget b;
  b.n_free = 2;
  b.word_len = 2;
  b.tuple_max = 2;
  b.window = Window(2);
  ConstructionResult run = run_construction(b);
  GeneratorAssignment total = finalize(run.assignment);
  for (int k = 1; k <= 2; ++k)
    CHECK(check_transitivity(total, k, Window(2), 2, &run.log).clean());
}

TEST_CASE("check_nondiscrete is degenerate on the identity word") {
  GeneratorAssignment a;
  a.set("s", FinPerm::shift(1));
  NondiscreteReport report = check_nondiscrete(Word(), a, Window(2), 100);
  CHECK(report.q == 1);
  CHECK(report.degenerate());
}

TEST_CASE("check_nondiscrete throws on open orbits") {
  GeneratorAssignment a;
  a.set("s", FinPerm::shift(1));
  CHECK_THROWS_AS(check_nondiscrete(W("s"), a, Window(0), 100), OrbitExceedsCap);
}

TEST_CASE("check_nondiscrete finds a fixing power and a moved point") {
  ConstructionBudget b;
  b.n_free = 2;
  b.word_len = 2;
  b.tuple_max = 0;
  b.window = Window(2);
  b.orbit_target = 4;
  b.designated = {W("t2")};
  ConstructionResult run = run_construction(b);
  GeneratorAssignment total = finalize(run.assignment);

  NondiscreteReport report =
      check_nondiscrete(W("t2"), total, Window(2), 10000, orbit_hint_points(run.log, W("t2")));
  REQUIRE_FALSE(report.degenerate());
  // w^q fixes the window pointwise and moves the reported point
  Word power = W("t2").pow(report.q);
  for (Int a = -2; a <= 2; ++a) CHECK(evaluate(power, total, a) == a);
  CHECK(evaluate(power, total, *report.moved) != *report.moved);

  NondiscretePairReport pair = check_nondiscrete_pair(
      W("t2"), W("t2"), total, Window(2), 10000, orbit_hint_points(run.log, W("t2")),
      orbit_hint_points(run.log, W("t2")));
  CHECK(pair.q == report.q);  // lcm with itself
  CHECK(pair.moved_first.has_value());
  CHECK(pair.moved_second.has_value());
}

TEST_CASE("check_embedding classifies the sample") {
  ConstructionBudget b;
  b.n_free = 1;
  b.word_len = 1;
  b.tuple_max = 0;
  b.window = Window(0);
  ConstructionResult run = run_construction(b);
  EmbeddingSpec spec = surface_hom_even(finalize(run.assignment), 1, 1);

  Presentation p = spec.presentation();
  EmbeddingReport report =
      check_embedding(spec, {p.relator, W("a1"), W("b1 * ~a1")}, Window(30));
  REQUIRE(report.items.size() == 3);
  CHECK(report.items[0].cls == EmbeddingClass::RelatorEquivalent);
  CHECK(report.items[1].cls == EmbeddingClass::CertifiedNontrivial);  // phi1 is the shift
  // b1 a1^-1 is never relator-equivalent: the symbolic image is nonempty
  CHECK(report.items[2].cls != EmbeddingClass::RelatorEquivalent);

  // symbolic/numeric coherence: a symbolically empty image fixes everything
  for (const EmbeddingItem& item : report.items) {
    if (item.cls != EmbeddingClass::RelatorEquivalent) continue;
    for (Int a = -40; a <= 40; ++a) CHECK(spec.act(item.element, a) == a);
  }
}

TEST_CASE("replay_log notices tampering") {
  ConstructionBudget b;
  b.n_free = 1;
  b.word_len = 1;
  b.tuple_max = 0;
  b.window = Window(0);
  ConstructionResult run = run_construction(b);
  GeneratorAssignment total = finalize(run.assignment);
  CHECK(replay_log(run.log, total).clean());

  ConstructionLog tampered = run.log;
  tampered.entries[0].witness.moved_to += 1;
  CHECK(replay_log(tampered, total).failed == 1);

  GeneratorAssignment wrong;
  wrong.set("t1", complete(PartialInjection{}));
  wrong.set("s", FinPerm::shift(1));
  CHECK_FALSE(replay_log(run.log, wrong).clean());
}
