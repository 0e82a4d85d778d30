#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hitrans/forcing.hpp"
#include "hitrans/orbit.hpp"

using namespace hitrans;

namespace {

Word W(const char* text) { return Word::parse(text); }

std::map<std::string, std::map<Int, Int>> snapshot(const PartialAssignment& pa) {
  std::map<std::string, std::map<Int, Int>> out;
  for (const auto& g : pa.free_generators()) out[g] = pa.table(g).pairs();
  return out;
}

bool contains_all(const PartialAssignment& pa,
                  const std::map<std::string, std::map<Int, Int>>& old) {
  for (const auto& [g, pairs] : old)
    for (const auto& [src, tgt] : pairs)
      if (pa.table(g).image(src) != tgt) return false;
  return true;
}

}  // namespace

TEST_CASE("the shift generator is pinned") {
  CHECK_THROWS_AS(PartialAssignment({"t1", "s"}), std::invalid_argument);
  PartialAssignment pa({"t1"});
  CHECK(pa.step(Letter{"s", 1}, 4) == 5);
  CHECK(pa.step(Letter{"s", -1}, 4) == 3);
  CHECK_FALSE(pa.step(Letter{"t1", 1}, 4).has_value());
  CHECK(pa.alphabet() == std::vector<std::string>{"t1", "s"});
}

TEST_CASE("insertions respect the protected window") {
  PartialAssignment pa({"t1"}, Window(2));
  CHECK_THROWS_AS(pa.insert("t1", 0, 9), std::logic_error);
  CHECK_THROWS_AS(pa.insert("t1", 9, -2), std::logic_error);
  pa.insert("t1", 3, 9);
  CHECK(pa.table("t1").image(3) == 9);
}

TEST_CASE("fresh point rule: smallest absolute value, positive first") {
  PartialAssignment pa({"t1"});
  CHECK(fresh_points(pa, {0, 1, -1}, 2) == std::vector<Int>{2, -2});

  PartialAssignment pb({"t1"}, Window(0));
  CHECK(fresh_points(pb, {}, 1) == std::vector<Int>{1});

  std::set<Int> band;
  for (Int a = -10; a <= 10; ++a) band.insert(a);
  PartialAssignment pc({"t1"}, Window(0));
  CHECK(fresh_points(pc, band, 1) == std::vector<Int>{11});
}

TEST_CASE("force_nontrivial on a single free letter") {
  PartialAssignment pa({"t1"}, Window(1));
  ForceResult res = force_nontrivial(pa, W("t1"));
  REQUIRE(res.inserted.size() == 1);
  // fresh rule: 0, 1, -1 are protected, so the anchors are 2 and -2
  CHECK(res.inserted[0] == Insertion{"t1", 2, -2});
  CHECK(res.witness.moved_from == 2);
  CHECK(res.witness.moved_to == -2);
  CHECK(replay_witness(res.witness, pa));
  CHECK(replay_witness(res.witness, pa.finalized()));
}

TEST_CASE("force_nontrivial short-circuits pure shift powers") {
  PartialAssignment pa({"t1"});
  ForceResult res = force_nontrivial(pa, W("s^5"));
  CHECK(res.inserted.empty());
  CHECK(res.witness.moved_from == 0);
  CHECK(res.witness.moved_to == 5);
  CHECK(replay_witness(res.witness, pa.finalized()));
}

TEST_CASE("force_nontrivial on a commutator") {
  PartialAssignment pa({"t1"});
  ForceResult res = force_nontrivial(pa, W("t1 * s * ~t1 * ~s"));
  CHECK(res.inserted.size() == 2);
  // fresh rule: anchors 0, 1, -1; trace 0 -> 1 -> 2 -> -1 -> -2
  CHECK(res.witness.moved_from == 0);
  CHECK(res.witness.moved_to == -2);
  CHECK(replay_witness(res.witness, pa.finalized()));
  CHECK_THROWS_AS(force_nontrivial(pa, Word()), std::invalid_argument);
}

TEST_CASE("force_mapping picks the first admissible shift") {
  PartialAssignment pa({"t1"}, Window(1));
  ForceResult res = force_mapping(pa, {0}, {4});
  CHECK(res.witness.shift == 2);
  REQUIRE(res.inserted.size() == 1);
  CHECK(res.inserted[0] == Insertion{"t1", 2, 6});
  CHECK(res.witness.word == W("s^2 * t1 * s^-2"));
  GeneratorAssignment total = pa.finalized();
  CHECK(evaluate(res.witness.word, total, 0) == 4);
  // replay the trace by hand: 0 -> 2 -> 6 -> 4
  Trace tr = trace(res.witness.word, total, 0);
  CHECK(tr.points.front() == 0);
  CHECK(tr.points[2] == 2);
  CHECK(tr.points[3] == 6);
  CHECK(tr.points.back() == 4);
}

TEST_CASE("force_mapping accepts identity targets") {
  PartialAssignment pa({"t1"});
  ForceResult res = force_mapping(pa, {5}, {5});
  CHECK(res.inserted.size() == 1);
  CHECK(evaluate(res.witness.word, pa.finalized(), 5) == 5);
}

TEST_CASE("force_mapping realizes a swap with a single shift") {
  PartialAssignment pa({"t1"});
  ForceResult res = force_mapping(pa, {0, 1}, {1, 0});
  CHECK(res.inserted.size() == 2);
  GeneratorAssignment total = pa.finalized();
  CHECK(evaluate(res.witness.word, total, 0) == 1);
  CHECK(evaluate(res.witness.word, total, 1) == 0);
  CHECK_THROWS_AS(force_mapping(pa, {0, 0}, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(force_mapping(pa, {0}, {1, 2}), std::invalid_argument);
}

TEST_CASE("force_long_orbit builds a distinct chain") {
  PartialAssignment pa({"t1"});
  ForceResult res = force_long_orbit(pa, W("t1"), 3);
  CHECK(res.inserted.size() == 2);
  CHECK(res.witness.chain == std::vector<Int>{0, 1, -1});  // fresh rule order
  CHECK(replay_witness(res.witness, pa.finalized()));
}

TEST_CASE("force_long_orbit with t=1 inserts nothing") {
  PartialAssignment pa({"t1"});
  ForceResult res = force_long_orbit(pa, W("t1"), 1);
  CHECK(res.inserted.empty());
  CHECK(res.witness.chain.size() == 1);
}

TEST_CASE("force_long_orbit handles conjugated words") {
  PartialAssignment pa({"t1"});
  ForceResult res = force_long_orbit(pa, W("s * t1 * ~s"), 2);
  CHECK(res.inserted.size() == 1);
  REQUIRE(res.witness.chain.size() == 2);
  CHECK(res.witness.chain[0] != res.witness.chain[1]);
  CHECK(replay_witness(res.witness, pa.finalized()));
  CHECK_THROWS_AS(force_long_orbit(pa, W("s^3"), 2), std::invalid_argument);
  CHECK_THROWS_AS(force_long_orbit(pa, W("t1 * s^2 * ~t1"), 2), std::invalid_argument);
}

TEST_CASE("force_finite_orbit degenerate route closes a fixed point") {
  PartialAssignment pa({"t1"});
  ForceResult res = force_finite_orbit(pa, W("t1"), 0);
  REQUIRE(res.inserted.size() == 1);
  CHECK(res.inserted[0] == Insertion{"t1", 0, 0});
  CHECK(res.witness.cycle == std::vector<Int>{0});
  CHECK(replay_witness(res.witness, pa.finalized()));

  // already closed: nothing inserted, the existing cycle is the witness
  ForceResult again = force_finite_orbit(pa, W("t1"), 0);
  CHECK(again.inserted.empty());
  CHECK(again.witness.cycle == std::vector<Int>{0});
}

TEST_CASE("force_finite_orbit closes mixed words") {
  PartialAssignment pa({"t1"});
  ForceResult res = force_finite_orbit(pa, W("t1 * s"), 0);
  CHECK_FALSE(res.witness.cycle.empty());
  GeneratorAssignment total = pa.finalized();
  CHECK(replay_witness(res.witness, total));
  OrbitReport report = orbit_structure(W("t1 * s"), total, Window(0), 10000);
  CHECK(report.all_finite());
}

TEST_CASE("force_finite_orbit honors a minimum cycle length") {
  PartialAssignment pa({"t1", "t2"});
  ForceResult res = force_finite_orbit(pa, W("t2"), 0, 6);
  CHECK(res.witness.cycle.size() >= 6);
  GeneratorAssignment total = pa.finalized();
  CHECK(replay_witness(res.witness, total));
  OrbitReport report = orbit_structure(W("t2"), total, Window(0), 10000);
  REQUIRE(report.all_finite());
  CHECK(report.max_length() >= 6);
}

TEST_CASE("force_finite_orbit closes conjugated words through the conjugator") {
  PartialAssignment pa({"t1"});
  Word w = W("~s * t1 * s");  // cyclically reduced core t1, conjugator ~s
  ForceResult res = force_finite_orbit(pa, w, 0);
  CHECK(replay_witness(res.witness, pa.finalized()));
  OrbitReport report = orbit_structure(w, pa.finalized(), Window(0), 10000);
  CHECK(report.all_finite());
}

TEST_CASE("forcing grows monotonically and keeps the protected window clean") {
  PartialAssignment pa({"t1", "t2"}, Window(2));
  std::mt19937_64 rng(404);
  std::vector<Witness> witnesses;
  std::vector<Word> pool = {W("t1"),
                            W("t2 * ~t1"),
                            W("s * t2 * ~s * ~t2"),
                            W("t1 * t1"),
                            W("~t2 * s^2 * t1")};
  for (int step = 0; step < 40; ++step) {
    auto old = snapshot(pa);
    ForceResult res;
    switch (step % 4) {
      case 0: res = force_nontrivial(pa, pool[rng() % pool.size()]); break;
      case 1: {
        Int x = static_cast<Int>(rng() % 9) - 4;
        Int y = static_cast<Int>(rng() % 9) - 4;
        res = force_mapping(pa, {x}, {y});
        break;
      }
      case 2: res = force_long_orbit(pa, W("t2 * ~t1"), 1 + static_cast<Int>(rng() % 4)); break;
      case 3: res = force_finite_orbit(pa, W("t2"), 10 + static_cast<Int>(rng() % 5)); break;
    }
    CHECK(contains_all(pa, old));  // monotone growth
    witnesses.push_back(res.witness);
    CHECK(replay_witness(res.witness, pa));
  }
  for (const auto& g : pa.free_generators()) {
    for (const auto& [src, tgt] : pa.table(g).pairs()) {
      CHECK_FALSE(pa.protected_point(src));
      CHECK_FALSE(pa.protected_point(tgt));
    }
  }
  // every witness still replays after all later extensions and completion
  GeneratorAssignment total = pa.finalized();
  for (const Witness& w : witnesses) CHECK(replay_witness(w, total));
}

TEST_CASE("seeded fresh-point selection still yields replayable witnesses") {
  PartialAssignment pa({"t1"}, std::nullopt, 12345u);
  std::vector<Witness> witnesses;
  witnesses.push_back(force_nontrivial(pa, W("t1 * s * t1")).witness);
  witnesses.push_back(force_mapping(pa, {0, 3}, {-2, 7}).witness);
  witnesses.push_back(force_long_orbit(pa, W("t1"), 4).witness);
  witnesses.push_back(force_finite_orbit(pa, W("t1"), 0).witness);
  GeneratorAssignment total = pa.finalized();
  for (const Witness& w : witnesses) CHECK(replay_witness(w, total));
}
