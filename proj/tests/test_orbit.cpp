#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "hitrans/orbit.hpp"

using namespace hitrans;

namespace {

Word W(const char* text) { return Word::parse(text); }

GeneratorAssignment shift_only() {
  GeneratorAssignment a;
  a.set("s", FinPerm::shift(1));
  return a;
}

}  // namespace

TEST_CASE("the shift has one open orbit through any window") {
  OrbitReport report = orbit_structure(W("s"), shift_only(), Window(2), 100);
  CHECK(report.orbit_lengths.empty());
  CHECK(report.truncated == std::vector<Int>{-2, -1, 0, 1, 2});
  CHECK_FALSE(report.all_finite());
}

TEST_CASE("the identity word fixes every window point") {
  OrbitReport report = orbit_structure(Word(), shift_only(), Window(2), 100);
  CHECK(report.orbit_lengths == std::vector<Int>{1, 1, 1, 1, 1});
  CHECK(report.all_finite());
  CHECK(report.max_length() == 1);
}

TEST_CASE("a completed 6-cycle shows up as one orbit of length 6") {
  GeneratorAssignment a;
  a.set("t", complete(PartialInjection::from_pairs({{0, 5}})));
  OrbitReport report = orbit_structure(W("t"), a, Window(5), 100);
  CHECK(report.orbit_lengths == std::vector<Int>{1, 1, 1, 1, 1, 6});
  CHECK(report.all_finite());

  Int q = window_fixing_power(W("t"), a, Window(5), 100);
  CHECK(q == 6);
  Word power = W("t").pow(q);
  for (Int x = -5; x <= 5; ++x) CHECK(evaluate(power, a, x) == x);
}

TEST_CASE("window_fixing_power of the identity is 1") {
  CHECK(window_fixing_power(Word(), shift_only(), Window(3), 100) == 1);
}

TEST_CASE("window_fixing_power refuses open orbits") {
  CHECK_THROWS_AS(window_fixing_power(W("s"), shift_only(), Window(0), 100), OrbitExceedsCap);
}

TEST_CASE("reported orbits partition the window") {
  std::mt19937_64 rng(808);
  std::uniform_int_distribution<Int> entry(-12, 12);
  for (int trial = 0; trial < 50; ++trial) {
    PartialInjection t1, t2;
    for (int i = 0; i < 8; ++i) {
      Int src = entry(rng);
      Int tgt = entry(rng);
      if (!t1.defines(src) && !t1.hits(tgt)) t1.insert(src, tgt);
      src = entry(rng);
      tgt = entry(rng);
      if (!t2.defines(src) && !t2.hits(tgt)) t2.insert(src, tgt);
    }
    GeneratorAssignment a;
    a.set("t1", complete(t1));
    a.set("t2", complete(t2));
    Word w = trial % 2 == 0 ? W("t1 * t2") : W("t2 * ~t1 * t2");
    Window win(6);
    OrbitReport report = orbit_structure(w, a, win, 500);

    Int covered = 0;
    for (const OrbitInfo& info : report.details) covered += info.window_points;
    CHECK(covered + static_cast<Int>(report.truncated.size()) == win.size());

    // every reported orbit is genuinely disjoint from the others on the window
    std::set<Int> seen;
    for (const OrbitInfo& info : report.details) {
      Int b = info.representative;
      for (Int i = 0; i < info.length; ++i) {
        if (win.contains(b)) CHECK(seen.insert(b).second);
        b = evaluate(w, a, b);
      }
      CHECK(b == info.representative);  // the cycle closes at its length
    }
    for (Int p : report.truncated) CHECK(seen.insert(p).second);
  }
}
