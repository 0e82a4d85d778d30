#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hitrans/surface.hpp"

using namespace hitrans;

namespace {
Word W(const char* text) { return Word::parse(text); }
}

TEST_CASE("surface presentations") {
  Presentation even1 = presentation_even(1);
  CHECK(even1.generators == std::vector<std::string>{"a1", "a1'", "b1", "b1'"});
  CHECK(even1.relator == W("a1 * a1' * ~a1 * ~a1' * b1' * b1 * ~b1' * ~b1"));

  Presentation odd1 = presentation_odd(1);
  CHECK(odd1.generators == std::vector<std::string>{"a1", "a1'", "b", "b'", "c1", "c1'"});
  CHECK(odd1.relator ==
        W("a1 * a1' * ~a1 * ~a1' * b' * b * ~b' * ~b * c1' * c1 * ~c1' * ~c1"));

  CHECK(presentation_even(2).relator.size() == 16);  // four commutators
  CHECK_THROWS_AS(presentation_even(0), std::invalid_argument);
  CHECK_THROWS_AS(presentation_for_genus(1), std::invalid_argument);
}

TEST_CASE("even Dehn twist fixes the a-side and conjugates the b-side") {
  GroupMap h = dehn_twist_even(1);
  Word x = twist_curve_even(1);
  CHECK(h.image("a1") == W("a1"));
  CHECK(h.image("a1'") == W("a1'"));
  CHECK(h.image("b1") == x * W("b1") * x.inverse());
  CHECK(h.image("b1'") == x * W("b1'") * x.inverse());

  // h^2(b1) = x^2 b1 x^-2
  GroupMap h2 = power(h, 2);
  CHECK(h2.image("b1") == x.pow(2) * W("b1") * x.pow(-2));
}

TEST_CASE("odd twists match the displayed tables and commute") {
  auto [delta, zeta] = twists_odd(1);
  Word x = twist_curve_odd(1);
  CHECK(delta.image("c1") == x * W("c1") * x.inverse());
  CHECK(delta.image("b") == x * W("b"));
  CHECK(delta.image("b'") == W("b'"));
  CHECK(zeta.image("a1") == W("a1"));
  CHECK(zeta.image("b") == W("b * ~b'"));
  CHECK(zeta.image("b'") == W("b'"));

  GroupMap dz = compose(delta, zeta);
  GroupMap zd = compose(zeta, delta);
  CHECK(dz.image("b") == x * W("b") * W("b'").inverse());
  for (int r = 1; r <= 2; ++r) {  // genus 3 and 5
    auto [d, z] = twists_odd(r);
    GroupMap ab = compose(d, z);
    GroupMap ba = compose(z, d);
    for (const auto& g : presentation_odd(r).generators)
      CHECK(ab.image(g) == ba.image(g));
  }
}

TEST_CASE("folding maps kill the relator") {
  GroupMap k1 = folding_even(1);
  CHECK(k1.image("a1") == W("phi1"));
  CHECK(k1.image("b1") == W("phi1"));
  CHECK(k1.image("a1'") == W("phi1'"));
  CHECK(k1.image("b1'") == W("phi1'"));
  CHECK(k1.apply(presentation_even(1).relator).empty());
  CHECK(apply_map(k1, W("a1 * ~b1")).empty());  // both map to phi1

  GroupMap kodd = folding_odd(1);
  CHECK(kodd.image("b").empty());
  CHECK(kodd.image("b'") == W("tau"));
  CHECK(kodd.image("c1") == W("phi1"));
  CHECK(kodd.apply(presentation_odd(1).relator).empty());
}

TEST_CASE("group map construction validates relator collapse eagerly") {
  Presentation p = presentation_even(1);
  std::map<std::string, Word> bad;
  bad["a1"] = W("phi1");
  bad["a1'"] = W("phi1'");
  bad["b1"] = W("phi1'");  // transcription slip: should be phi1
  bad["b1'"] = W("phi1'");
  CHECK_THROWS_AS(GroupMap::onto_free(p, free_alphabet_even(1), bad), std::invalid_argument);

  std::map<std::string, Word> not_endo;
  not_endo["a1"] = W("a1");
  not_endo["a1'"] = W("a1'");
  not_endo["b1"] = W("a1");  // collapses b1 into the a-handle: not a relation
  not_endo["b1'"] = W("b1'");
  CHECK_THROWS_AS(GroupMap::endomorphism(p, not_endo), std::invalid_argument);
}

TEST_CASE("twisted foldings: f0 = k and the closed form for f1") {
  GroupMap f0 = twist_folding(2, 0);
  GroupMap k = folding_even(1);
  for (const auto& g : presentation_even(1).generators)
    CHECK(f0.image(g) == k.image(g));

  // f1(b1) = gamma phi1 gamma^-1 with gamma = [phi1, phi1']
  GroupMap f1 = twist_folding(2, 1);
  Word gamma = commutator(W("phi1"), W("phi1'"));
  Word expected = gamma * W("phi1") * gamma.inverse();
  CHECK(f1.image("b1") == expected);
  CHECK(expected.size() == 9);
  CHECK(apply_map(f1, W("b1 * ~a1")) == gamma * W("phi1") * gamma.inverse() * W("~phi1"));
  CHECK_FALSE(apply_map(f1, W("b1 * ~a1")).empty());
}

TEST_CASE("twist shape: f_n(b_i) = k(x)^n phi_i k(x)^-n") {
  for (int r = 1; r <= 2; ++r) {
    GroupMap k = folding_even(r);
    Word gx = k.apply(twist_curve_even(r));
    for (int n = 0; n <= 5; ++n) {
      GroupMap fn = twist_folding(2 * r, n);
      for (int i = 1; i <= r; ++i) {
        std::string phi = "phi" + std::to_string(i);
        CHECK(fn.image("b" + std::to_string(i)) ==
              gx.pow(n) * Word::generator(phi) * gx.pow(-n));
        CHECK(fn.image("a" + std::to_string(i)) == Word::generator(phi));
      }
      CHECK(fn.apply(presentation_even(r).relator).empty());
    }
  }
}

TEST_CASE("odd twisted foldings kill the relator and rho_1(b) reduces") {
  // rho_1(b) = k(x b b'^-1) = gammahat tau^-1 with gammahat = [phi1,phi1'] tau
  GroupMap rho1 = twist_folding(3, 1);
  Word gammahat = commutator(W("phi1"), W("phi1'")) * W("tau");
  CHECK(rho1.image("b") == gammahat * W("~tau"));
  CHECK(rho1.image("b") == commutator(W("phi1"), W("phi1'")));  // tau cancels
  CHECK(rho1.image("b'") == W("tau"));

  for (int genus : {3, 5})
    for (int n = 0; n <= 5; ++n)
      CHECK(twist_folding(genus, n).apply(presentation_for_genus(genus).relator).empty());
}

TEST_CASE("every twisted folding kills its relator up to n = 10") {
  for (int genus : {2, 3}) {
    Word relator = presentation_for_genus(genus).relator;
    for (int n = 0; n <= 10; ++n)
      CHECK(twist_folding(genus, n).apply(relator).empty());
  }
}

TEST_CASE("faithful index on the even samples") {
  CHECK(faithful_index(2, W("a1"), 10) == 0);
  CHECK(faithful_index(2, W("b1 * ~a1"), 10) == 1);
  CHECK(faithful_index(2, W("a1 * b1 * ~a1 * ~b1"), 10) == 1);
  CHECK_FALSE(faithful_index(2, presentation_even(1).relator, 10).has_value());
  CHECK_THROWS_AS(faithful_index(2, W("zz"), 5), std::invalid_argument);
}

TEST_CASE("faithful index is stable under a larger search bound") {
  std::vector<Word> sample = {W("a1"), W("b1 * ~a1"), W("a1 * b1 * ~a1 * ~b1"),
                              W("b1' * a1 * ~b1'")};
  for (const Word& g : sample) {
    auto at10 = faithful_index(2, g, 10);
    auto at20 = faithful_index(2, g, 20);
    REQUIRE(at10.has_value());
    CHECK(at10 == at20);
  }
}

TEST_CASE("faithful index on the odd samples") {
  auto b_index = faithful_index(3, W("b"), 5);
  REQUIRE(b_index.has_value());
  CHECK(*b_index <= 5);
  auto bb_index = faithful_index(3, W("b * ~b'"), 5);
  REQUIRE(bb_index.has_value());
  CHECK(*bb_index <= 5);
}
