#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "construct.hpp"
#include "garside/text.hpp"

using namespace garside;

namespace {

NormalForm nf(const std::string& word, int n) { return normalize(parse_word(word, n)); }

const char* kExampleX = "2 3 2 1 1 3 2 1 1 2 1 3 2 3 2 1 3 1 3 2 1";
const char* kExampleXt = "3 2 1 3 1 3 2 1 2 3 2 1 1 3 2 1 1 2 1 3 2";

}  // namespace

TEST_CASE("witness patterns") {
  const auto all = default_witness_patterns(4);
  CHECK(all.size() == 6);
  for (const auto& w : all) {
    CHECK(w.first.complement().is_atom());
    CHECK(w.second.is_atom());
    CHECK_FALSE(w.first.complement() == w.second);
  }
  const auto strict = strict_witness_patterns(4);
  REQUIRE(strict.size() == 2);
  CHECK(strict[0].first.complement() == SimpleBraid::atom(4, 2));
  CHECK(strict[0].second == SimpleBraid::atom(4, 1));
  CHECK(strict[1].first == strict[0].first.tau());
  CHECK(strict[1].second == strict[0].second.tau());
  CHECK_THROWS_AS(witness_pattern(4, 2, 2), InvalidParameter);
}

TEST_CASE("worked example is rigid without certificate") {
  const auto x = nf(kExampleX, 4);
  const auto c = fast_rigid_conjugate(x);
  REQUIRE(c);
  CHECK(c->uniqueness == Uniqueness::RigidNoCert);
  CHECK_FALSE(c->witness_position);
  CHECK(c->rigid == nf(kExampleXt, 4));
  CHECK(check_certificate(x, *c));
}

TEST_CASE("sigma1 powers give no certificate") {
  const auto x = nf("1 1 1 1 1", 3);
  const auto c = fast_rigid_conjugate(x);
  REQUIRE(c);
  CHECK(c->uniqueness == Uniqueness::RigidNoCert);
  CHECK(check_certificate(x, *c));
}

TEST_CASE("short inputs are unknown") {
  const auto x = nf("1 2 2 1 1", 3);
  REQUIRE(x.canonical_length() < 5);
  CHECK_FALSE(fast_rigid_conjugate(x));
  CHECK(solve_conjugacy(x, x).kind == ConjugacyAnswer::Kind::Unknown);
  // The ceiling scheme has no middle piece at length 6.
  Rng rng(1);
  const Census census(4, 6);
  CHECK_FALSE(fast_rigid_conjugate(census.sample_sphere(0, 6, rng),
                                   default_witness_patterns(4),
                                   PieceScheme::PaperCeiling));
}

TEST_CASE("constructed witness inputs are certified") {
  const int n = 4;
  const Census census(n, 40);
  Rng rng(2024);
  const auto w = witness_pattern(n, 2, 1);
  int certified = 0, attempts = 0;
  for (int eps : {0, 1}) {
    for (int t = 0; t < 40; ++t) {
      const int l = 20 + t % 15;
      const auto x = construct::with_witness(census, rng, eps, l, l / 2, w);
      const auto c = fast_rigid_conjugate(x, strict_witness_patterns(n));
      if (!c) continue;  // steps 2-3 failed
      ++attempts;
      REQUIRE(c->uniqueness == Uniqueness::Certified);
      REQUIRE(check_certificate(x, *c));
      REQUIRE(initial_factor(c->rigid).is_atom());
      REQUIRE(final_factor(c->rigid).complement().is_atom());
      const auto orbit = rigid_orbit(c->rigid);
      REQUIRE(static_cast<int>(orbit.size()) <= 2 * c->rigid.canonical_length());
      if (static_cast<int>(orbit.size()) == 2 * c->rigid.canonical_length()) ++certified;
    }
  }
  CHECK(attempts > 20);
  CHECK(certified == attempts);
}

TEST_CASE("certificates always verify") {
  const int n = 4;
  for (int eps : {-1, 0, 1}) {
    for (const auto& x : sample_sphere(SampleConfig{n, 25, eps, 200, 55})) {
      const auto c = fast_rigid_conjugate(x);
      if (!c) continue;
      REQUIRE(check_certificate(x, *c));
      REQUIRE(c->uniqueness == (c->witness_position ? Uniqueness::Certified
                                                    : Uniqueness::RigidNoCert));
    }
  }
}

TEST_CASE("verify_conjugator") {
  Rng rng(8);
  const Census census(4, 10);
  const auto x = census.sample_sphere(0, 10, rng);
  CHECK(verify_conjugator(x, x, NormalForm::identity(4)));
  CHECK(verify_conjugator(x, tau_conjugate(x), NormalForm::delta_power(4, 1)));
  CHECK(verify_conjugator(nf(kExampleX, 4), nf(kExampleXt, 4), nf("3 2 1 3 1 3 2 1", 4)));
  CHECK_FALSE(verify_conjugator(nf(kExampleX, 4), nf(kExampleX, 4), nf("1", 4)));
  CHECK_THROWS_AS(verify_conjugator(x, x, NormalForm::identity(3)), InvalidParameter);
}

TEST_CASE("conjugate pairs are recognized with working conjugators") {
  const int n = 4;
  const Census census(n, 30);
  Rng rng(99);
  int solved = 0;
  for (int t = 0; t < 40; ++t) {
    const auto x1 = construct::certified_sample(census, rng, t % 2, 30,
                                                default_witness_patterns(n));
    const auto c = construct::random_conjugator(census, rng, 10);
    const auto x2 = conjugate(x1.braid, c);
    const auto a = solve_conjugacy(x1.braid, x2);
    REQUIRE(a.kind != ConjugacyAnswer::Kind::NotConjugate);
    if (a.kind != ConjugacyAnswer::Kind::Conjugate) continue;
    ++solved;
    REQUIRE(verify_conjugator(x1.braid, x2, *a.conjugator));
    const auto b = solve_conjugacy(x2, x1.braid);
    REQUIRE(b.kind == ConjugacyAnswer::Kind::Conjugate);
    REQUIRE(verify_conjugator(x2, x1.braid, *b.conjugator));
  }
  CHECK(solved > 20);
}

TEST_CASE("one certified side suffices") {
  const int n = 4;
  const Census census(n, 41);
  Rng rng(314);
  const auto patterns = default_witness_patterns(n);
  int one_sided = 0;
  for (int t = 0; t < 3000 && one_sided < 5; ++t) {
    const auto x = construct::certified_sample(census, rng, 0, 40, patterns).braid;
    const auto y = conjugate(x, construct::random_conjugator(census, rng, 10));
    const auto cy = fast_rigid_conjugate(y, patterns);
    if (!cy || cy->uniqueness != Uniqueness::RigidNoCert) continue;
    ++one_sided;
    for (const auto& [a, b] : {std::pair{x, y}, std::pair{y, x}}) {
      const auto ans = solve_conjugacy(a, b);
      REQUIRE(ans.kind == ConjugacyAnswer::Kind::Conjugate);
      REQUIRE(verify_conjugator(a, b, *ans.conjugator));
    }
  }
  CHECK(one_sided == 5);
  // Neither side certified.
  const auto ex = nf(kExampleX, 4);
  CHECK(solve_conjugacy(ex, nf(kExampleXt, 4)).kind == ConjugacyAnswer::Kind::Unknown);
}

TEST_CASE("different inf or sup never conjugate") {
  const int n = 4;
  const Census census(n, 31);
  Rng rng(5);
  int decided = 0;
  for (int t = 0; t < 60; ++t) {
    const auto x1 = construct::certified_sample(census, rng, 0, 30,
                                                default_witness_patterns(n)).braid;
    const auto x2 = t % 2 == 0
                        ? construct::certified_sample(census, rng, 1, 30,
                                                      default_witness_patterns(n)).braid
                        : construct::certified_sample(census, rng, 0, 31,
                                                      default_witness_patterns(n)).braid;
    const auto a = solve_conjugacy(x1, x2);
    REQUIRE(a.kind != ConjugacyAnswer::Kind::Conjugate);
    decided += a.kind == ConjugacyAnswer::Kind::NotConjugate;
  }
  CHECK(decided == 60);
}

TEST_CASE("mismatched strand counts") {
  CHECK_THROWS_AS(solve_conjugacy(nf("1", 3), nf("1", 4)), InvalidParameter);
}
