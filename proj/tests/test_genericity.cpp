#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "garside/census.hpp"
#include "garside/genericity.hpp"
#include "garside/text.hpp"

using namespace garside;

namespace {

NormalForm nf(const std::string& word, int n) { return normalize(parse_word(word, n)); }
SimpleBraid sb(int n, std::vector<int> word) { return SimpleBraid::from_word(n, word); }

const char* kExampleX = "2 3 2 1 1 3 2 1 1 2 1 3 2 3 2 1 3 1 3 2 1";
const char* kExampleXt = "3 2 1 3 1 3 2 1 2 3 2 1 1 3 2 1 1 2 1 3 2";

std::vector<int> sizes(const PieceDecomposition& d) {
  return {d.p1.canonical_length(), d.p2.canonical_length(), d.p3.canonical_length(),
          d.p4_raw.canonical_length(), d.p5_raw.canonical_length()};
}

NormalForm sigma1_power(int eps, int k) {
  std::string w;
  for (int i = 0; i < std::abs(eps); ++i) w += eps > 0 ? " D" : " D-";
  for (int i = 0; i < k; ++i) w += " 1";
  return nf(w, 3);
}

std::vector<NormalForm> sphere_samples(int n, int eps, int l, int count,
                                       std::uint64_t seed) {
  return sample_sphere(SampleConfig{n, l, eps, count, seed});
}

}  // namespace

TEST_CASE("piece sizes") {
  std::mt19937_64 rng(1);
  const Census census(4, 12);
  auto sample = [&](int l) { return census.sample_sphere(0, l, rng); };
  for (auto s : {PieceScheme::FloorBalanced, PieceScheme::PaperCeiling}) {
    CHECK(sizes(decompose(sample(5), s)) == std::vector<int>{1, 1, 1, 1, 1});
  }
  CHECK(sizes(decompose(sample(10), PieceScheme::PaperCeiling)) ==
        std::vector<int>{2, 2, 2, 2, 2});
  CHECK(sizes(decompose(sample(7), PieceScheme::FloorBalanced)) ==
        std::vector<int>{1, 1, 3, 1, 1});
  CHECK_THROWS_AS(decompose(sample(6), PieceScheme::PaperCeiling), SchemeDegenerate);
  CHECK_THROWS_AS(middle_fifth(sample(6), PieceScheme::PaperCeiling), SchemeDegenerate);
  CHECK_THROWS_AS(decompose(sample(4)), TooShort);

  for (int l = 5; l <= 12; ++l) {
    const auto x = sample(l);
    const auto d = decompose(x);
    CHECK(d.p3.canonical_length() >= 1);
    // Delta^eps P1 P2 P3 P4 P5 is the factor sequence of x.
    std::vector<SimpleBraid> all;
    for (const auto* p : {&d.p1, &d.p2, &d.p3, &d.p4_raw, &d.p5_raw}) {
      all.insert(all.end(), p->factors().begin(), p->factors().end());
    }
    CHECK(all == x.factors());
    CHECK(middle_fifth(x, PieceScheme::FloorBalanced) == d.p3);
  }
  const auto x10 = sample(10);
  CHECK(middle_fifth(x10, PieceScheme::PaperCeiling) == x10.slice(4, 2));
}

TEST_CASE("worked example") {
  const auto x = nf(kExampleX, 4);
  const auto xt = nf(kExampleXt, 4);
  REQUIRE(x.canonical_length() == 5);
  CHECK(middle_fifth(x) == NormalForm::from_simple(sb(4, {1, 2, 1, 3, 2})));
  CHECK(is_nonintrusive(x, xt));
  CHECK(is_nonintrusive(x, x));
  CHECK_FALSE(is_nonintrusive(x, NormalForm::identity(4)));

  const auto r = observation_test(x);
  REQUIRE(r);
  CHECK(r->rigid == xt);
  CHECK(r->conjugator == nf("3 2 1 3 1 3 2 1", 4));
  CHECK(check_rigid_conjugate(x, *r));
  CHECK(symmetric_criterion(x));
}

TEST_CASE("powers of sigma1 in B3") {
  for (int eps : {-1, 0, 1, 2}) {
    const auto x = sigma1_power(eps, 5);
    const auto r = observation_test(x);
    REQUIRE(r);
    CHECK(is_rigid(r->rigid));
    CHECK(check_rigid_conjugate(x, *r));
    CHECK(symmetric_criterion(x));
    CHECK(x.inf() == eps);
    if (eps % 2 == 0) CHECK_FALSE(prefix_of_complement(x));
  }
  CHECK_THROWS_AS(prefix_of_complement(sigma1_power(0, 4)), TooShort);
}

TEST_CASE("rigid inputs rotate") {
  int found = 0;
  for (const auto& x : sphere_samples(3, 1, 7, 400, 5)) {
    if (!is_rigid(x)) continue;
    ++found;
    const auto r = observation_test(x);
    REQUIRE(r);
    const auto d = decompose(x);
    std::vector<SimpleBraid> expected;
    for (const auto& p : {d.p4(), d.p5(), d.p1, d.p2, d.p3}) {
      expected.insert(expected.end(), p.factors().begin(), p.factors().end());
    }
    REQUIRE(r->rigid.factors() == expected);
    REQUIRE(r->rigid.inf() == x.inf());
  }
  CHECK(found > 10);
}

TEST_CASE("observation test guarantees and the symmetric criterion") {
  int successes = 0, symmetric = 0;
  for (int eps : {0, 1}) {
    for (int l : {5, 8, 13}) {
      for (const auto& x : sphere_samples(4, eps, l, 300, 100 + l)) {
        const auto r = observation_test(x);
        if (r) {
          ++successes;
          REQUIRE(check_rigid_conjugate(x, *r));
          // Independent restatement of the three guarantees.
          REQUIRE(is_rigid(r->rigid));
          REQUIRE(multiply(r->conjugator, x) == multiply(r->rigid, r->conjugator));
          REQUIRE(contains_factor_subword(r->rigid, middle_fifth(x)));
        }
        if (symmetric_criterion(x)) {
          ++symmetric;
          REQUIRE(r.has_value());
        }
      }
    }
  }
  CHECK(successes > 0);
  CHECK(symmetric > 0);
}

TEST_CASE("paper scheme agrees where both are defined") {
  for (const auto& x : sphere_samples(4, 0, 5, 200, 9)) {
    CHECK(observation_test(x, PieceScheme::PaperCeiling).has_value() ==
          observation_test(x, PieceScheme::FloorBalanced).has_value());
  }
}

TEST_CASE("prefix of complement") {
  int hits = 0;
  for (int eps : {0, 1}) {
    for (const auto& x : sphere_samples(3, eps, 5, 600, 77)) {
      const auto d = decompose(x);
      const bool oracle = multiply(inverse(d.p1), complement(d.p5())).inf() >= 0;
      REQUIRE(prefix_of_complement(x) == oracle);
      hits += oracle;
    }
  }
  CHECK(hits > 0);

  // Built directly: P1 := d(P5) whenever that keeps the form normal.
  int built = 0;
  for (const auto& x : sphere_samples(4, 0, 5, 400, 3)) {
    const auto f = x.factors();
    const SimpleBraid p1 = f[4].complement();
    if (p1.is_identity() || p1.is_delta() || !is_left_weighted(p1, f[1])) continue;
    const auto y = NormalForm::from_factors(4, 0, {p1, f[1], f[2], f[3], f[4]});
    REQUIRE(prefix_of_complement(y));
    ++built;
  }
  CHECK(built > 0);
}

TEST_CASE("blocking braids") {
  CHECK(to_string(blocking_braid_word(6)) ==
        "1 2 3 4 1 2 3 1 2 1 5 1 2 3 1 2 1 5 4 1 2 1 4 3 1 3 2 2");
  const auto b4 = blocking_braid(4);
  CHECK(b4.factors() == std::vector<SimpleBraid>{sb(4, {1, 2, 1, 3}), sb(4, {1, 3, 2}),
                                                 sb(4, {2})});
  const auto b6 = blocking_braid(6);
  CHECK(b6.factors() ==
        std::vector<SimpleBraid>{sb(6, {1, 2, 3, 4, 1, 2, 3, 1, 2, 1, 5}),
                                 sb(6, {1, 2, 3, 1, 2, 1, 5, 4}), sb(6, {1, 2, 1, 4, 3}),
                                 sb(6, {1, 3, 2}), sb(6, {2})});
  for (int n : {4, 5, 6}) {
    const auto b = blocking_braid(n);
    CHECK(b.inf() == 0);
    CHECK(b.canonical_length() == n - 1);
    CHECK(normalize(blocking_braid_word(n)) == b);
    GeneratorSet expected;
    for (int i = 1; i <= n - 2; ++i) expected.insert(i);
    CHECK(initial_factor(b).starting_set() == expected);
    CHECK(final_factor(b).finishing_set().to_vector() == std::vector<int>{2});
    CHECK(is_in_right_normal_form(b));
    const auto rep = verify_blocking(b, 2);
    CHECK(rep.blocking);
    CHECK(rep.generator == 2);
  }
  CHECK_THROWS_AS(blocking_braid(3), InvalidParameter);
}

TEST_CASE("sigma1 as a blocking candidate") {
  // Fails in B_4 once one-factor prefixes are allowed.
  const auto s4 = NormalForm::from_simple(SimpleBraid::atom(4, 1));
  CHECK_FALSE(verify_blocking(s4, 1).blocking);
  CHECK_FALSE(verify_blocking(s4, 2).blocking);
  // In B_3 every admissible prefix ends in sigma1 without absorbing sigma2.
  const auto s3 = NormalForm::from_simple(SimpleBraid::atom(3, 1));
  CHECK(verify_blocking(s3, 3).blocking);
  CHECK_FALSE(verify_blocking(NormalForm::identity(4), 2).blocking);
}

TEST_CASE("blocking search utility") {
  const auto found = search_blocking_braid(3, 2, 2);
  REQUIRE(found);
  CHECK(verify_blocking(*found, 2).blocking);
}
