#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/math/distributions/chi_squared.hpp>

#include "enumerate.hpp"
#include "garside/census.hpp"
#include "garside/text.hpp"

using namespace garside;

namespace {

// Upper-tail p-value of Pearson's statistic against equal expected counts.
double chi2_uniform_p(const std::map<std::string, int>& counts, int categories, int draws) {
  const double expected = static_cast<double>(draws) / categories;
  double stat = 0.0;
  int seen = 0;
  for (const auto& [key, c] : counts) {
    stat += (c - expected) * (c - expected) / expected;
    ++seen;
  }
  stat += (categories - seen) * expected;  // categories never drawn
  boost::math::chi_squared dist(categories - 1);
  return boost::math::cdf(boost::math::complement(dist, stat));
}

std::string key(const NormalForm& x) { return render(x); }

}  // namespace

TEST_CASE("small counts") {
  CHECK(count_sphere(3, 0) == 1);
  CHECK(count_sphere(3, 1) == 4);
  CHECK(count_sphere(3, 2) == 8);
  CHECK(count_sphere(3, 3) == 16);
  CHECK(count_sphere(4, 1) == 22);
  CHECK(count_ball(3, 0) == 1);
  CHECK(count_ball(4, 0) == 1);
  CHECK(count_ball(3, 1) == 11);
  CHECK(count_ball(3, 2) == 45);
  for (int l = 1; l <= 12; ++l) {
    CHECK(count_sphere(3, l) == BigInt(4) << (l - 1));
  }
  CHECK_THROWS_AS(count_sphere(3, -1), InvalidParameter);
}

TEST_CASE("transition graph edges are left-weighted pairs") {
  for (int n = 3; n <= 4; ++n) {
    const TransitionGraph g(n);
    REQUIRE(g.nodes().size() == (n == 3 ? 4u : 22u));
    for (std::size_t a = 0; a < g.nodes().size(); ++a) {
      std::vector<int> expected;
      for (std::size_t b = 0; b < g.nodes().size(); ++b) {
        if (is_left_weighted(g.nodes()[a], g.nodes()[b])) expected.push_back(static_cast<int>(b));
      }
      REQUIRE(g.successors()[a] == expected);
    }
  }
}

TEST_CASE("counts match brute-force enumeration") {
  for (int l = 0; l <= 4; ++l) {
    CHECK(count_sphere(3, l) == enumerate::sphere_size(3, l));
  }
  for (int l = 0; l <= 3; ++l) {
    CHECK(count_sphere(4, l) == enumerate::sphere_size(4, l));
  }
  for (int l = 0; l <= 3; ++l) CHECK(count_ball(3, l) == enumerate::ball(3, l).size());
  for (int l = 0; l <= 2; ++l) CHECK(count_ball(4, l) == enumerate::ball(4, l).size());
}

TEST_CASE("every Delta-shift of a sphere has the same size") {
  const auto h = enumerate::strata(enumerate::ball(3, 3));
  for (int k = 0; k <= 3; ++k) {
    for (int i = -2; i <= 2; ++i) {
      if (i + k > 3) continue;
      CHECK(h.at({i, k}) == count_sphere(3, k));
    }
  }
}

TEST_CASE("growth rate") {
  for (int l = 2; l <= 10; ++l) CHECK(growth_rate(3, l).ratio == doctest::Approx(2.0).epsilon(1e-12));
  CHECK_THROWS_AS(growth_rate(2, 5), InvalidParameter);
  const auto g = growth_rate(4, 14);
  CHECK(g.ratio > 2.0);
  CHECK(g.ratio < 22.0);
  CHECK(g.recent.size() == 5);
  for (std::size_t i = 1; i < g.recent.size(); ++i) CHECK(g.recent[i] <= g.recent[i - 1]);
}

TEST_CASE("uniform_below") {
  Rng rng(3);
  CHECK(uniform_below(rng, std::uint64_t{1}) == 0);
  CHECK_THROWS_AS(uniform_below(rng, std::uint64_t{0}), InvalidParameter);
  std::map<std::string, int> h;
  for (int i = 0; i < 6000; ++i) ++h[std::to_string(uniform_below(rng, std::uint64_t{6}))];
  CHECK(chi2_uniform_p(h, 6, 6000) > 0.001);

  const BigInt big = (BigInt(1) << 130) + 7;
  for (int i = 0; i < 200; ++i) {
    const BigInt v = uniform_below(rng, big);
    REQUIRE(v >= 0);
    REQUIRE(v < big);
  }
  std::map<std::string, int> hb;
  for (int i = 0; i < 5000; ++i) {
    const BigInt v = uniform_below(rng, BigInt(5));
    ++hb[v.str()];
  }
  CHECK(chi2_uniform_p(hb, 5, 5000) > 0.001);
}

TEST_CASE("sphere sampling is uniform") {
  for (auto [l, size] : {std::pair{1, 4}, std::pair{2, 8}}) {
    const int draws = 10000;
    const auto xs = sample_sphere(SampleConfig{3, l, 0, draws, 42});
    std::map<std::string, int> h;
    for (const auto& x : xs) {
      REQUIRE(x.inf() == 0);
      REQUIRE(x.canonical_length() == l);
      REQUIRE(x.well_formed());
      ++h[key(x)];
    }
    CHECK(static_cast<int>(h.size()) == size);
    CHECK(chi2_uniform_p(h, size, draws) > 0.001);
  }
  // Delta^eps prefix and the l = 0 case.
  Rng rng(4);
  const Census c(4, 6);
  CHECK(c.sample_sphere(3, 6, rng).inf() == 3);
  CHECK(c.sample_sphere(-2, 0, rng) == NormalForm::delta_power(4, -2));
}

TEST_CASE("ball sampling is uniform") {
  const int draws = 10000;
  const auto xs = sample_ball(SampleConfig{3, 1, 0, draws, 7});
  std::map<std::string, int> h;
  for (const auto& x : xs) {
    REQUIRE(x.inf() >= -1);
    REQUIRE(x.sup() <= 1);
    REQUIRE(x.canonical_length() <= 1);
    ++h[key(x)];
  }
  CHECK(h.size() == 11);
  CHECK(chi2_uniform_p(h, 11, draws) > 0.001);
  CHECK(sample_ball(SampleConfig{4, 0, 0, 5, 1}).front().is_identity());
}

TEST_CASE("ball strata follow the weights") {
  const int n = 4, l = 3, draws = 20000;
  const Census c(n, l);
  const auto xs = sample_ball(SampleConfig{n, l, 0, draws, 11});
  std::map<int, int> by_k;
  for (const auto& x : xs) {
    REQUIRE(x.inf() >= -l);
    REQUIRE(x.sup() <= l);
    REQUIRE(x.canonical_length() <= l);
    ++by_k[x.canonical_length()];
  }
  const double total = c.ball(l).convert_to<double>();
  for (int k = 0; k <= l; ++k) {
    const double p = (2 * l - k + 1) * c.sphere(k).convert_to<double>() / total;
    const double sd = std::sqrt(p * (1 - p) / draws);
    CHECK(std::abs(by_k[k] / double(draws) - p) < 4.5 * sd + 1e-9);
  }
}

TEST_CASE("sampling is reproducible") {
  const SampleConfig cfg{4, 12, 1, 50, 1234};
  CHECK(sample_sphere(cfg) == sample_sphere(cfg));
  CHECK(sample_ball(cfg) == sample_ball(cfg));
  SampleConfig other = cfg;
  other.seed = 1235;
  CHECK_FALSE(sample_sphere(cfg) == sample_sphere(other));
  CHECK_THROWS_AS(sample_sphere(SampleConfig{4, 3, 0, 0, 1}), InvalidParameter);
}

TEST_CASE("census table bounds") {
  const Census c(4, 5);
  Rng rng(1);
  CHECK_THROWS_AS(c.sample_sphere(0, 6, rng), InvalidParameter);
  CHECK_THROWS_AS(c.sphere(-1), InvalidParameter);
  CHECK_THROWS_AS(Census(4, -1), InvalidParameter);
}
