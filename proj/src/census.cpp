#include "garside/census.hpp"

#include <bit>

namespace garside {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

Rng stream_rng(std::uint64_t seed, std::uint64_t stream) {
  return Rng(splitmix64(splitmix64(seed) ^ splitmix64(~stream)));
}

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound == 0) throw InvalidParameter("uniform_below needs a positive bound");
  const int width = std::bit_width(bound - 1);
  const std::uint64_t mask = width == 64 ? ~0ull : (1ull << width) - 1;
  for (;;) {
    const std::uint64_t v = rng() & mask;
    if (v < bound) return v;
  }
}

BigInt uniform_below(Rng& rng, const BigInt& bound) {
  if (bound <= 0) throw InvalidParameter("uniform_below needs a positive bound");
  const auto bits = boost::multiprecision::msb(bound) + 1;
  const auto words = (bits + 63) / 64;
  const unsigned top_bits = static_cast<unsigned>(bits - (words - 1) * 64);
  const std::uint64_t top_mask =
      top_bits == 64 ? ~0ull : ((1ull << top_bits) - 1);
  for (;;) {
    BigInt v = rng() & top_mask;
    for (std::size_t w = 1; w < words; ++w) {
      v <<= 64;
      v |= rng();
    }
    if (v < bound) return v;
  }
}

TransitionGraph::TransitionGraph(int n)
    : n_(n), nodes_(proper_simple_braids(n)), succ_(nodes_.size()) {
  for (std::size_t a = 0; a < nodes_.size(); ++a) {
    const GeneratorSet fa = nodes_[a].finishing_set();
    for (std::size_t b = 0; b < nodes_.size(); ++b) {
      if (nodes_[b].starting_set().subset_of(fa)) {
        succ_[a].push_back(static_cast<int>(b));
      }
    }
  }
}

Census::Census(int n, int max_length) : graph_(n), max_length_(max_length) {
  if (max_length < 0) throw InvalidParameter("negative maximal length");
  const std::size_t v = graph_.nodes().size();
  paths_.assign(static_cast<std::size_t>(max_length) + 1,
                std::vector<BigInt>(v, BigInt(0)));
  sphere_.assign(static_cast<std::size_t>(max_length) + 1, BigInt(0));
  sphere_[0] = 1;
  if (max_length == 0) return;
  for (std::size_t a = 0; a < v; ++a) paths_[1][a] = 1;
  for (int m = 2; m <= max_length; ++m) {
    for (std::size_t a = 0; a < v; ++a) {
      BigInt total = 0;
      for (int b : graph_.successors()[a]) total += paths_[m - 1][b];
      paths_[m][a] = std::move(total);
    }
  }
  for (int m = 1; m <= max_length; ++m) {
    BigInt total = 0;
    for (std::size_t a = 0; a < v; ++a) total += paths_[m][a];
    sphere_[m] = std::move(total);
  }
}

void Census::check_length(int l) const {
  if (l < 0 || l > max_length_) {
    throw InvalidParameter("length " + std::to_string(l) +
                           " outside the census table [0, " +
                           std::to_string(max_length_) + "]");
  }
}

const BigInt& Census::sphere(int l) const {
  check_length(l);
  return sphere_[l];
}

BigInt Census::ball(int l) const {
  check_length(l);
  BigInt total = 0;
  for (int k = 0; k <= l; ++k) total += BigInt(2 * l - k + 1) * sphere_[k];
  return total;
}

NormalForm Census::sample_sphere(int eps, int l, Rng& rng) const {
  check_length(l);
  const int n = strand_count();
  if (l == 0) return NormalForm::delta_power(n, eps);
  if (sphere_[l] == 0) {
    throw InvalidParameter("B_n^{eps,l} is empty for these parameters");
  }
  const auto& nodes = graph_.nodes();
  std::vector<SimpleBraid> factors;
  factors.reserve(static_cast<std::size_t>(l));

  BigInt r = uniform_below(rng, sphere_[l]);
  int current = 0;
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    if (r < paths_[l][a]) {
      current = static_cast<int>(a);
      break;
    }
    r -= paths_[l][a];
  }
  factors.push_back(nodes[current]);
  for (int remaining = l - 1; remaining >= 1; --remaining) {
    BigInt s = uniform_below(rng, paths_[remaining + 1][current]);
    for (int b : graph_.successors()[current]) {
      if (s < paths_[remaining][b]) {
        current = b;
        break;
      }
      s -= paths_[remaining][b];
    }
    factors.push_back(nodes[current]);
  }
  return NormalForm::from_factors(n, eps, std::move(factors));
}

NormalForm Census::sample_ball(int l, Rng& rng) const {
  check_length(l);
  BigInt r = uniform_below(rng, ball(l));
  for (int k = 0; k <= l; ++k) {
    const BigInt weight = BigInt(2 * l - k + 1) * sphere_[k];
    if (r < weight) {
      const auto slots = static_cast<std::uint64_t>(2 * l - k + 1);
      const int i = -l + static_cast<int>(uniform_below(rng, slots));
      return sample_sphere(i, k, rng);
    }
    r -= weight;
  }
  throw std::logic_error("ball stratum selection fell through");
}

BigInt count_sphere(int n, int l) {
  if (l < 0) throw InvalidParameter("negative length");
  return Census(n, l).sphere(l);
}

BigInt count_ball(int n, int l) {
  if (l < 0) throw InvalidParameter("negative radius");
  return Census(n, l).ball(l);
}

GrowthEstimate growth_rate(int n, int l_max) {
  if (n < 3) {
    throw InvalidParameter("growth rate undefined: B_2 has no proper simple braids");
  }
  if (l_max < 1) throw InvalidParameter("growth rate needs l_max >= 1");
  const Census c(n, l_max);
  GrowthEstimate g;
  for (int l = std::max(1, l_max - 4); l <= l_max; ++l) {
    // Ratios of large integers: divide in exact arithmetic first.
    const BigInt& num = c.sphere(l);
    const BigInt& den = c.sphere(l - 1);
    const BigInt scale = BigInt(1) << 40;
    const BigInt q = (num * scale) / den;
    g.recent.push_back(q.convert_to<double>() / scale.convert_to<double>());
  }
  g.ratio = g.recent.back();
  return g;
}

namespace {

template <class Draw>
std::vector<NormalForm> draw_many(const SampleConfig& cfg, Draw draw) {
  if (cfg.sample_count < 1) throw InvalidParameter("sample_count must be >= 1");
  if (cfg.length < 0) throw InvalidParameter("length must be >= 0");
  const Census census(cfg.n, cfg.length);
  std::vector<NormalForm> out;
  out.reserve(static_cast<std::size_t>(cfg.sample_count));
  for (int i = 0; i < cfg.sample_count; ++i) {
    Rng rng = stream_rng(cfg.seed, static_cast<std::uint64_t>(i));
    out.push_back(draw(census, rng));
  }
  return out;
}

}  // namespace

std::vector<NormalForm> sample_sphere(const SampleConfig& cfg) {
  return draw_many(cfg, [&](const Census& c, Rng& rng) {
    return c.sample_sphere(cfg.eps, cfg.length, rng);
  });
}

std::vector<NormalForm> sample_ball(const SampleConfig& cfg) {
  return draw_many(cfg, [&](const Census& c, Rng& rng) {
    return c.sample_ball(cfg.length, rng);
  });
}

}  // namespace garside
