#pragma once

// Exact counting and uniform sampling of normal forms.
//
// Normal forms of inf 0 and canonical length l are exactly the walks of
// length l in the left-weighting graph on proper simple braids, so path
// counts give |B_n^{0,l}| and drive an exactly uniform sampler. The
// radius-l ball is the disjoint union of Delta^i B_n^{0,k} over
// 0 <= k <= l, -l <= i <= l - k.

#include <cstdint>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "garside/normal_form.hpp"

namespace garside {

using BigInt = boost::multiprecision::cpp_int;
using Rng = std::mt19937_64;

// Independent, reproducible stream for (seed, stream index).
Rng stream_rng(std::uint64_t seed, std::uint64_t stream);
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);
BigInt uniform_below(Rng& rng, const BigInt& bound);

class TransitionGraph {
 public:
  explicit TransitionGraph(int n);

  int strand_count() const { return n_; }
  const std::vector<SimpleBraid>& nodes() const { return nodes_; }
  // successors()[a] lists b with (nodes[a], nodes[b]) left-weighted.
  const std::vector<std::vector<int>>& successors() const { return succ_; }

 private:
  int n_;
  std::vector<SimpleBraid> nodes_;
  std::vector<std::vector<int>> succ_;
};

// Immutable count tables up to a maximal length; safe to share between
// threads once built.
class Census {
 public:
  Census(int n, int max_length);

  int strand_count() const { return graph_.strand_count(); }
  int max_length() const { return max_length_; }
  const TransitionGraph& graph() const { return graph_; }

  // Number of normal forms of length m starting with node a (m >= 1).
  const BigInt& paths(int m, int a) const { return paths_[m][a]; }
  // |B_n^{eps,l}|, independent of eps.
  const BigInt& sphere(int l) const;
  // Size of the radius-l ball.
  BigInt ball(int l) const;

  // Uniform element of B_n^{eps,l}.
  NormalForm sample_sphere(int eps, int l, Rng& rng) const;
  // Uniform element of the radius-l ball.
  NormalForm sample_ball(int l, Rng& rng) const;

 private:
  void check_length(int l) const;

  TransitionGraph graph_;
  int max_length_;
  std::vector<std::vector<BigInt>> paths_;
  std::vector<BigInt> sphere_;
};

BigInt count_sphere(int n, int l);
BigInt count_ball(int n, int l);

struct GrowthEstimate {
  // count_sphere(l_max) / count_sphere(l_max - 1)
  double ratio = 0.0;
  // Ratios for l = max(1, l_max - 4) .. l_max, oldest first.
  std::vector<double> recent;
};

// Throws InvalidParameter for n = 2 (no proper simple braids).
GrowthEstimate growth_rate(int n, int l_max);

struct SampleConfig {
  int n = 4;
  int length = 10;
  int eps = 0;
  int sample_count = 1;
  std::uint64_t seed = 0;
};

// sample_count independent draws; draw i uses stream_rng(seed, i).
std::vector<NormalForm> sample_sphere(const SampleConfig& cfg);
std::vector<NormalForm> sample_ball(const SampleConfig& cfg);

}  // namespace garside
