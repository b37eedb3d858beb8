#pragma once

// Monte Carlo runner for the genericity statistics.
//
// Every sample i of length l draws from its own stream
// stream_rng(seed ^ mix(l), i), so results do not depend on how samples are
// spread across threads. run_experiment_serial is the reference;
// run_experiment fans the same kernel out with OpenMP and must agree with
// it exactly on every count.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "garside/census.hpp"
#include "garside/conjugacy.hpp"

namespace garside {

enum class ExperimentKind {
  RigidProportion,
  BlockingSubword,
  PrefixRare,
  ConjugacySuccess,
  ConjugacyBench,
  PaProportion,
};

std::string to_string(ExperimentKind k);
std::optional<ExperimentKind> parse_kind(const std::string& s);
// Whether samples come from the ball (true) or the sphere B^{eps,l}.
bool samples_ball(ExperimentKind k);
// Human-readable name of the statistic a kind measures.
std::string statistic_name(ExperimentKind k, bool has_witnesses);

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::RigidProportion;
  int n = 4;
  std::vector<int> lengths;
  int eps = 0;
  int samples = 1000;
  std::uint64_t seed = 0;
  PieceScheme scheme = PieceScheme::FloorBalanced;
  bool strict_paper = false;
  // pa-proportion: words every middle fifth must contain (inf 0).
  std::vector<NormalForm> witnesses;
  // Fill elapsed_ms; otherwise it is written as 0 so data files are
  // reproducible byte for byte.
  bool timing = false;
};

// Throws InvalidParameter on an unusable configuration.
void validate(const ExperimentConfig& cfg);

struct ExperimentRow {
  int n = 0;
  int l = 0;
  int samples = 0;
  int successes = 0;
  double proportion = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  std::uint64_t seed = 0;
  double elapsed_ms = 0.0;
};

struct Interval {
  double low;
  double high;
};

inline constexpr double kZ95 = 1.959963984540054;
inline constexpr double kZ99 = 2.5758293035489004;

Interval wilson_interval(int successes, int samples, double z = kZ95);

// Shared state for one length: census tables plus cached constants.
class ExperimentContext {
 public:
  ExperimentContext(const ExperimentConfig& cfg, int l);

  const ExperimentConfig& config() const { return cfg_; }
  int length() const { return l_; }

  NormalForm draw(std::uint64_t index) const;
  // Evaluates the statistic on one braid. Certificates are re-verified
  // here and a failed verification throws std::logic_error.
  bool evaluate(const NormalForm& x, double* kernel_seconds) const;

 private:
  const ExperimentConfig& cfg_;
  int l_;
  Census census_;
  std::optional<NormalForm> blocking_;
  std::vector<WitnessPattern> patterns_;
};

std::vector<ExperimentRow> run_experiment_serial(const ExperimentConfig& cfg);
std::vector<ExperimentRow> run_experiment(const ExperimentConfig& cfg);

struct DecayFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};

// Least squares fit of log(1 - proportion) against l over rows with
// proportion < 1. Throws InvalidParameter when fewer than two rows qualify.
DecayFit fit_decay(const std::vector<ExperimentRow>& rows);

// Consecutive rows never move against `increasing` by more than the
// two-sided Wilson intervals at level z allow.
bool monotone_within_ci(const std::vector<ExperimentRow>& rows, bool increasing,
                        double z = kZ99);

inline constexpr const char* kCsvHeader =
    "n,l,samples,successes,proportion,ci_low,ci_high,seed,elapsed_ms";

std::string to_csv(const std::vector<ExperimentRow>& rows);
std::string to_json(const ExperimentConfig& cfg,
                    const std::vector<ExperimentRow>& rows);

}  // namespace garside
