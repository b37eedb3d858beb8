#include "garside/experiment.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <stdexcept>

#include <json.hpp>

namespace garside {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// The piece decomposition exists for this braid under the scheme.
bool decomposable(const NormalForm& x, PieceScheme scheme) {
  try {
    outer_piece_size(x.canonical_length(), scheme);
    return true;
  } catch (const TooShort&) {
    return false;
  } catch (const SchemeDegenerate&) {
    return false;
  }
}

ExperimentRow make_row(const ExperimentConfig& cfg, int l, int successes,
                       double elapsed_ms) {
  ExperimentRow row;
  row.n = cfg.n;
  row.l = l;
  row.samples = cfg.samples;
  row.successes = successes;
  row.proportion = static_cast<double>(successes) / cfg.samples;
  const Interval ci = wilson_interval(successes, cfg.samples);
  row.ci_low = std::min(ci.low, row.proportion);
  row.ci_high = std::max(ci.high, row.proportion);
  row.seed = cfg.seed;
  row.elapsed_ms = cfg.timing ? elapsed_ms : 0.0;
  return row;
}

}  // namespace

std::string to_string(ExperimentKind k) {
  switch (k) {
    case ExperimentKind::RigidProportion:
      return "rigid-proportion";
    case ExperimentKind::BlockingSubword:
      return "blocking-subword";
    case ExperimentKind::PrefixRare:
      return "prefix-rare";
    case ExperimentKind::ConjugacySuccess:
      return "conjugacy-success";
    case ExperimentKind::ConjugacyBench:
      return "conjugacy-bench";
    case ExperimentKind::PaProportion:
      return "pa-proportion";
  }
  return "?";
}

std::optional<ExperimentKind> parse_kind(const std::string& s) {
  for (auto k : {ExperimentKind::RigidProportion, ExperimentKind::BlockingSubword,
                 ExperimentKind::PrefixRare, ExperimentKind::ConjugacySuccess,
                 ExperimentKind::ConjugacyBench, ExperimentKind::PaProportion}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

bool samples_ball(ExperimentKind k) {
  return k == ExperimentKind::ConjugacySuccess ||
         k == ExperimentKind::PaProportion;
}

std::string statistic_name(ExperimentKind k, bool has_witnesses) {
  switch (k) {
    case ExperimentKind::RigidProportion:
      return "non-intrusively conjugate to a rigid braid";
    case ExperimentKind::BlockingSubword:
      return "P2 contains the blocking braid";
    case ExperimentKind::PrefixRare:
      return "P1 is a prefix of the complement of P5";
    case ExperimentKind::ConjugacySuccess:
      return "certified rigid conjugate";
    case ExperimentKind::ConjugacyBench:
      return "certified rigid conjugate (timed)";
    case ExperimentKind::PaProportion:
      return has_witnesses
                 ? "pseudo-Anosov (rigidified and witness words in P3)"
                 : "conjugate-to-rigid (no witness words supplied)";
  }
  return "?";
}

void validate(const ExperimentConfig& cfg) {
  if (cfg.n < 3 || cfg.n > kMaxStrands) {
    throw InvalidParameter("experiments need 3 <= n <= " +
                           std::to_string(kMaxStrands));
  }
  if (cfg.samples < 1) throw InvalidParameter("samples must be >= 1");
  if (cfg.lengths.empty()) throw InvalidParameter("length list is empty");
  if (!std::is_sorted(cfg.lengths.begin(), cfg.lengths.end()) ||
      std::adjacent_find(cfg.lengths.begin(), cfg.lengths.end()) !=
          cfg.lengths.end()) {
    throw InvalidParameter("length list must be strictly ascending");
  }
  if (cfg.kind == ExperimentKind::BlockingSubword && cfg.n < 4) {
    throw InvalidParameter("blocking-subword needs n >= 4");
  }
  for (int l : cfg.lengths) {
    if (l < 0) throw InvalidParameter("lengths must be nonnegative");
    if (!samples_ball(cfg.kind)) outer_piece_size(l, cfg.scheme);
  }
  for (const auto& w : cfg.witnesses) {
    if (w.strand_count() != cfg.n || w.inf() != 0) {
      throw InvalidParameter("witness words must be positive braids of inf 0 "
                             "on the same strands");
    }
  }
}

Interval wilson_interval(int successes, int samples, double z) {
  if (samples <= 0) throw InvalidParameter("wilson interval needs samples > 0");
  const double n = samples;
  const double p = successes / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half =
      z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

ExperimentContext::ExperimentContext(const ExperimentConfig& cfg, int l)
    : cfg_(cfg), l_(l), census_(cfg.n, l) {
  if (cfg.kind == ExperimentKind::BlockingSubword) {
    blocking_ = blocking_braid(cfg.n);
  }
  patterns_ = cfg.strict_paper ? strict_witness_patterns(cfg.n)
                               : default_witness_patterns(cfg.n);
}

NormalForm ExperimentContext::draw(std::uint64_t index) const {
  Rng rng = stream_rng(cfg_.seed,
                       (static_cast<std::uint64_t>(l_) << 32) | index);
  return samples_ball(cfg_.kind) ? census_.sample_ball(l_, rng)
                                 : census_.sample_sphere(cfg_.eps, l_, rng);
}

bool ExperimentContext::evaluate(const NormalForm& x,
                                 double* kernel_seconds) const {
  const PieceScheme scheme = cfg_.scheme;
  auto certified = [&](const NormalForm& b) {
    const auto cert = fast_rigid_conjugate(b, patterns_, scheme);
    if (cert && !check_certificate(b, *cert)) {
      throw std::logic_error("rigid conjugate certificate failed verification");
    }
    return cert && cert->uniqueness == Uniqueness::Certified;
  };
  auto rigidified = [&](const NormalForm& b) {
    const auto rc = observation_test(b, scheme);
    if (rc && !check_rigid_conjugate(b, *rc, scheme)) {
      throw std::logic_error("rigid conjugate failed verification");
    }
    return rc.has_value();
  };

  switch (cfg_.kind) {
    case ExperimentKind::RigidProportion:
      return cfg_.strict_paper ? certified(x) : rigidified(x);
    case ExperimentKind::BlockingSubword:
      return contains_factor_subword(decompose(x, scheme).p2, *blocking_);
    case ExperimentKind::PrefixRare:
      return prefix_of_complement(x, scheme);
    case ExperimentKind::ConjugacySuccess:
      return decomposable(x, scheme) && certified(x);
    case ExperimentKind::ConjugacyBench: {
      const auto start = Clock::now();
      const auto cert = fast_rigid_conjugate(x, patterns_, scheme);
      if (kernel_seconds) {
        *kernel_seconds =
            std::chrono::duration<double>(Clock::now() - start).count();
      }
      if (cert && !check_certificate(x, *cert)) {
        throw std::logic_error("rigid conjugate certificate failed verification");
      }
      return cert && cert->uniqueness == Uniqueness::Certified;
    }
    case ExperimentKind::PaProportion: {
      if (!decomposable(x, scheme) || !rigidified(x)) return false;
      const NormalForm mid = middle_fifth(x, scheme);
      return std::all_of(cfg_.witnesses.begin(), cfg_.witnesses.end(),
                         [&](const NormalForm& w) {
                           return contains_factor_subword(mid, w);
                         });
    }
  }
  return false;
}

std::vector<ExperimentRow> run_experiment_serial(const ExperimentConfig& cfg) {
  validate(cfg);
  std::vector<ExperimentRow> rows;
  for (int l : cfg.lengths) {
    const ExperimentContext ctx(cfg, l);
    const auto start = Clock::now();
    int successes = 0;
    double kernel = 0.0;
    for (int i = 0; i < cfg.samples; ++i) {
      double secs = 0.0;
      if (ctx.evaluate(ctx.draw(static_cast<std::uint64_t>(i)), &secs)) {
        ++successes;
      }
      kernel += secs;
    }
    const double elapsed = cfg.kind == ExperimentKind::ConjugacyBench
                               ? kernel * 1000.0
                               : ms_since(start);
    rows.push_back(make_row(cfg, l, successes, elapsed));
  }
  return rows;
}

std::vector<ExperimentRow> run_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  std::vector<ExperimentRow> rows;
  for (int l : cfg.lengths) {
    const ExperimentContext ctx(cfg, l);
    const auto start = Clock::now();
    int successes = 0;
    double kernel = 0.0;
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 8) reduction(+ : successes, kernel)
    for (int i = 0; i < cfg.samples; ++i) {
      try {
        double secs = 0.0;
        if (ctx.evaluate(ctx.draw(static_cast<std::uint64_t>(i)), &secs)) {
          ++successes;
        }
        kernel += secs;
      } catch (...) {
#pragma omp critical(garside_experiment_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
    const double elapsed = cfg.kind == ExperimentKind::ConjugacyBench
                               ? kernel * 1000.0
                               : ms_since(start);
    rows.push_back(make_row(cfg, l, successes, elapsed));
  }
  return rows;
}

DecayFit fit_decay(const std::vector<ExperimentRow>& rows) {
  std::vector<double> xs, ys;
  for (const auto& r : rows) {
    if (r.proportion < 1.0) {
      xs.push_back(r.l);
      ys.push_back(std::log(1.0 - r.proportion));
    }
  }
  if (xs.size() < 2) {
    throw InvalidParameter("decay fit undefined: fewer than two rows with "
                           "proportion < 1");
  }
  const double m = static_cast<double>(xs.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
  }
  const double mx = sx / m, my = sy / m;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  if (sxx == 0.0) throw InvalidParameter("decay fit undefined: all l equal");
  DecayFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double e = ys[i] - (fit.intercept + fit.slope * xs[i]);
    ss_res += e * e;
  }
  fit.r2 = syy == 0.0 ? 1.0 : 1.0 - ss_res / syy;
  return fit;
}

bool monotone_within_ci(const std::vector<ExperimentRow>& rows, bool increasing,
                        double z) {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const Interval prev = wilson_interval(rows[i - 1].successes, rows[i - 1].samples, z);
    const Interval next = wilson_interval(rows[i].successes, rows[i].samples, z);
    if (increasing && next.high < prev.low) return false;
    if (!increasing && next.low > prev.high) return false;
  }
  return true;
}

std::string to_csv(const std::vector<ExperimentRow>& rows) {
  std::string out = std::string(kCsvHeader) + "\n";
  char buf[256];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%d,%d,%d,%d,%.6f,%.6f,%.6f,%llu,%.3f\n",
                  r.n, r.l, r.samples, r.successes, r.proportion, r.ci_low,
                  r.ci_high, static_cast<unsigned long long>(r.seed),
                  r.elapsed_ms);
    out += buf;
  }
  return out;
}

std::string to_json(const ExperimentConfig& cfg,
                    const std::vector<ExperimentRow>& rows) {
  nlohmann::ordered_json doc;
  doc["kind"] = to_string(cfg.kind);
  doc["statistic"] = statistic_name(cfg.kind, !cfg.witnesses.empty());
  doc["scheme"] = to_string(cfg.scheme);
  doc["strict_paper"] = cfg.strict_paper;
  doc["eps"] = cfg.eps;
  auto& arr = doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    arr.push_back({{"n", r.n},
                   {"l", r.l},
                   {"samples", r.samples},
                   {"successes", r.successes},
                   {"proportion", r.proportion},
                   {"ci_low", r.ci_low},
                   {"ci_high", r.ci_high},
                   {"seed", r.seed},
                   {"elapsed_ms", r.elapsed_ms}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace garside
