#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "garside/census.hpp"
#include "garside/conjugacy.hpp"
#include "garside/errors.hpp"
#include "garside/experiment.hpp"
#include "garside/text.hpp"

using namespace garside;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitInvalid = 3;

struct Options {
  int n = 4;
  int n2 = 0;
  std::vector<std::string> words;
  int length = -1;
  std::vector<int> lengths;
  int eps = 0;
  int samples = 1000;
  std::uint64_t seed = 0;
  std::string scheme = "floor";
  bool strict_paper = false;
  std::string witness_file;
  std::string format = "csv";
  std::string out;
  bool timing = false;
  bool serial = false;
  bool fit = false;
  std::string kind;
};

PieceScheme scheme_of(const Options& o) {
  const auto s = parse_scheme(o.scheme);
  if (!s) throw InvalidParameter("unknown scheme '" + o.scheme + "'");
  return *s;
}

std::vector<WitnessPattern> patterns_of(const Options& o) {
  return o.strict_paper ? strict_witness_patterns(o.n)
                        : default_witness_patterns(o.n);
}

std::string read_stream(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidParameter("cannot read '" + path + "'");
  return read_stream(in);
}

std::string word_at(const Options& o, std::size_t i) {
  if (i < o.words.size()) return o.words[i];
  if (i == 0 && o.words.empty()) return read_stream(std::cin);
  throw InvalidParameter("missing braid word argument");
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw InvalidParameter("cannot write '" + o.out + "'");
  f << text;
}

int cmd_nf(const Options& o) {
  std::cout << render(normalize(parse_word(word_at(o, 0), o.n))) << "\n";
  return 0;
}

int cmd_rigid_conj(const Options& o) {
  const NormalForm x = normalize(parse_word(word_at(o, 0), o.n));
  const auto cert = fast_rigid_conjugate(x, patterns_of(o), scheme_of(o));
  if (!cert || (o.strict_paper && cert->uniqueness != Uniqueness::Certified)) {
    std::cout << "I don't know\n";
    return 0;
  }
  if (!check_certificate(x, *cert)) {
    throw std::logic_error("certificate failed verification");
  }
  std::cout << "rigid: " << render(cert->rigid) << "\n"
            << "conjugator: " << render(cert->conjugator) << "\n"
            << "status: " << to_string(cert->uniqueness) << "\n";
  return 0;
}

int cmd_conjugacy(const Options& o) {
  const int n2 = o.n2 > 0 ? o.n2 : o.n;
  if (n2 != o.n) {
    throw InvalidParameter("braids on " + std::to_string(o.n) + " and " +
                           std::to_string(n2) + " strands");
  }
  if (o.words.size() != 2) throw InvalidParameter("conjugacy needs two words");
  const NormalForm x1 = normalize(parse_word(o.words[0], o.n));
  const NormalForm x2 = normalize(parse_word(o.words[1], n2));
  const auto ans = solve_conjugacy(x1, x2, patterns_of(o), scheme_of(o));
  std::cout << "answer: " << to_string(ans.kind) << "\n";
  if (ans.kind == ConjugacyAnswer::Kind::Conjugate) {
    std::cout << "conjugator: " << render(*ans.conjugator) << "\n"
              << "verified: "
              << (verify_conjugator(x1, x2, *ans.conjugator) ? "yes" : "no")
              << "\n";
  }
  return 0;
}

int cmd_census_count(const Options& o) {
  if (o.length < 0) throw InvalidParameter("--length is required");
  const Census c(o.n, o.length);
  std::ostringstream s;
  s << "sphere: " << c.sphere(o.length) << "\n"
    << "ball: " << c.ball(o.length) << "\n";
  emit(o, s.str());
  return 0;
}

int cmd_census_growth(const Options& o) {
  if (o.length < 1) throw InvalidParameter("--length >= 1 is required");
  const GrowthEstimate g = growth_rate(o.n, o.length);
  std::ostringstream s;
  s.precision(12);
  s << "ratio: " << g.ratio << "\n";
  const int first = o.length - static_cast<int>(g.recent.size()) + 1;
  for (std::size_t i = 0; i < g.recent.size(); ++i) {
    s << "l=" << first + static_cast<int>(i) << ": " << g.recent[i] << "\n";
  }
  emit(o, s.str());
  return 0;
}

int cmd_sample(const Options& o, bool ball) {
  if (o.length < 0) throw InvalidParameter("--length is required");
  SampleConfig cfg{o.n, o.length, o.eps, o.samples, o.seed};
  const auto braids = ball ? sample_ball(cfg) : sample_sphere(cfg);
  std::string text;
  for (const auto& b : braids) text += render(b) + "\n";
  emit(o, text);
  return 0;
}

int cmd_experiment(const Options& o) {
  ExperimentConfig cfg;
  const auto kind = parse_kind(o.kind);
  if (!kind) throw InvalidParameter("unknown experiment kind '" + o.kind + "'");
  cfg.kind = *kind;
  cfg.n = o.n;
  cfg.lengths = o.lengths;
  if (cfg.lengths.empty() && o.length >= 0) cfg.lengths = {o.length};
  cfg.eps = o.eps;
  cfg.samples = o.samples;
  cfg.seed = o.seed;
  cfg.scheme = scheme_of(o);
  cfg.strict_paper = o.strict_paper;
  cfg.timing = o.timing || cfg.kind == ExperimentKind::ConjugacyBench;
  if (!o.witness_file.empty()) {
    for (const auto& w : parse_word_list(read_file(o.witness_file), o.n)) {
      cfg.witnesses.push_back(normalize(w));
    }
  }
  if (o.format != "csv" && o.format != "json") {
    throw InvalidParameter("unknown format '" + o.format + "'");
  }
  const auto rows = o.serial ? run_experiment_serial(cfg) : run_experiment(cfg);
  emit(o, o.format == "csv" ? to_csv(rows) : to_json(cfg, rows));
  std::cerr << "statistic: " << statistic_name(cfg.kind, !cfg.witnesses.empty())
            << "\n";
  if (o.fit) {
    try {
      const DecayFit f = fit_decay(rows);
      std::cerr << "decay fit: slope " << f.slope << ", intercept "
                << f.intercept << ", r2 " << f.r2 << "\n";
    } catch (const InvalidParameter& e) {
      std::cerr << "decay fit: " << e.what() << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Garside normal forms, generic conjugacy and genericity statistics"};
  app.require_subcommand(1);
  Options o;

  auto add_n = [&](CLI::App* c) {
    c->add_option("--n", o.n, "number of strands")->check(CLI::Range(2, kMaxStrands));
  };
  auto add_scheme = [&](CLI::App* c) {
    c->add_option("--scheme", o.scheme, "piece scheme: paper or floor");
    c->add_flag("--strict-paper", o.strict_paper,
                "witnesses (D s2^-1, s1) and its mirror only; no third answer");
  };
  auto add_out = [&](CLI::App* c) {
    c->add_option("--out", o.out, "write data here instead of stdout");
  };
  auto add_sampling = [&](CLI::App* c) {
    c->add_option("--length", o.length, "canonical length or radius");
    c->add_option("--eps", o.eps, "infimum of sphere samples");
    c->add_option("--samples", o.samples, "number of samples");
    c->add_option("--seed", o.seed, "random seed");
  };

  auto* nf = app.add_subcommand("nf", "left normal form of a braid word");
  add_n(nf);
  nf->add_option("word", o.words, "braid word (stdin if omitted)");

  auto* rc = app.add_subcommand("rigid-conj", "rigid conjugate with certificate");
  add_n(rc);
  add_scheme(rc);
  rc->add_option("word", o.words, "braid word (stdin if omitted)");

  auto* cj = app.add_subcommand("conjugacy", "decide conjugacy of two braids");
  add_n(cj);
  cj->add_option("--n2", o.n2, "strands of the second braid (default --n)");
  add_scheme(cj);
  cj->add_option("words", o.words, "two braid words")->expected(2);

  auto* census = app.add_subcommand("census", "exact counts");
  census->require_subcommand(1);
  auto* count = census->add_subcommand("count", "sphere and ball sizes");
  auto* growth = census->add_subcommand("growth", "sphere growth ratio");
  for (auto* c : {count, growth}) {
    add_n(c);
    c->add_option("--length", o.length, "canonical length or radius")->required();
    add_out(c);
  }

  auto* sample = app.add_subcommand("sample", "uniform random normal forms");
  sample->require_subcommand(1);
  auto* sphere = sample->add_subcommand("sphere", "uniform over B^{eps,l}");
  auto* ball = sample->add_subcommand("ball", "uniform over the radius-l ball");
  for (auto* c : {sphere, ball}) {
    add_n(c);
    add_sampling(c);
    add_out(c);
  }
  sphere->get_option("--samples")->default_val(1);
  ball->get_option("--samples")->default_val(1);

  auto* ex = app.add_subcommand("experiment", "Monte Carlo genericity statistics");
  ex->add_option("kind", o.kind, "experiment kind")->required();
  add_n(ex);
  add_sampling(ex);
  ex->add_option("--lengths", o.lengths, "comma-separated lengths")->delimiter(',');
  add_scheme(ex);
  ex->add_option("--witness-file", o.witness_file, "words the middle fifth must contain");
  ex->add_option("--format", o.format, "csv or json");
  add_out(ex);
  ex->add_flag("--timing", o.timing, "record elapsed_ms");
  ex->add_flag("--serial", o.serial, "use the serial reference runner");
  ex->add_flag("--fit", o.fit, "report the decay fit on stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (*nf) return cmd_nf(o);
    if (*rc) return cmd_rigid_conj(o);
    if (*cj) return cmd_conjugacy(o);
    if (*count) return cmd_census_count(o);
    if (*growth) return cmd_census_growth(o);
    if (*sphere) return cmd_sample(o, false);
    if (*ball) return cmd_sample(o, true);
    if (*ex) return cmd_experiment(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const InvalidParameter& e) {
    std::cerr << "invalid parameter: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid parameter: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
