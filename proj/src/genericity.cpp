#include "garside/genericity.hpp"

#include <functional>

namespace garside {

std::string to_string(PieceScheme s) {
  return s == PieceScheme::PaperCeiling ? "paper" : "floor";
}

std::optional<PieceScheme> parse_scheme(const std::string& s) {
  if (s == "paper") return PieceScheme::PaperCeiling;
  if (s == "floor") return PieceScheme::FloorBalanced;
  return std::nullopt;
}

NormalForm PieceDecomposition::p12() const { return multiply(p1, p2); }

NormalForm PieceDecomposition::p45() const {
  std::vector<SimpleBraid> f = p4().factors();
  const NormalForm tail = p5();
  f.insert(f.end(), tail.factors().begin(), tail.factors().end());
  return NormalForm::from_factors(p1.strand_count(), 0, std::move(f));
}

int outer_piece_size(int l, PieceScheme scheme) {
  if (l < 5) {
    throw TooShort("piece decomposition needs canonical length >= 5, got " +
                   std::to_string(l));
  }
  const int k = scheme == PieceScheme::PaperCeiling ? (l + 4) / 5 : l / 5;
  if (l - 4 * k < 1) {
    throw SchemeDegenerate("ceiling pieces leave no middle factor at length " +
                           std::to_string(l));
  }
  return k;
}

PieceDecomposition decompose(const NormalForm& x, PieceScheme scheme) {
  const int l = x.canonical_length();
  const int k = outer_piece_size(l, scheme);
  return PieceDecomposition{
      .eps = x.inf(),
      .scheme = scheme,
      .p1 = x.slice(0, k),
      .p2 = x.slice(k, k),
      .p3 = x.slice(2 * k, l - 4 * k),
      .p4_raw = x.slice(l - 2 * k, k),
      .p5_raw = x.slice(l - k, k),
  };
}

NormalForm middle_fifth(const NormalForm& x, PieceScheme scheme) {
  const int l = x.canonical_length();
  const int k = outer_piece_size(l, scheme);
  return x.slice(2 * k, l - 4 * k);
}

bool is_nonintrusive(const NormalForm& x, const NormalForm& y,
                     PieceScheme scheme) {
  return contains_factor_subword(y, middle_fifth(x, scheme));
}

std::optional<RigidConjugate> observation_test(const NormalForm& x,
                                               PieceScheme scheme) {
  const PieceDecomposition d = decompose(x, scheme);
  const NormalForm p45 = d.p45();
  const NormalForm p12 = x.slice(0, 2 * d.outer_size());
  const NormalForm z = multiply(p45, p12);
  if (z.canonical_length() == 0) return std::nullopt;
  if (initial_factor(z) != initial_factor(p45)) return std::nullopt;
  if (final_factor(z) != final_factor(p12)) return std::nullopt;

  std::vector<SimpleBraid> f = z.factors();
  f.insert(f.end(), d.p3.factors().begin(), d.p3.factors().end());
  const int k = d.outer_size();
  return RigidConjugate{
      NormalForm::from_factors(x.strand_count(), x.inf() + z.inf(), std::move(f)),
      x.slice(x.canonical_length() - 2 * k, 2 * k),
  };
}

bool check_rigid_conjugate(const NormalForm& x, const RigidConjugate& r,
                           PieceScheme scheme) {
  return r.rigid.canonical_length() > 0 && is_rigid(r.rigid) &&
         conjugate(x, r.conjugator) == r.rigid &&
         is_nonintrusive(x, r.rigid, scheme);
}

bool symmetric_criterion(const NormalForm& x, PieceScheme scheme) {
  const PieceDecomposition d = decompose(x, scheme);
  const NormalForm p12 = x.slice(0, 2 * d.outer_size());
  const NormalForm dp45 = complement(d.p45());
  const NormalForm t = gcd(p12, dp45);
  const NormalForm t_inv = inverse(t);
  const NormalForm a = multiply(t_inv, p12);
  const NormalForm b = multiply(t_inv, dp45);
  const bool first = a.canonical_length() > 0 && final_factor(a) == final_factor(p12);
  const bool second =
      b.canonical_length() > 0 && final_factor(b) == final_factor(dp45);
  return first && second;
}

bool prefix_of_complement(const NormalForm& x, PieceScheme scheme) {
  const PieceDecomposition d = decompose(x, scheme);
  return gcd(d.p1, complement(d.p5())) == d.p1;
}

std::vector<std::vector<int>> blocking_braid_factor_words(int n) {
  if (n < 4) {
    throw InvalidParameter("the explicit blocking braid needs n >= 4");
  }
  if (n > kMaxStrands) throw InvalidParameter("too many strands");
  auto half_twist = [](int m) {
    std::vector<int> w;
    for (int top = m - 1; top >= 1; --top) {
      for (int i = 1; i <= top; ++i) w.push_back(i);
    }
    return w;
  };
  std::vector<std::vector<int>> factors;
  auto first = half_twist(n - 1);
  first.push_back(n - 1);
  factors.push_back(std::move(first));
  for (int k = 2; k <= n - 2; ++k) {
    auto f = half_twist(n - k);
    f.push_back(n - k + 1);
    f.push_back(n - k);
    factors.push_back(std::move(f));
  }
  factors.push_back({2});
  return factors;
}

ArtinWord blocking_braid_word(int n) {
  ArtinWord w{n, {}};
  for (const auto& f : blocking_braid_factor_words(n)) {
    for (int i : f) w.letters.push_back({i, 1});
  }
  return w;
}

NormalForm blocking_braid(int n) { return normalize(blocking_braid_word(n)); }

BlockingReport verify_blocking(const NormalForm& candidate, int max_prefix_len) {
  if (candidate.inf() != 0) {
    throw InvalidParameter("blocking candidate must be positive with inf 0");
  }
  BlockingReport report;
  if (candidate.canonical_length() == 0) return report;
  const int n = candidate.strand_count();
  const auto proper = proper_simple_braids(n);

  std::optional<SimpleBraid> forced;
  bool ok = true;
  // prefix holds X right to left; X . candidate is checked once per X.
  std::vector<SimpleBraid> prefix;
  std::function<void(const SimpleBraid&)> visit = [&](const SimpleBraid& next) {
    if (!ok) return;
    std::vector<SimpleBraid> f(prefix.rbegin(), prefix.rend());
    f.insert(f.end(), candidate.factors().begin(), candidate.factors().end());
    const SimpleBraid suffix =
        max_simple_suffix(NormalForm::from_factors(n, 0, std::move(f)));
    ++report.prefixes_checked;
    if (!suffix.is_atom() || (forced && *forced != suffix)) {
      ok = false;
      return;
    }
    forced = suffix;
    if (static_cast<int>(prefix.size()) == max_prefix_len) return;
    for (const auto& s : proper) {
      if (!is_left_weighted(s, next)) continue;
      prefix.push_back(s);
      visit(s);
      prefix.pop_back();
      if (!ok) return;
    }
  };
  visit(candidate.factors().front());

  report.blocking = ok;
  if (ok && forced) report.generator = forced->canonical_word().front();
  return report;
}

std::optional<NormalForm> search_blocking_braid(int n, int max_len,
                                                int max_prefix_len) {
  const auto proper = proper_simple_braids(n);
  std::vector<SimpleBraid> word;
  std::optional<NormalForm> found;
  std::function<void()> extend = [&]() {
    if (found || static_cast<int>(word.size()) == max_len) return;
    for (const auto& s : proper) {
      if (!word.empty() && !is_left_weighted(word.back(), s)) continue;
      word.push_back(s);
      const NormalForm cand = NormalForm::from_factors(n, 0, word);
      if (verify_blocking(cand, max_prefix_len).blocking) {
        found = cand;
        return;
      }
      extend();
      word.pop_back();
      if (found) return;
    }
  };
  extend();
  return found;
}

}  // namespace garside
