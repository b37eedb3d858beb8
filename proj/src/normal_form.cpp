#include "garside/normal_form.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace garside {

namespace {

void check_same_group(const NormalForm& a, const NormalForm& b) {
  if (a.strand_count() != b.strand_count()) {
    throw InvalidParameter("braids live in different braid groups");
  }
}

// Incremental right multiplication. Factors are stored up to a pending
// tau twist so that multiplying by Delta^k costs O(1): the actual factor i
// is tau^{twisted}(stored[i]). tau preserves left-weighting, so the local
// sweep can run on stored factors directly.
class Builder {
 public:
  explicit Builder(int n) : n_(n) {}
  Builder(int n, int p, std::vector<SimpleBraid> factors)
      : n_(n), inf_(p), stored_(std::move(factors)) {}
  explicit Builder(const NormalForm& x)
      : Builder(x.strand_count(), x.inf(), x.factors()) {}

  void mul_delta(int k) {
    inf_ += k;
    if (k % 2 != 0) twisted_ = !twisted_;
  }

  void mul_simple(const SimpleBraid& s) {
    if (s.is_identity()) return;
    stored_.push_back(twisted_ ? s.tau() : s);
    for (std::size_t i = stored_.size() - 1; i > 0; --i) {
      const SimpleBraid& a = stored_[i - 1];
      const SimpleBraid& b = stored_[i];
      const SimpleBraid t = meet(a.complement(), b);
      if (t.is_identity()) break;
      stored_[i - 1] = a.then(t);
      stored_[i] = t.under(b);
    }
    while (!stored_.empty() && stored_.back().is_identity()) stored_.pop_back();
    std::size_t lead = 0;
    while (lead < stored_.size() && stored_[lead].is_delta()) ++lead;
    if (lead > 0) {
      stored_.erase(stored_.begin(), stored_.begin() + static_cast<long>(lead));
      inf_ += static_cast<int>(lead);
    }
  }

  void mul_letter(const Letter& l) {
    const SimpleBraid a = SimpleBraid::atom(n_, l.index);
    if (l.sign > 0) {
      mul_simple(a);
    } else {
      // sigma_i^{-1} = Delta^{-1} tau(d sigma_i)
      mul_delta(-1);
      mul_simple(a.complement().tau());
    }
  }

  NormalForm finish() && {
    if (twisted_) {
      for (auto& f : stored_) f = f.tau();
    }
    return NormalForm::from_factors(n_, inf_, std::move(stored_));
  }

 private:
  int n_;
  int inf_ = 0;
  bool twisted_ = false;
  std::vector<SimpleBraid> stored_;
};

}  // namespace

NormalForm::NormalForm(int n) : n_(n) {
  if (n < 2 || n > kMaxStrands) {
    throw InvalidParameter("strand count out of range: " + std::to_string(n));
  }
}

NormalForm NormalForm::delta_power(int n, int p) {
  NormalForm x(n);
  x.inf_ = p;
  return x;
}

NormalForm NormalForm::from_simple(const SimpleBraid& s) {
  return from_simples(s.strand_count(), 0, std::span(&s, 1));
}

NormalForm NormalForm::from_simples(int n, int p,
                                    std::span<const SimpleBraid> s) {
  Builder b(n);
  b.mul_delta(p);
  for (const auto& f : s) {
    if (f.strand_count() != n) throw InvalidParameter("strand count mismatch");
    b.mul_simple(f);
  }
  return std::move(b).finish();
}

NormalForm NormalForm::from_factors(int n, int p, std::vector<SimpleBraid> f) {
  NormalForm x(n);
  x.inf_ = p;
  x.factors_ = std::move(f);
  if (!x.well_formed()) {
    throw InvalidParameter("factor sequence is not a left normal form");
  }
  return x;
}

NormalForm NormalForm::slice(int first, int count) const {
  if (first < 0 || count < 0 || first + count > canonical_length()) {
    throw InvalidParameter("factor slice out of range");
  }
  NormalForm x(n_);
  x.factors_.assign(factors_.begin() + first, factors_.begin() + first + count);
  return x;
}

NormalForm NormalForm::with_inf(int p) const {
  NormalForm x = *this;
  x.inf_ = p;
  return x;
}

bool NormalForm::well_formed() const {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& f = factors_[i];
    if (f.strand_count() != n_ || f.is_identity() || f.is_delta()) return false;
    if (i > 0 && !is_left_weighted(factors_[i - 1], f)) return false;
  }
  return true;
}

NormalForm normalize(const ArtinWord& w) {
  w.validate();
  Builder b(w.strand_count);
  for (const auto& l : w.letters) b.mul_letter(l);
  return std::move(b).finish();
}

NormalForm multiply(const NormalForm& x, const NormalForm& y) {
  check_same_group(x, y);
  Builder b(x);
  b.mul_delta(y.inf());
  for (const auto& f : y.factors()) b.mul_simple(f);
  return std::move(b).finish();
}

NormalForm inverse(const NormalForm& x) {
  // x^{-1} = d(x) Delta^{-sup x} = Delta^{-sup x} tau^{sup x}(d(x))
  const NormalForm c = complement(x);
  const int s = x.sup();
  std::vector<SimpleBraid> f;
  f.reserve(c.factors().size());
  for (const auto& g : c.factors()) f.push_back(g.tau(s));
  return NormalForm::from_factors(x.strand_count(), -s, std::move(f));
}

NormalForm conjugate(const NormalForm& x, const NormalForm& c) {
  return multiply(multiply(c, x), inverse(c));
}

bool is_in_normal_form_as_concatenation(const NormalForm& x,
                                        const NormalForm& y) {
  check_same_group(x, y);
  if (y.inf() != 0) throw InvalidParameter("right operand must have inf 0");
  if (x.canonical_length() == 0 || y.canonical_length() == 0) {
    throw EmptyNormalForm("concatenation test needs nonempty factor lists");
  }
  return is_left_weighted(x.factors().back(), y.factors().front());
}

SimpleBraid initial_factor(const NormalForm& x) {
  if (x.canonical_length() == 0) {
    throw EmptyNormalForm("initial factor of a braid of canonical length 0");
  }
  return x.factors().front().tau(x.inf());
}

SimpleBraid final_factor(const NormalForm& x) {
  if (x.canonical_length() == 0) {
    throw EmptyNormalForm("final factor of a braid of canonical length 0");
  }
  return x.factors().back();
}

bool is_rigid(const NormalForm& x) {
  return is_left_weighted(final_factor(x), initial_factor(x));
}

namespace {

// Simple prefix x ^ Delta of a positive braid.
SimpleBraid simple_prefix(const NormalForm& x) {
  if (x.inf() > 0) return SimpleBraid::delta(x.strand_count());
  if (x.factors().empty()) return SimpleBraid::identity(x.strand_count());
  return x.factors().front();
}

// s^{-1} x for positive x and s a prefix of x ^ Delta.
NormalForm strip_simple_prefix(const NormalForm& x, const SimpleBraid& s) {
  const int n = x.strand_count();
  std::vector<SimpleBraid> rest;
  rest.reserve(x.factors().size() + 1);
  int p = x.inf();
  if (p > 0) {
    // s^{-1} Delta^p = d(s) Delta^{p-1} = Delta^{p-1} tau^{p-1}(d s)
    --p;
    rest.push_back(s.complement().tau(p));
    rest.insert(rest.end(), x.factors().begin(), x.factors().end());
  } else {
    rest.push_back(s.under(x.factors().front()));
    rest.insert(rest.end(), x.factors().begin() + 1, x.factors().end());
  }
  return NormalForm::from_simples(n, p, rest);
}

}  // namespace

NormalForm gcd(const NormalForm& x, const NormalForm& y) {
  check_same_group(x, y);
  const int n = x.strand_count();
  const int m = std::min(x.inf(), y.inf());
  NormalForm a = x.with_inf(x.inf() - m);
  NormalForm b = y.with_inf(y.inf() - m);
  std::vector<SimpleBraid> common;
  for (;;) {
    const SimpleBraid s = meet(simple_prefix(a), simple_prefix(b));
    if (s.is_identity()) break;
    common.push_back(s);
    a = strip_simple_prefix(a, s);
    b = strip_simple_prefix(b, s);
  }
  return NormalForm::from_simples(n, m, common);
}

bool left_divides(const NormalForm& x, const NormalForm& y) {
  check_same_group(x, y);
  return multiply(inverse(x), y).inf() >= 0;
}

NormalForm complement(const NormalForm& y) {
  const auto& f = y.factors();
  const int l = y.canonical_length();
  std::vector<SimpleBraid> out;
  out.reserve(f.size());
  for (int i = 0; i < l; ++i) out.push_back(f[l - 1 - i].complement().tau(i));
  return NormalForm::from_factors(y.strand_count(), 0, std::move(out));
}

NormalForm tau(const NormalForm& x, int k) {
  if (k % 2 == 0) return x;
  std::vector<SimpleBraid> f;
  f.reserve(x.factors().size());
  for (const auto& g : x.factors()) f.push_back(g.tau());
  return NormalForm::from_factors(x.strand_count(), x.inf(), std::move(f));
}

NormalForm tau_conjugate(const NormalForm& x) { return tau(x, 1); }

NormalForm cycling(const NormalForm& x) {
  const SimpleBraid first = initial_factor(x);
  std::vector<SimpleBraid> rest(x.factors().begin() + 1, x.factors().end());
  Builder b(x.strand_count(), x.inf(), std::move(rest));
  b.mul_simple(first);
  return std::move(b).finish();
}

std::vector<OrbitElement> rigid_orbit_with_conjugators(const NormalForm& z) {
  if (!is_rigid(z)) throw InvalidParameter("rigid_orbit needs a rigid braid");
  const int n = z.strand_count();
  const NormalForm delta_inv = NormalForm::delta_power(n, -1);
  std::vector<OrbitElement> orbit;
  std::unordered_map<NormalForm, std::size_t> seen;
  orbit.push_back({z, NormalForm::identity(n)});
  seen.emplace(z, 0);
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    const NormalForm current = orbit[head].braid;
    const NormalForm g = orbit[head].conjugator;
    const NormalForm iota_inv =
        inverse(NormalForm::from_simple(initial_factor(current)));
    OrbitElement next[2] = {
        {cycling(current), multiply(iota_inv, g)},
        {tau_conjugate(current), multiply(delta_inv, g)},
    };
    for (auto& e : next) {
      if (seen.contains(e.braid)) continue;
      seen.emplace(e.braid, orbit.size());
      orbit.push_back(std::move(e));
    }
  }
  return orbit;
}

std::vector<NormalForm> rigid_orbit(const NormalForm& z) {
  std::vector<NormalForm> out;
  for (auto& e : rigid_orbit_with_conjugators(z)) out.push_back(e.braid);
  return out;
}

std::optional<int> find_factor_subword(std::span<const SimpleBraid> haystack,
                                       std::span<const SimpleBraid> needle) {
  if (needle.size() > haystack.size()) return std::nullopt;
  const auto it = std::search(haystack.begin(), haystack.end(), needle.begin(),
                              needle.end());
  if (it == haystack.end() && !needle.empty()) return std::nullopt;
  return static_cast<int>(it - haystack.begin());
}

bool contains_factor_subword(const NormalForm& x, const NormalForm& w) {
  check_same_group(x, w);
  if (w.inf() != 0) throw InvalidParameter("subword must have inf 0");
  return find_factor_subword(x.factors(), w.factors()).has_value();
}

NormalForm reverse(const NormalForm& x) {
  // rev(Delta^p x_1..x_r) = rev(x_r)..rev(x_1) Delta^p
  //                      = Delta^p tau^p(rev x_r) .. tau^p(rev x_1)
  std::vector<SimpleBraid> f;
  f.reserve(x.factors().size());
  for (auto it = x.factors().rbegin(); it != x.factors().rend(); ++it) {
    f.push_back(it->reversed().tau(x.inf()));
  }
  return NormalForm::from_simples(x.strand_count(), x.inf(), f);
}

SimpleBraid max_simple_suffix(const NormalForm& x) {
  if (x.inf() < 0 || x.is_identity()) {
    throw InvalidParameter("max_simple_suffix needs a nontrivial positive braid");
  }
  return simple_prefix(reverse(x)).reversed();
}

bool is_in_right_normal_form(const NormalForm& x) {
  if (x.inf() < 0) throw InvalidParameter("right normal form check needs inf >= 0");
  const auto& f = x.factors();
  for (std::size_t i = 1; i < f.size(); ++i) {
    if (!is_left_weighted(f[i].reversed(), f[i - 1].reversed())) return false;
  }
  return true;
}

namespace {

// crossed[a * n + b] for strands a, b labelled by 0-based start position.
std::vector<bool> crossing_table(const NormalForm& x) {
  if (x.inf() < 0) throw InvalidParameter("strand tracking needs a positive braid");
  const int n = x.strand_count();
  std::vector<bool> crossed(static_cast<std::size_t>(n * n), false);
  std::vector<int> at(n);
  for (int i = 0; i < n; ++i) at[i] = i;
  for (const auto& l : to_artin_word(x).letters) {
    const int a = at[l.index - 1];
    const int b = at[l.index];
    crossed[a * n + b] = crossed[b * n + a] = true;
    std::swap(at[l.index - 1], at[l.index]);
  }
  return crossed;
}

}  // namespace

bool strands_cross(const NormalForm& x, int r, int s) {
  const int n = x.strand_count();
  if (r < 1 || s < 1 || r > n || s > n || r == s) {
    throw InvalidParameter("strand positions out of range");
  }
  return crossing_table(x)[(r - 1) * n + (s - 1)];
}

std::optional<std::pair<int, int>> noncrossing_pair_exists(const NormalForm& x) {
  if (x.inf() != 0 || x.canonical_length() != 2) {
    throw InvalidParameter(
        "noncrossing pair search needs a positive braid with exactly two "
        "non-Delta factors");
  }
  const int n = x.strand_count();
  const auto crossed = crossing_table(x);
  for (int r = 0; r < n; ++r) {
    for (int s = r + 1; s < n; ++s) {
      if (!crossed[r * n + s]) return std::pair{r + 1, s + 1};
    }
  }
  return std::nullopt;
}

ArtinWord to_artin_word(const NormalForm& x) {
  const int n = x.strand_count();
  ArtinWord w{n, {}};
  const auto dw = SimpleBraid::delta(n).canonical_word();
  for (int k = 0; k < x.inf(); ++k) {
    for (int i : dw) w.letters.push_back({i, 1});
  }
  for (int k = 0; k < -x.inf(); ++k) {
    for (auto it = dw.rbegin(); it != dw.rend(); ++it) {
      w.letters.push_back({*it, -1});
    }
  }
  for (const auto& f : x.factors()) {
    for (int i : f.canonical_word()) w.letters.push_back({i, 1});
  }
  return w;
}

std::size_t hash_value(const NormalForm& x) {
  std::size_t h = static_cast<std::size_t>(x.strand_count()) * 1000003u +
                  static_cast<std::size_t>(x.inf() + 1'000'000);
  for (const auto& f : x.factors()) h = h * 1099511628211ull ^ f.hash();
  return h;
}

}  // namespace garside
