#pragma once

// Left normal forms Delta^p x_1 ... x_r and the arithmetic built on them.

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "garside/simple_braid.hpp"

namespace garside {

class NormalForm {
 public:
  // The identity of B_n.
  explicit NormalForm(int n);
  static NormalForm identity(int n) { return NormalForm(n); }
  static NormalForm delta_power(int n, int p);
  static NormalForm from_simple(const SimpleBraid& s);
  // Builds the normal form of Delta^p s_1 ... s_k for arbitrary simple s_i.
  static NormalForm from_simples(int n, int p, std::span<const SimpleBraid> s);
  // Adopts an already-normal factor sequence; throws InvalidParameter if a
  // factor is improper or a pair is not left-weighted.
  static NormalForm from_factors(int n, int p, std::vector<SimpleBraid> f);

  int strand_count() const { return n_; }
  int inf() const { return inf_; }
  int sup() const { return inf_ + canonical_length(); }
  int canonical_length() const { return static_cast<int>(factors_.size()); }
  bool is_identity() const { return inf_ == 0 && factors_.empty(); }
  const std::vector<SimpleBraid>& factors() const { return factors_; }

  // Factors [first, first + count) as a braid of infimum 0.
  NormalForm slice(int first, int count) const;
  // Same factors with the Delta power replaced by p.
  NormalForm with_inf(int p) const;

  // Checks the class invariants (proper factors, left-weighted pairs).
  bool well_formed() const;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;

 private:
  int n_ = 2;
  int inf_ = 0;
  std::vector<SimpleBraid> factors_;
};

NormalForm normalize(const ArtinWord& w);
NormalForm multiply(const NormalForm& x, const NormalForm& y);
NormalForm inverse(const NormalForm& x);
// c . x . c^{-1}
NormalForm conjugate(const NormalForm& x, const NormalForm& c);

// X.Y is in normal form as written: S(first factor of Y) within F(last of X).
bool is_in_normal_form_as_concatenation(const NormalForm& x,
                                        const NormalForm& y);

// iota(x) = tau^{-inf x}(x_1), phi(x) = x_r. Throw EmptyNormalForm when
// canonical length is 0.
SimpleBraid initial_factor(const NormalForm& x);
SimpleBraid final_factor(const NormalForm& x);

bool is_rigid(const NormalForm& x);

// Greatest common prefix x ^ y.
NormalForm gcd(const NormalForm& x, const NormalForm& y);
// x is a prefix of y.
bool left_divides(const NormalForm& x, const NormalForm& y);

// The unique braid with y . d(y) = Delta^{sup y}.
NormalForm complement(const NormalForm& y);

// tau^k applied to the whole braid, i.e. conjugation by Delta^k.
NormalForm tau(const NormalForm& x, int k = 1);
NormalForm tau_conjugate(const NormalForm& x);
// Conjugation by iota(x); requires canonical length >= 1.
NormalForm cycling(const NormalForm& x);

// A member of an orbit together with c such that member = c . z . c^{-1}.
struct OrbitElement {
  NormalForm braid;
  NormalForm conjugator;
};

// Closure of a rigid braid under cycling and tau, breadth first from z.
std::vector<OrbitElement> rigid_orbit_with_conjugators(const NormalForm& z);
std::vector<NormalForm> rigid_orbit(const NormalForm& z);

// Factor sequence of w (inf 0) occurs contiguously in that of x.
bool contains_factor_subword(const NormalForm& x, const NormalForm& w);
// Same test restricted to a factor range of x.
std::optional<int> find_factor_subword(std::span<const SimpleBraid> haystack,
                                       std::span<const SimpleBraid> needle);

// Image under the anti-automorphism fixing every sigma_i.
NormalForm reverse(const NormalForm& x);
// Largest simple braid that is a suffix of a positive braid x != 1.
SimpleBraid max_simple_suffix(const NormalForm& x);
// The word of x (inf >= 0) read right to left is in left normal form.
bool is_in_right_normal_form(const NormalForm& x);

// For a positive braid with exactly two proper factors, a pair of strands
// (1-based starting positions r < s) that never cross.
std::optional<std::pair<int, int>> noncrossing_pair_exists(const NormalForm& x);
// Whether strands starting at r and s (1-based) cross anywhere in positive x.
bool strands_cross(const NormalForm& x, int r, int s);

// Delta^p expanded canonically followed by each factor's canonical word.
ArtinWord to_artin_word(const NormalForm& x);

std::size_t hash_value(const NormalForm& x);

}  // namespace garside

template <>
struct std::hash<garside::NormalForm> {
  std::size_t operator()(const garside::NormalForm& x) const {
    return garside::hash_value(x);
  }
};
