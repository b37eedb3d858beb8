#pragma once

// Permutation braids: the finite lattice [1, Delta] of B_n.
//
// Convention: a simple braid is stored as the permutation `perm` with
// perm[i] = final position of the strand that starts at position i
// (0-based internally). Products compose left to right, so for a word
// a.b the strand at i goes to b(a(i)). Artin generator indices exposed
// through the API are 1-based, as in sigma_1 .. sigma_{n-1}.

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "garside/errors.hpp"

namespace garside {

inline constexpr int kMaxStrands = 16;

// One letter sigma_index^sign of an Artin word.
struct Letter {
  int index = 1;
  int sign = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

// A raw braid word together with its strand count.
struct ArtinWord {
  int strand_count = 2;
  std::vector<Letter> letters;

  // Throws InvalidParameter when n is out of range or a letter index is not
  // in [1, n-1].
  void validate() const;

  friend bool operator==(const ArtinWord&, const ArtinWord&) = default;
};

ArtinWord concat(const ArtinWord& a, const ArtinWord& b);

// Set of Artin generator indices in [1, kMaxStrands-1], as a bitmask.
class GeneratorSet {
 public:
  constexpr GeneratorSet() = default;
  static constexpr GeneratorSet from_bits(std::uint32_t bits) {
    GeneratorSet s;
    s.bits_ = bits;
    return s;
  }
  // {1, ..., m}
  static constexpr GeneratorSet range(int m) {
    return from_bits(m <= 0 ? 0u : ((1u << m) - 1u) << 1);
  }

  constexpr void insert(int i) { bits_ |= 1u << i; }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool subset_of(GeneratorSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr std::uint32_t bits() const { return bits_; }
  std::vector<int> to_vector() const;

  friend constexpr bool operator==(GeneratorSet, GeneratorSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

class SimpleBraid {
 public:
  // The trivial braid of B_n.
  explicit SimpleBraid(int n);

  static SimpleBraid identity(int n) { return SimpleBraid(n); }
  static SimpleBraid delta(int n);
  // sigma_i, 1 <= i <= n-1.
  static SimpleBraid atom(int n, int i);
  // Delta . sigma_j^{-1}, the simple braid whose complement is sigma_j.
  static SimpleBraid delta_without(int n, int j);
  // From one-line notation with 1-based values; throws unless a bijection.
  static SimpleBraid from_permutation(const std::vector<int>& one_line);
  // Product of the letters of a positive word; throws InvalidParameter when
  // the word is not positive or two strands would cross twice.
  static SimpleBraid from_word(int n, const std::vector<int>& indices);

  int strand_count() const { return n_; }
  // 1-based one-line notation.
  std::vector<int> permutation() const;
  // Position (0-based) reached by the strand starting at 0-based position i.
  int image(int i) const { return perm_[i]; }
  int preimage(int i) const;

  // Number of crossings, i.e. the length of any positive word for this braid.
  int length() const;
  bool is_identity() const;
  bool is_delta() const;
  bool is_atom() const { return length() == 1; }

  GeneratorSet starting_set() const;
  GeneratorSet finishing_set() const;

  // Product a.b of two simple braids, only meaningful as a simple braid when
  // a.length() + b.length() == result.length(); see product_is_simple.
  SimpleBraid then(const SimpleBraid& b) const;
  // a^{-1}.b as a permutation (may not be a positive braid).
  SimpleBraid under(const SimpleBraid& b) const;
  // Reversed word, i.e. the inverse permutation.
  SimpleBraid reversed() const;

  // The partial complement s^{-1} Delta.
  SimpleBraid complement() const;
  // Delta s^{-1}, the left complement.
  SimpleBraid left_complement() const;
  // tau^k(s) = Delta^{-k} s Delta^k.
  SimpleBraid tau(int k = 1) const;

  // Deterministic positive reduced word: positions are filled from the
  // right, each by an ascending run moving the required strand into place.
  std::vector<int> canonical_word() const;
  ArtinWord canonical_artin_word() const;

  std::size_t hash() const;

  friend bool operator==(const SimpleBraid& a, const SimpleBraid& b) {
    return a.n_ == b.n_ && a.perm_ == b.perm_;
  }
  friend auto operator<=>(const SimpleBraid& a, const SimpleBraid& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.perm_ <=> b.perm_;
  }

 private:
  SimpleBraid() = default;

  std::uint8_t n_ = 0;
  std::array<std::uint8_t, kMaxStrands> perm_{};
};

// Free-function surface of the lattice operations.
SimpleBraid delta(int n);
bool left_divides(const SimpleBraid& a, const SimpleBraid& b);
bool right_divides(const SimpleBraid& a, const SimpleBraid& b);
GeneratorSet starting_set(const SimpleBraid& s);
GeneratorSet finishing_set(const SimpleBraid& s);
bool is_left_weighted(const SimpleBraid& s1, const SimpleBraid& s2);
bool product_is_simple(const SimpleBraid& a, const SimpleBraid& b);
SimpleBraid meet(const SimpleBraid& a, const SimpleBraid& b);
SimpleBraid complement_simple(const SimpleBraid& s);
SimpleBraid tau_simple(const SimpleBraid& s, int k);
ArtinWord simple_to_canonical_word(const SimpleBraid& s);

// All n! simple braids of B_n, in lexicographic permutation order.
std::vector<SimpleBraid> all_simple_braids(int n);
// The n! - 2 simple braids other than 1 and Delta.
std::vector<SimpleBraid> proper_simple_braids(int n);

std::string to_string(const ArtinWord& w);

}  // namespace garside

template <>
struct std::hash<garside::SimpleBraid> {
  std::size_t operator()(const garside::SimpleBraid& s) const {
    return s.hash();
  }
};
