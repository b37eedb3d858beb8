#pragma once

// Piece decomposition of a normal form, the rigidification criteria built on
// it, and blocking braids.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "garside/normal_form.hpp"

namespace garside {

// How the factor sequence x_1..x_l is cut into P1 | P2 | P3 | P4' | P5'.
//   PaperCeiling:  outer pieces of ceil(l/5) factors; invalid when that
//                  leaves no factor for P3 (e.g. l = 6, 7, 8).
//   FloorBalanced: outer pieces of floor(l/5) factors, P3 takes the rest.
enum class PieceScheme { PaperCeiling, FloorBalanced };

std::string to_string(PieceScheme s);
std::optional<PieceScheme> parse_scheme(const std::string& s);

struct PieceDecomposition {
  int eps = 0;
  PieceScheme scheme = PieceScheme::FloorBalanced;
  NormalForm p1;
  NormalForm p2;
  NormalForm p3;
  NormalForm p4_raw;
  NormalForm p5_raw;

  int outer_size() const { return p1.canonical_length(); }
  // tau^eps of the raw pieces.
  NormalForm p4() const { return tau(p4_raw, eps); }
  NormalForm p5() const { return tau(p5_raw, eps); }
  NormalForm p12() const;
  NormalForm p45() const;
};

// Outer piece size for canonical length l; throws TooShort for l < 5 and
// SchemeDegenerate when the middle piece would be empty.
int outer_piece_size(int l, PieceScheme scheme);

PieceDecomposition decompose(const NormalForm& x,
                             PieceScheme scheme = PieceScheme::FloorBalanced);

NormalForm middle_fifth(const NormalForm& x,
                        PieceScheme scheme = PieceScheme::FloorBalanced);

// y contains the middle fifth of x as a factor subword.
bool is_nonintrusive(const NormalForm& x, const NormalForm& y,
                     PieceScheme scheme = PieceScheme::FloorBalanced);

// rigid = conjugator . x . conjugator^{-1}
struct RigidConjugate {
  NormalForm rigid;
  NormalForm conjugator;
};

// Rotates P4 P5 to the front; succeeds when normalizing P45 P12 leaves
// both ends untouched, in which case Delta^eps P4 P5 P1 P2 P3 is rigid.
std::optional<RigidConjugate> observation_test(
    const NormalForm& x, PieceScheme scheme = PieceScheme::FloorBalanced);

// Independent check of everything observation_test promises.
bool check_rigid_conjugate(const NormalForm& x, const RigidConjugate& r,
                           PieceScheme scheme = PieceScheme::FloorBalanced);

// Both conditions on t = P12 ^ d(P45); sufficient for observation_test.
bool symmetric_criterion(const NormalForm& x,
                         PieceScheme scheme = PieceScheme::FloorBalanced);

// P1 is a prefix of d(P5).
bool prefix_of_complement(const NormalForm& x,
                          PieceScheme scheme = PieceScheme::FloorBalanced);

// Factor words of the explicit blocking braid for n >= 4:
//   D(1,n-1) s_{n-1} . D(1,n-2) s_{n-1} s_{n-2} . ... . s1 s3 s2 . s2
// where D(1,m) = (s1..s_{m-1})(s1..s_{m-2})...(s1).
std::vector<std::vector<int>> blocking_braid_factor_words(int n);
ArtinWord blocking_braid_word(int n);
NormalForm blocking_braid(int n);

struct BlockingReport {
  bool blocking = false;
  // Index i of the forced suffix sigma_i, when blocking.
  std::optional<int> generator;
  std::size_t prefixes_checked = 0;
};

// Exhaustive check over every X with inf 0 and at most max_prefix_len
// factors such that X . candidate is in normal form.
BlockingReport verify_blocking(const NormalForm& candidate, int max_prefix_len);

// Bounded search for a blocking braid among normal forms of inf 0 with
// 1..max_len factors, each checked with verify_blocking(., max_prefix_len).
std::optional<NormalForm> search_blocking_braid(int n, int max_len,
                                                int max_prefix_len);

}  // namespace garside
