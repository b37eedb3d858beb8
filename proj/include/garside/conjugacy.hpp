#pragma once

// Generic-case conjugacy search: a quadratic-time rigid conjugate with an
// optional certificate that the rigid conjugates form a single orbit under
// cycling and tau, and a pair solver built on it.

#include <optional>
#include <string>
#include <vector>

#include "garside/genericity.hpp"

namespace garside {

// Consecutive factor pair (Delta sigma_j^{-1}) . sigma_i with i != j.
struct WitnessPattern {
  SimpleBraid first;
  SimpleBraid second;
};

WitnessPattern witness_pattern(int n, int j, int i);
// Every (Delta sigma_j^{-1}, sigma_i) with i != j.
std::vector<WitnessPattern> default_witness_patterns(int n);
// (Delta sigma_2^{-1}, sigma_1) and its tau image only.
std::vector<WitnessPattern> strict_witness_patterns(int n);

enum class Uniqueness { Certified, RigidNoCert };

std::string to_string(Uniqueness u);

struct ConjugacyCertificate {
  // rigid = conjugator . x . conjugator^{-1}
  NormalForm rigid;
  NormalForm conjugator;
  Uniqueness uniqueness = Uniqueness::RigidNoCert;
  // Index inside P3 of the witness pair, present iff certified.
  std::optional<int> witness_position;
};

// nullopt is the "I don't know" outcome.
std::optional<ConjugacyCertificate> fast_rigid_conjugate(
    const NormalForm& x, const std::vector<WitnessPattern>& patterns,
    PieceScheme scheme = PieceScheme::FloorBalanced);
std::optional<ConjugacyCertificate> fast_rigid_conjugate(const NormalForm& x);

// Re-checks rigidity, the conjugation identity and, when certified, that
// iota and the complement of phi are atoms.
bool check_certificate(const NormalForm& x, const ConjugacyCertificate& c);

// c . x . c^{-1} == y
bool verify_conjugator(const NormalForm& x, const NormalForm& y,
                       const NormalForm& c);

struct ConjugacyAnswer {
  enum class Kind { Conjugate, NotConjugate, Unknown };
  Kind kind = Kind::Unknown;
  // For Conjugate: c with c . x1 . c^{-1} == x2.
  std::optional<NormalForm> conjugator;
};

std::string to_string(ConjugacyAnswer::Kind k);

// Decides when at least one side is certified and the other has a rigid
// conjugate: the certified side's sliding circuit set is its rigid orbit,
// and the other rigid conjugate lies in its own sliding circuit set.
ConjugacyAnswer solve_conjugacy(const NormalForm& x1, const NormalForm& x2,
                                const std::vector<WitnessPattern>& patterns,
                                PieceScheme scheme = PieceScheme::FloorBalanced);
ConjugacyAnswer solve_conjugacy(const NormalForm& x1, const NormalForm& x2);

}  // namespace garside
