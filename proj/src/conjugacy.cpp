#include "garside/conjugacy.hpp"

#include <stdexcept>

namespace garside {

WitnessPattern witness_pattern(int n, int j, int i) {
  if (i == j) throw InvalidParameter("witness pattern needs i != j");
  return {SimpleBraid::delta_without(n, j), SimpleBraid::atom(n, i)};
}

std::vector<WitnessPattern> default_witness_patterns(int n) {
  std::vector<WitnessPattern> out;
  for (int j = 1; j < n; ++j) {
    for (int i = 1; i < n; ++i) {
      if (i != j) out.push_back(witness_pattern(n, j, i));
    }
  }
  return out;
}

std::vector<WitnessPattern> strict_witness_patterns(int n) {
  if (n < 3) return {};
  return {witness_pattern(n, 2, 1), witness_pattern(n, n - 2, n - 1)};
}

std::string to_string(Uniqueness u) {
  return u == Uniqueness::Certified ? "certified" : "rigid-no-cert";
}

std::string to_string(ConjugacyAnswer::Kind k) {
  switch (k) {
    case ConjugacyAnswer::Kind::Conjugate:
      return "conjugate";
    case ConjugacyAnswer::Kind::NotConjugate:
      return "not-conjugate";
    case ConjugacyAnswer::Kind::Unknown:
      break;
  }
  return "unknown";
}

std::optional<ConjugacyCertificate> fast_rigid_conjugate(
    const NormalForm& x, const std::vector<WitnessPattern>& patterns,
    PieceScheme scheme) {
  if (x.canonical_length() < 5) return std::nullopt;
  int l = x.canonical_length();
  try {
    outer_piece_size(l, scheme);
  } catch (const SchemeDegenerate&) {
    return std::nullopt;
  }

  // Steps 1-3.
  auto rc = observation_test(x, scheme);
  if (!rc) return std::nullopt;

  // Step 4: look for a witness pair inside P3.
  const NormalForm p3 = middle_fifth(x, scheme);
  const auto& mid = p3.factors();
  std::optional<int> where;
  for (int q = 0; q + 1 < static_cast<int>(mid.size()) && !where; ++q) {
    for (const auto& w : patterns) {
      if (mid[q] == w.first && mid[q + 1] == w.second) {
        where = q;
        break;
      }
    }
  }
  if (!where) {
    return ConjugacyCertificate{std::move(rc->rigid), std::move(rc->conjugator),
                                Uniqueness::RigidNoCert, std::nullopt};
  }

  // P3 closes the rigid conjugate y, so the pair sits at a known offset.
  // Cycling the rigid braid m times rotates its factors, twisting the ones
  // moved to the back by tau^p:
  //   z = P^{-1} y P,  P = tau^p(y_1 ... y_m).
  const NormalForm& y = rc->rigid;
  const int n = x.strand_count();
  const int p = y.inf();
  l = y.canonical_length();
  const int a = l - static_cast<int>(mid.size()) + *where;
  const int m = a + 1;
  std::vector<SimpleBraid> rotated(y.factors().begin() + m, y.factors().end());
  std::vector<SimpleBraid> moved;
  for (int i = 0; i < m; ++i) {
    rotated.push_back(y.factors()[i].tau(p));
    moved.push_back(y.factors()[i].tau(p));
  }
  NormalForm z = NormalForm::from_factors(n, p, std::move(rotated));
  const NormalForm shift = NormalForm::from_factors(n, 0, std::move(moved));
  NormalForm conj = multiply(inverse(shift), rc->conjugator);
  return ConjugacyCertificate{std::move(z), std::move(conj),
                              Uniqueness::Certified, where};
}

std::optional<ConjugacyCertificate> fast_rigid_conjugate(const NormalForm& x) {
  return fast_rigid_conjugate(x, default_witness_patterns(x.strand_count()));
}

bool verify_conjugator(const NormalForm& x, const NormalForm& y,
                       const NormalForm& c) {
  if (x.strand_count() != y.strand_count() ||
      x.strand_count() != c.strand_count()) {
    throw InvalidParameter("braids live in different braid groups");
  }
  return conjugate(x, c) == y;
}

bool check_certificate(const NormalForm& x, const ConjugacyCertificate& c) {
  if (c.rigid.canonical_length() == 0 || !is_rigid(c.rigid)) return false;
  if (!verify_conjugator(x, c.rigid, c.conjugator)) return false;
  if (c.uniqueness == Uniqueness::Certified) {
    if (!c.witness_position) return false;
    if (!initial_factor(c.rigid).is_atom()) return false;
    if (!final_factor(c.rigid).complement().is_atom()) return false;
  }
  return true;
}

ConjugacyAnswer solve_conjugacy(const NormalForm& x1, const NormalForm& x2,
                                const std::vector<WitnessPattern>& patterns,
                                PieceScheme scheme) {
  if (x1.strand_count() != x2.strand_count()) {
    throw InvalidParameter("braids live in different braid groups");
  }
  const auto c1 = fast_rigid_conjugate(x1, patterns, scheme);
  const auto c2 = fast_rigid_conjugate(x2, patterns, scheme);
  if (!c1 || !c2) return {};
  const bool first = c1->uniqueness == Uniqueness::Certified;
  if (!first && c2->uniqueness != Uniqueness::Certified) return {};
  const auto& base = first ? *c1 : *c2;
  const auto& other = first ? *c2 : *c1;
  for (const auto& e : rigid_orbit_with_conjugators(base.rigid)) {
    if (e.braid != other.rigid) continue;
    // zo = g zb g^-1, zi = Ki xi Ki^-1  =>  xo = (Ko^-1 g Kb) xb (...)^-1
    NormalForm c = multiply(multiply(inverse(other.conjugator), e.conjugator),
                            base.conjugator);
    if (!first) c = inverse(c);
    if (!verify_conjugator(x1, x2, c)) {
      throw std::logic_error("assembled conjugator failed verification");
    }
    return {ConjugacyAnswer::Kind::Conjugate, std::move(c)};
  }
  return {ConjugacyAnswer::Kind::NotConjugate, std::nullopt};
}

ConjugacyAnswer solve_conjugacy(const NormalForm& x1, const NormalForm& x2) {
  return solve_conjugacy(x1, x2, default_witness_patterns(x1.strand_count()));
}

}  // namespace garside
