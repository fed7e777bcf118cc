#pragma once

// Reduction of rational almost-representations modulo a prime, with a
// certificate that every rank(I - phi(s)) survives and no defect grows.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rankwb/almost_rep.hpp"

namespace rankwb {

/// A nonzero rational whose numerator and denominator the prime must avoid.
struct Exclusion {
  enum class Kind { denominator, minor_determinant, determinant };
  Kind kind;
  GroupTable::Id element;
  Rational value;
};

const char* to_string(Exclusion::Kind k);

struct PrimeChoice {
  std::uint64_t p = 0;
  std::vector<Exclusion> exclusions;
  /// Primes in [start, p) that were skipped, each with the first exclusion it divides.
  std::vector<std::pair<std::uint64_t, std::size_t>> rejected;
};

struct RankRow {
  GroupTable::Id element;
  Index rank_before;                 // rk(I - phi(s)) over Q
  std::optional<Index> rank_after;   // over F_p; empty when p divides a denominator
  Rational minor_det;                // determinant of the pivot-order full-rank minor
  bool invertible_after = false;
};

struct PairRow {
  GroupTable::Id g, h, gh;
  Rational defect_before;
  std::optional<Rational> defect_after;
};

struct ReductionCertificate {
  std::uint64_t p = 0;
  std::vector<Exclusion> exclusions;
  /// Indices into `exclusions` whose numerator or denominator p divides.
  std::vector<std::size_t> violated;
  std::vector<RankRow> ranks;
  std::vector<PairRow> pairs;
  Rational defect_before;
  std::optional<Rational> defect_after;
  bool ranks_preserved = false;
  bool invertible = false;
  bool defect_monotone = false;
  bool valid = false;
};

/// Thrown by reduce_mod_p when p divides an excluded value.
class ReductionRejected : public Error {
 public:
  explicit ReductionRejected(ReductionCertificate cert);
  const ReductionCertificate& certificate() const { return cert_; }

 private:
  ReductionCertificate cert_;
};

/// Entry denominators, pivot minors of I - phi(s) and det phi(s) for every s.
std::vector<Exclusion> reduction_exclusions(const AlmostRep<Rational>& rep);

/// Smallest prime >= start dividing no numerator or denominator of an exclusion.
PrimeChoice select_good_prime(const AlmostRep<Rational>& rep, std::uint64_t start = 2);

struct Reduction {
  AlmostRep<Zp> rep;
  ReductionCertificate certificate;
};

/// Entrywise a/b -> a b^-1 mod p. Throws ReductionRejected (carrying the
/// certificate, with whatever ranks survive) if p divides an exclusion.
Reduction reduce_mod_p(const AlmostRep<Rational>& rep, std::uint64_t p);

/// Restriction of scalars applied elementwise.
AlmostRep<Rational> restrict_rep(const AlmostRep<NFElem>& rep);

}  // namespace rankwb
