#include "rankwb/reduce.hpp"

#include "rankwb/primes.hpp"
#include "rankwb/restrict.hpp"

namespace rankwb {

namespace {

bool divides(std::uint64_t p, const Rational& r) {
  const BigInt bp(std::to_string(p), 10);
  return mpz_divisible_p(r.num().get_mpz_t(), bp.get_mpz_t()) != 0 ||
         mpz_divisible_p(r.den().get_mpz_t(), bp.get_mpz_t()) != 0;
}

std::optional<Matrix<Zp>> reduce_matrix(const Matrix<Rational>& m, const PrimeField& f) {
  Matrix<Zp> out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) {
      if (divides(f.characteristic(), Rational(m(i, j).den()))) return std::nullopt;
      out(i, j) = f.from_rational(m(i, j));
    }
  return out;
}

}  // namespace

const char* to_string(Exclusion::Kind k) {
  switch (k) {
    case Exclusion::Kind::denominator:
      return "denominator";
    case Exclusion::Kind::minor_determinant:
      return "minor_determinant";
    case Exclusion::Kind::determinant:
      return "determinant";
  }
  return "?";
}

ReductionRejected::ReductionRejected(ReductionCertificate cert)
    : Error("prime " + std::to_string(cert.p) + " divides an excluded value"), cert_(std::move(cert)) {}

std::vector<Exclusion> reduction_exclusions(const AlmostRep<Rational>& rep) {
  std::vector<Exclusion> out;
  const auto id = identity(rep.field(), rep.dim());
  for (GroupTable::Id s = 0; s < rep.table().size(); ++s) {
    const auto& m = rep[s];
    BigInt l = 1;
    for (Index i = 0; i < m.rows(); ++i)
      for (Index j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).gmp().get_den_mpz_t());
    if (l != 1) out.push_back({Exclusion::Kind::denominator, s, Rational(l)});
    const Matrix<Rational> diff = id - m;
    const auto minor = find_full_rank_minor(diff, rank(diff));
    if (minor.det != Rational(1) && minor.det != Rational(-1))
      out.push_back({Exclusion::Kind::minor_determinant, s, minor.det});
    const Rational det = determinant(m);
    if (det != Rational(1) && det != Rational(-1)) out.push_back({Exclusion::Kind::determinant, s, det});
  }
  return out;
}

PrimeChoice select_good_prime(const AlmostRep<Rational>& rep, std::uint64_t start) {
  PrimeChoice c;
  c.exclusions = reduction_exclusions(rep);
  for (std::uint64_t p = next_prime(std::max<std::uint64_t>(start, 2));; p = next_prime(p + 1)) {
    std::optional<std::size_t> hit;
    for (std::size_t i = 0; i < c.exclusions.size() && !hit; ++i)
      if (divides(p, c.exclusions[i].value)) hit = i;
    if (!hit) {
      c.p = p;
      return c;
    }
    c.rejected.emplace_back(p, *hit);
  }
}

Reduction reduce_mod_p(const AlmostRep<Rational>& rep, std::uint64_t p) {
  const PrimeField f(p);
  ReductionCertificate cert;
  cert.p = p;
  cert.exclusions = reduction_exclusions(rep);
  for (std::size_t i = 0; i < cert.exclusions.size(); ++i)
    if (divides(p, cert.exclusions[i].value)) cert.violated.push_back(i);

  const auto id_q = identity(rep.field(), rep.dim());
  const auto id_p = identity(f, rep.dim());
  std::vector<std::optional<Matrix<Zp>>> reduced;
  cert.ranks_preserved = true;
  cert.invertible = true;
  for (GroupTable::Id s = 0; s < rep.table().size(); ++s) {
    reduced.push_back(reduce_matrix(rep[s], f));
    const Matrix<Rational> diff = id_q - rep[s];
    RankRow row{s, rank(diff), std::nullopt, find_full_rank_minor(diff, rank(diff)).det, false};
    if (reduced.back()) {
      row.rank_after = rank(Matrix<Zp>(id_p - *reduced.back()));
      row.invertible_after = is_invertible(*reduced.back());
    }
    cert.ranks_preserved = cert.ranks_preserved && row.rank_after == row.rank_before;
    cert.invertible = cert.invertible && row.invertible_after;
    cert.ranks.push_back(row);
  }
  bool computable = true, monotone = true;
  Rational after(0);
  for (const auto& t : rep.table().defined_triples()) {
    PairRow row{t.g, t.h, t.gh, rank_distance(mul(rep[t.g], rep[t.h]), rep[t.gh]), std::nullopt};
    cert.defect_before = max(cert.defect_before, row.defect_before);
    if (reduced[t.g] && reduced[t.h] && reduced[t.gh]) {
      row.defect_after = rank_distance(mul(*reduced[t.g], *reduced[t.h]), *reduced[t.gh]);
      after = max(after, *row.defect_after);
      monotone = monotone && *row.defect_after <= row.defect_before;
    } else {
      computable = false;
    }
    cert.pairs.push_back(row);
  }
  cert.defect_monotone = computable && monotone;
  if (computable) cert.defect_after = after;
  cert.valid = cert.violated.empty() && cert.ranks_preserved && cert.invertible && cert.defect_monotone;
  if (!cert.violated.empty()) throw ReductionRejected(std::move(cert));
  if (!cert.valid) throw Error("reduction certificate failed without a violated exclusion");

  std::vector<Matrix<Zp>> mats;
  for (auto& m : reduced) mats.push_back(std::move(*m));
  return {AlmostRep<Zp>(rep.table(), f, std::move(mats)), std::move(cert)};
}

AlmostRep<Rational> restrict_rep(const AlmostRep<NFElem>& rep) {
  std::vector<Matrix<Rational>> mats;
  for (GroupTable::Id g = 0; g < rep.table().size(); ++g) mats.push_back(restrict_scalars(rep.field(), rep[g]));
  return AlmostRep<Rational>(rep.table(), RationalField{}, std::move(mats));
}

}  // namespace rankwb
