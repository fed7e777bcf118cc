#pragma once

// Eigenvalue structure at a caller-supplied lambda, read off from the ranks of
// powers of (A - lambda I). Nothing here factors a characteristic polynomial.

#include <algorithm>
#include <vector>

#include "rankwb/elimination.hpp"

namespace rankwb {

template <class S>
Matrix<S> shifted(const Matrix<S>& a, const S& lambda) {
  require_square(a, "shifted");
  Matrix<S> b = a;
  for (Index i = 0; i < a.rows(); ++i) b(i, i) -= lambda;
  return b;
}

/// Algebraic multiplicity of lambda: n - rank((A - lambda I)^k) once k >= n.
/// Repeated squaring stops as soon as the rank stabilises.
template <class S>
Index algebraic_multiplicity_count(const Matrix<S>& a, const S& lambda) {
  Matrix<S> b = shifted(a, lambda);
  const Index n = a.rows();
  Index r = rank(b);
  for (Index k = 1; k < n && r > 0; k *= 2) {
    b = mul(b, b);
    const Index next = rank(b);
    if (next == r) break;
    r = next;
  }
  return n - r;
}

/// M_lambda(A) = multiplicity / n.
template <class S>
Rational algebraic_multiplicity(const Matrix<S>& a, const S& lambda) {
  require_square(a, "algebraic_multiplicity");
  if (a.rows() == 0) return Rational(0);
  return Rational(BigInt(static_cast<long>(algebraic_multiplicity_count(a, lambda))),
                  BigInt(static_cast<long>(a.rows())));
}

template <class S>
struct JordanProfile {
  S eigenvalue;
  /// Block sizes, descending.
  std::vector<Index> blocks;
  /// rank((A - lambda I)^k) for k = 0, 1, ... until it stabilises.
  std::vector<Index> rank_sequence;
  Index n = 0;

  Index multiplicity() const {
    Index s = 0;
    for (Index b : blocks) s += b;
    return s;
  }
  /// Number of blocks divided by n (J(A) when lambda = 1 and A is unipotent).
  Rational block_fraction() const {
    return n == 0 ? Rational(0) : Rational(BigInt(static_cast<long>(blocks.size())), BigInt(static_cast<long>(n)));
  }
};

template <class S>
JordanProfile<S> jordan_profile_at(const Matrix<S>& a, const S& lambda) {
  require_square(a, "jordan_profile_at");
  JordanProfile<S> p{lambda, {}, {a.rows()}, a.rows()};
  const Matrix<S> b = shifted(a, lambda);
  Matrix<S> power = b;
  while (true) {
    const Index r = rank(power);
    const bool stable = r == p.rank_sequence.back();
    if (!stable) p.rank_sequence.push_back(r);
    if (stable || r == 0) break;
    power = mul(power, b);
  }
  // at_least[k] = #blocks of size >= k+1 = r_k - r_{k+1}
  const auto& rs = p.rank_sequence;
  std::vector<Index> at_least;
  for (std::size_t k = 0; k + 1 < rs.size(); ++k) at_least.push_back(rs[k] - rs[k + 1]);
  for (std::size_t k = 0; k < at_least.size(); ++k) {
    const Index exactly = at_least[k] - (k + 1 < at_least.size() ? at_least[k + 1] : 0);
    for (Index c = 0; c < exactly; ++c) p.blocks.push_back(static_cast<Index>(k + 1));
  }
  std::sort(p.blocks.begin(), p.blocks.end(), std::greater<>());
  return p;
}

/// J(A) for unipotent A (M_1(A) = 1); throws InputError otherwise.
template <class S>
Rational jordan_fraction(const Matrix<S>& a) {
  const auto profile = jordan_profile_at(a, S(1));
  if (profile.multiplicity() != a.rows()) throw InputError("jordan_fraction: matrix is not unipotent");
  return profile.block_fraction();
}

/// Predicted block sizes of J(a, s) (x) J(b, t): s+t-1, s+t-3, ..., |t-s|+1.
std::vector<Index> jordan_tensor_blocks(Index s, Index t);

template <class S>
struct JordanTensorCheck {
  bool holds = false;
  std::vector<Index> predicted;
  JordanProfile<S> computed;
};

/// Builds J(alpha, s) (x) J(beta, t) and compares its profile at alpha*beta with
/// the tensor decomposition theorem. Valid in characteristic 0 or p > s + t - 2.
template <class F>
JordanTensorCheck<typename F::Scalar> verify_jordan_tensor(const F& field, const typename F::Scalar& alpha, Index s,
                                                           const typename F::Scalar& beta, Index t) {
  const auto a = field.bind(alpha), b = field.bind(beta);
  if (a.is_zero() || b.is_zero()) throw InputError("verify_jordan_tensor: eigenvalues must be nonzero");
  auto predicted = jordan_tensor_blocks(s, t);
  const auto product = tensor(jordan_block(field, a, s), jordan_block(field, b, t));
  auto computed = jordan_profile_at(product, field.mul(a, b));
  const bool holds = computed.blocks == predicted && computed.multiplicity() == product.rows();
  return {holds, std::move(predicted), std::move(computed)};
}

}  // namespace rankwb
