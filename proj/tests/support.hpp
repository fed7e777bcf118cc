#pragma once

// Seeded generators shared by the unit tests and the acceptance suite.

#include <random>
#include <vector>

#include "rankwb/elimination.hpp"

namespace rankwb::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline Rational random_element(Rng& rng, const RationalField&) {
  return Rational(BigInt(uniform(rng, -9, 9)), BigInt(uniform(rng, 1, 4)));
}

inline Zp random_element(Rng& rng, const PrimeField& f) {
  return Zp::from_residue(static_cast<std::uint64_t>(uniform(rng, 0, static_cast<long>(f.characteristic()) - 1)),
                          f.characteristic());
}

inline NFElem random_element(Rng& rng, const NumberField& f) {
  std::vector<Rational> c;
  for (std::size_t i = 0; i < f.degree(); ++i) c.emplace_back(BigInt(uniform(rng, -5, 5)), BigInt(uniform(rng, 1, 3)));
  return f.from_coefficients(std::move(c));
}

/// Mostly-zero entries so products of random matrices have interesting ranks.
template <class F>
Matrix<typename F::Scalar> random_matrix(Rng& rng, const F& f, Index rows, Index cols, int zero_percent = 40) {
  auto m = zeros(f, rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j)
      if (uniform(rng, 0, 99) >= zero_percent) m(i, j) = random_element(rng, f);
  return m;
}

/// Random matrix of exactly the requested rank: product of an n x r and an r x n factor.
template <class F>
Matrix<typename F::Scalar> random_matrix_of_rank(Rng& rng, const F& f, Index n, Index r) {
  while (true) {
    auto a = random_matrix(rng, f, n, r, 0);
    auto b = random_matrix(rng, f, r, n, 0);
    auto m = mul(a, b);
    if (rank(m) == r) return m;
  }
}

template <class F>
Matrix<typename F::Scalar> random_invertible(Rng& rng, const F& f, Index n) {
  while (true) {
    auto m = random_matrix(rng, f, n, n, 20);
    if (is_invertible(m)) return m;
  }
}

/// Fisher-Yates permutation of {0..n-1}.
inline std::vector<std::size_t> random_permutation_images(Rng& rng, std::size_t n) {
  std::vector<std::size_t> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(img[i - 1], img[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(i) - 1))]);
  return img;
}

}  // namespace rankwb::testing
