#pragma once

#include <cstddef>
#include <vector>

#include "rankwb/matrix.hpp"

namespace rankwb {

/// Bijection of {0, ..., n-1}; acts on the left, so (p * q)(i) = p(q(i)).
class Permutation {
 public:
  Permutation() = default;
  /// Throws InputError unless `images` is a bijection.
  explicit Permutation(std::vector<std::size_t> images);
  static Permutation identity(std::size_t n);

  std::size_t size() const { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::size_t>& images() const { return images_; }
  bool is_identity() const;
  Permutation inverse() const;

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> images_;
};

/// |{i : p(i) != q(i)}| / n.
Rational hamming_distance(const Permutation& p, const Permutation& q);

struct CycleCounts {
  std::size_t cycles = 0;  // fixed points included
  std::size_t fixed = 0;
};

CycleCounts cycle_and_fix_counts(const Permutation& p);

/// A_p with A_p e_i = e_{p(i)}; A_{pq} = A_p A_q.
template <class F>
Matrix<typename F::Scalar> permutation_matrix(const Permutation& p, const F& field) {
  const auto n = static_cast<Index>(p.size());
  auto m = zeros(field, n, n);
  for (Index i = 0; i < n; ++i) m(static_cast<Index>(p(static_cast<std::size_t>(i))), i) = field.one();
  return m;
}

}  // namespace rankwb
