#include "rankwb/permutation.hpp"

#include <numeric>

namespace rankwb {

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t v : images_) {
    if (v >= images_.size() || seen[v]) throw InputError("permutation images must form a bijection of {0..n-1}");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> img(n);
  std::iota(img.begin(), img.end(), std::size_t{0});
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw InputError("composing permutations of different degree");
  std::vector<std::size_t> img(p.size());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = p(q(i));
  return Permutation(std::move(img));
}

Rational hamming_distance(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw InputError("hamming_distance: degree mismatch");
  if (p.size() == 0) return Rational(0);
  long moved = 0;
  for (std::size_t i = 0; i < p.size(); ++i) moved += p(i) != q(i);
  return Rational(BigInt(moved), BigInt(static_cast<unsigned long>(p.size())));
}

CycleCounts cycle_and_fix_counts(const Permutation& p) {
  CycleCounts c;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    ++c.cycles;
    if (p(i) == i) ++c.fixed;
    for (std::size_t j = i; !seen[j]; j = p(j)) seen[j] = true;
  }
  return c;
}

}  // namespace rankwb
