#pragma once

// The bundled corpus: small exact representations that the demo, the tests and
// the JSON files under corpus/ all share.

#include <string>
#include <vector>

#include "rankwb/constructions.hpp"

namespace rankwb::corpus {

/// {-1, 0, 1} inside Z, identity "0", with 1 + (-1) = (-1) + 1 = 0.
GroupTable integer_fragment();

AlmostRep<Rational> z2_regular();
AlmostRep<Rational> z3_regular();
/// Z/2 acting by diag(1, -1).
AlmostRep<Rational> sign();
/// k -> [[1, k], [0, 1]] on the integer fragment.
AlmostRep<Rational> unipotent();
/// k -> [[1, k/6], [0, 1]] on the integer fragment.
AlmostRep<Rational> den6();
/// k -> 2^k I_2 on {0, 1} (no products beyond the identity ones).
AlmostRep<Rational> powers_of_two();
/// Z/4 acting on Q(i) by multiplication with i, as a 1x1 representation.
AlmostRep<NFElem> gaussian_rotation();

struct NamedRep {
  std::string name;
  AlmostRep<Rational> rep;
};

/// Every rational corpus representation, in a fixed order.
std::vector<NamedRep> rational_reps();

/// Z with H = 2Z and Q = Z/2, lift 0 -> 0, 1 -> 1, on the fragment {0, 1, 2}.
ExtensionData z2_extension();
/// 2m -> [[1, m], [0, 1]] on the H labels {0, 2}.
AlmostRep<Rational> z2_extension_h_rep();

/// The same matrices with entries mapped into `field` (throws InputError when a
/// denominator vanishes there).
template <class F>
AlmostRep<typename F::Scalar> over(const F& field, const AlmostRep<Rational>& rep) {
  std::vector<Matrix<typename F::Scalar>> mats;
  for (const auto& m : rep.matrices()) {
    Matrix<typename F::Scalar> out(m.rows(), m.cols());
    for (Index i = 0; i < m.rows(); ++i)
      for (Index j = 0; j < m.cols(); ++j) out(i, j) = field.from_rational(m(i, j));
    mats.push_back(std::move(out));
  }
  return AlmostRep<typename F::Scalar>(rep.table(), field, std::move(mats));
}

}  // namespace rankwb::corpus
