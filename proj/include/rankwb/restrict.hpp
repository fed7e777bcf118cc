#pragma once

#include "rankwb/matrix.hpp"

namespace rankwb {

/// e x e rational matrix of multiplication by `a` in the basis 1, x, ..., x^(e-1).
Matrix<Rational> multiplication_matrix(const NumberField& field, const NFElem& a);

/// Replaces every entry of an n x n matrix over Q[x]/(m) by its multiplication
/// matrix, giving an en x en rational matrix. For irreducible m this is an
/// injective ring homomorphism and rank(output) = e * rank(m).
Matrix<Rational> restrict_scalars(const NumberField& field, const Matrix<NFElem>& m);

}  // namespace rankwb
