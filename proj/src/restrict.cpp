#include "rankwb/restrict.hpp"

namespace rankwb {

Matrix<Rational> multiplication_matrix(const NumberField& field, const NFElem& a) {
  const auto e = static_cast<Index>(field.degree());
  const NFElem x = field.generator();
  NFElem basis = field.one();
  const NFElem alpha = field.bind(a);
  Matrix<Rational> out(e, e);
  for (Index j = 0; j < e; ++j) {
    const NFElem col = alpha * basis;
    for (Index i = 0; i < e; ++i) out(i, j) = col.coeff(static_cast<std::size_t>(i));
    basis *= x;
  }
  return out;
}

Matrix<Rational> restrict_scalars(const NumberField& field, const Matrix<NFElem>& m) {
  require_square(m, "restrict_scalars");
  const auto e = static_cast<Index>(field.degree());
  Matrix<Rational> out(m.rows() * e, m.cols() * e);
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) out.block(i * e, j * e, e, e) = multiplication_matrix(field, m(i, j));
  return out;
}

}  // namespace rankwb
