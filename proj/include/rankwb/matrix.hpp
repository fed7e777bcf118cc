#pragma once

// Dense exact matrices. Storage is Eigen's dynamic matrix over one of the exact
// scalar types; all algebra that matters (products, Kronecker products, ranks)
// goes through the free functions here and in elimination.hpp, which skip zero
// entries and never compare against tolerances.

#include <Eigen/Core>

#include <initializer_list>
#include <type_traits>
#include <vector>

#include "rankwb/errors.hpp"
#include "rankwb/field.hpp"

namespace Eigen {

template <class T>
struct ExactNumTraits {
  using Real = T;
  using NonInteger = T;
  using Literal = T;
  using Nested = T;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8
  };
  static T epsilon() { return T(0); }
  static T dummy_precision() { return T(0); }
  static T highest() { return T(0); }
  static T lowest() { return T(0); }
  static int digits10() { return 0; }
};

template <>
struct NumTraits<rankwb::Rational> : ExactNumTraits<rankwb::Rational> {};
template <>
struct NumTraits<rankwb::Zp> : ExactNumTraits<rankwb::Zp> {};
template <>
struct NumTraits<rankwb::NFElem> : ExactNumTraits<rankwb::NFElem> {};

}  // namespace Eigen

namespace rankwb {

using Index = Eigen::Index;

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

template <class S>
concept ExactScalar = std::is_same_v<S, Rational> || std::is_same_v<S, Zp> || std::is_same_v<S, NFElem>;

// ---------------------------------------------------------------------------
// Construction

template <class F>
Matrix<typename F::Scalar> zeros(const F& field, Index rows, Index cols) {
  Matrix<typename F::Scalar> m(rows, cols);
  m.fill(field.zero());
  return m;
}

template <class F>
Matrix<typename F::Scalar> identity(const F& field, Index n) {
  auto m = zeros(field, n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

template <class F>
Matrix<typename F::Scalar> scalar_matrix(const F& field, const typename F::Scalar& s, Index n) {
  auto m = zeros(field, n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = field.bind(s);
  return m;
}

template <class F>
Matrix<typename F::Scalar> diagonal(const F& field, const std::vector<typename F::Scalar>& d) {
  const auto n = static_cast<Index>(d.size());
  auto m = zeros(field, n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = field.bind(d[static_cast<std::size_t>(i)]);
  return m;
}

/// J(alpha, s): alpha on the diagonal, ones on the superdiagonal.
template <class F>
Matrix<typename F::Scalar> jordan_block(const F& field, const typename F::Scalar& alpha, Index s) {
  auto m = scalar_matrix(field, alpha, s);
  for (Index i = 0; i + 1 < s; ++i) m(i, i + 1) = field.one();
  return m;
}

/// Small integer matrices, mostly for tests and the bundled corpus.
template <class F>
Matrix<typename F::Scalar> from_integers(const F& field,
                                         std::initializer_list<std::initializer_list<long long>> rows) {
  const auto r = static_cast<Index>(rows.size());
  const auto c = r == 0 ? Index{0} : static_cast<Index>(rows.begin()->size());
  auto m = zeros(field, r, c);
  Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Index>(row.size()) != c) throw InputError("ragged integer matrix");
    Index j = 0;
    for (long long v : row) m(i, j++) = field.from_int(v);
    ++i;
  }
  return m;
}

/// Rebinds every entry to `field` (turns Eigen-created literals into field elements).
template <class F>
Matrix<typename F::Scalar> bind(const F& field, Matrix<typename F::Scalar> m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) m(i, j) = field.bind(m(i, j));
  return m;
}

// ---------------------------------------------------------------------------
// Structure

namespace detail {
Matrix<Zp> mul_zp(const Matrix<Zp>& a, const Matrix<Zp>& b);
}

template <class S>
void require_square(const Matrix<S>& m, const char* what) {
  if (m.rows() != m.cols()) throw InputError(std::string(what) + ": matrix must be square");
}

template <class S>
void require_same_shape(const Matrix<S>& a, const Matrix<S>& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError(std::string(what) + ": size mismatch");
}

template <class S>
bool is_zero_matrix(const Matrix<S>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) return false;
  return true;
}

/// Size-aware exact equality.
template <class S>
bool equal(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

/// Throws FieldMismatch if the two matrices carry scalars of different fields.
template <class S>
void require_same_field(const Matrix<S>& a, const Matrix<S>& b) {
  if constexpr (!std::is_same_v<S, Rational>) {
    auto first_bound = [](const Matrix<S>& m) -> const S* {
      for (Index j = 0; j < m.cols(); ++j)
        for (Index i = 0; i < m.rows(); ++i)
          if (m(i, j).bound()) return &m(i, j);
      return nullptr;
    };
    const S* x = first_bound(a);
    const S* y = first_bound(b);
    if (x && y) {
      S probe = *x;
      probe += *y;  // throws FieldMismatch on disagreement
    }
  }
}

template <class S>
Matrix<S> mul(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.cols() != b.rows()) throw InputError("mul: inner dimensions differ");
  if constexpr (std::is_same_v<S, Zp>) {
    return detail::mul_zp(a, b);
  } else {
    Matrix<S> c(a.rows(), b.cols());
    for (Index j = 0; j < b.cols(); ++j) {
      for (Index k = 0; k < a.cols(); ++k) {
        const S& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        for (Index i = 0; i < a.rows(); ++i) {
          const S& aik = a(i, k);
          if (!aik.is_zero()) c(i, j) += aik * bkj;
        }
      }
    }
    return c;
  }
}

template <class S>
Matrix<S> power(const Matrix<S>& a, unsigned long long k) {
  require_square(a, "power");
  Matrix<S> result = Matrix<S>::Identity(a.rows(), a.cols());
  Matrix<S> base = a;
  while (k) {
    if (k & 1) result = mul(result, base);
    k >>= 1;
    if (k) base = mul(base, base);
  }
  return result;
}

/// Kronecker product; entry (i,j) of `a` scales the block copy of `b`.
template <class S>
Matrix<S> tensor(const Matrix<S>& a, const Matrix<S>& b) {
  require_same_field(a, b);
  const Index br = b.rows(), bc = b.cols();
  Matrix<S> out(a.rows() * br, a.cols() * bc);
  for (Index j = 0; j < a.cols(); ++j) {
    for (Index i = 0; i < a.rows(); ++i) {
      const S& aij = a(i, j);
      if (aij.is_zero()) continue;
      for (Index l = 0; l < bc; ++l)
        for (Index k = 0; k < br; ++k)
          if (!b(k, l).is_zero()) out(i * br + k, j * bc + l) = aij * b(k, l);
    }
  }
  return out;
}

/// a ⊗ a ⊗ ... ⊗ a (k >= 1 factors).
template <class S>
Matrix<S> tensor_power(const Matrix<S>& a, int k) {
  if (k < 1) throw InputError("tensor_power: exponent must be >= 1");
  Matrix<S> out = a;
  for (int i = 1; i < k; ++i) out = tensor(out, a);
  return out;
}

/// Block diagonal diag(a, b).
template <class S>
Matrix<S> direct_sum(const Matrix<S>& a, const Matrix<S>& b) {
  require_same_field(a, b);
  Matrix<S> out(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

template <class S>
Matrix<S> commutator_with_inverses(const Matrix<S>& a, const Matrix<S>& a_inv, const Matrix<S>& b,
                                   const Matrix<S>& b_inv) {
  return mul(mul(a, b), mul(a_inv, b_inv));
}

}  // namespace rankwb
