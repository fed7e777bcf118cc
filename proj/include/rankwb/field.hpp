#pragma once

// Exact scalar fields: the rationals, prime fields F_p (p < 2^61) and number
// fields Q[x]/(m) for a monic squarefree integer polynomial m.
//
// Scalars of F_p and Q[x]/(m) carry their modulus / minimal polynomial so that
// they can be dropped into Eigen containers. A scalar built from a bare integer
// literal (which is what Eigen does for Scalar(0) and Scalar(1)) is "unbound":
// it behaves like that integer and adopts the field of whatever it meets.

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rankwb/errors.hpp"
#include "rankwb/rational.hpp"

namespace rankwb {

struct FieldSpec {
  enum class Kind { rationals, prime, number_field };

  Kind kind = Kind::rationals;
  std::uint64_t p = 0;
  /// Coefficients low-to-high, leading 1 included.
  std::vector<BigInt> minpoly;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(std::uint64_t p);
  static FieldSpec number_field(std::vector<BigInt> minpoly);

  /// "Q", "Fp:101" or "NF:1,0,1".
  static FieldSpec parse(std::string_view text);
  std::string str() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Throws InputError unless the spec names an actual field we support.
void validate(const FieldSpec& spec);

// ---------------------------------------------------------------------------
// F_p scalars

class Zp {
 public:
  Zp() = default;
  template <std::integral T>
  Zp(T literal)  // NOLINT: implicit for Eigen literals
      : raw_(static_cast<std::uint64_t>(static_cast<std::int64_t>(literal))) {}

  /// Bound residue; `residue` must already lie in [0, p).
  static Zp from_residue(std::uint64_t residue, std::uint64_t p) {
    Zp z;
    z.raw_ = residue;
    z.p_ = p;
    return z;
  }

  bool bound() const { return p_ != 0; }
  std::uint64_t modulus() const { return p_; }
  /// Residue in [0, p) for bound values; the literal for unbound ones.
  std::uint64_t residue() const { return raw_; }
  std::int64_t literal() const { return static_cast<std::int64_t>(raw_); }
  bool is_zero() const { return raw_ == 0; }

  Zp bind(std::uint64_t p) const;
  Zp inverse() const;

  Zp& operator+=(const Zp& o);
  Zp& operator-=(const Zp& o);
  Zp& operator*=(const Zp& o);
  Zp& operator/=(const Zp& o) { return *this *= o.inverse(); }

  friend Zp operator+(Zp a, const Zp& b) { return a += b; }
  friend Zp operator-(Zp a, const Zp& b) { return a -= b; }
  friend Zp operator*(Zp a, const Zp& b) { return a *= b; }
  friend Zp operator/(Zp a, const Zp& b) { return a /= b; }
  friend Zp operator-(const Zp& a);
  friend bool operator==(const Zp& a, const Zp& b);

 private:
  std::uint64_t raw_ = 0;
  std::uint64_t p_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Zp& z);

// ---------------------------------------------------------------------------
// Number field scalars

/// Interned description of Q[x]/(m). Instances live for the whole program.
struct NumberFieldData {
  std::vector<BigInt> minpoly;
  std::size_t degree = 0;
};

class NFElem {
 public:
  NFElem() = default;
  template <std::integral T>
  NFElem(T literal) {  // NOLINT: implicit for Eigen literals
    if (literal != 0) c_.emplace_back(literal);
  }
  /// Bound element; `coeffs` (low-to-high) is reduced modulo the minimal polynomial.
  NFElem(const NumberFieldData* ctx, std::vector<Rational> coeffs);

  bool bound() const { return ctx_ != nullptr; }
  const NumberFieldData* context() const { return ctx_; }
  /// Coefficient of x^i (zero past the stored length).
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(); }
  bool is_zero() const;

  NFElem bind(const NumberFieldData* ctx) const;
  /// Throws InputError for zero and for zero divisors (reducible minpoly).
  NFElem inverse() const;

  NFElem& operator+=(const NFElem& o);
  NFElem& operator-=(const NFElem& o);
  NFElem& operator*=(const NFElem& o);
  NFElem& operator/=(const NFElem& o) { return *this *= o.inverse(); }

  friend NFElem operator+(NFElem a, const NFElem& b) { return a += b; }
  friend NFElem operator-(NFElem a, const NFElem& b) { return a -= b; }
  friend NFElem operator*(NFElem a, const NFElem& b) { return a *= b; }
  friend NFElem operator/(NFElem a, const NFElem& b) { return a /= b; }
  friend NFElem operator-(const NFElem& a);
  friend bool operator==(const NFElem& a, const NFElem& b);

 private:
  const NumberFieldData* ctx_ = nullptr;
  std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const NFElem& a);

/// Interns Q[x]/(minpoly); validates monic + squarefree.
const NumberFieldData* intern_number_field(const std::vector<BigInt>& minpoly);

// ---------------------------------------------------------------------------
// Field handles

template <class Derived, class S>
class FieldOps {
 public:
  using Scalar = S;
  Scalar add(const Scalar& a, const Scalar& b) const { return a + b; }
  Scalar sub(const Scalar& a, const Scalar& b) const { return a - b; }
  Scalar mul(const Scalar& a, const Scalar& b) const { return a * b; }
  Scalar div(const Scalar& a, const Scalar& b) const { return a / b; }
  Scalar neg(const Scalar& a) const { return -a; }
  Scalar inverse(const Scalar& a) const { return a.inverse(); }
  bool equal(const Scalar& a, const Scalar& b) const { return a == b; }
  Scalar zero() const { return self().from_int(0); }
  Scalar one() const { return self().from_int(1); }

 private:
  const Derived& self() const { return static_cast<const Derived&>(*this); }
};

class RationalField : public FieldOps<RationalField, Rational> {
 public:
  FieldSpec spec() const { return FieldSpec::rationals(); }
  std::size_t degree() const { return 1; }
  Rational from_int(std::int64_t v) const { return Rational(v); }
  Rational from_rational(const Rational& r) const { return r; }
  Rational bind(const Rational& r) const { return r; }
  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

class PrimeField : public FieldOps<PrimeField, Zp> {
 public:
  explicit PrimeField(std::uint64_t p);
  FieldSpec spec() const { return FieldSpec::prime(p_); }
  std::uint64_t characteristic() const { return p_; }
  std::size_t degree() const { return 1; }
  Zp from_int(std::int64_t v) const { return Zp(v).bind(p_); }
  /// Throws InputError when p divides the denominator.
  Zp from_rational(const Rational& r) const;
  Zp bind(const Zp& z) const { return z.bind(p_); }
  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint64_t p_;
};

class NumberField : public FieldOps<NumberField, NFElem> {
 public:
  explicit NumberField(const std::vector<BigInt>& minpoly);
  FieldSpec spec() const { return FieldSpec::number_field(data_->minpoly); }
  std::size_t degree() const { return data_->degree; }
  const NumberFieldData* data() const { return data_; }
  NFElem from_int(std::int64_t v) const { return NFElem(data_, {Rational(v)}); }
  NFElem from_rational(const Rational& r) const { return NFElem(data_, {r}); }
  NFElem from_coefficients(std::vector<Rational> c) const { return NFElem(data_, std::move(c)); }
  /// The class of x.
  NFElem generator() const;
  NFElem bind(const NFElem& a) const { return a.bind(data_); }
  friend bool operator==(const NumberField& a, const NumberField& b) { return a.data_ == b.data_; }

 private:
  const NumberFieldData* data_;
};

using Field = std::variant<RationalField, PrimeField, NumberField>;

/// Validates `spec` and returns the matching handle.
Field make_field(const FieldSpec& spec);

template <class S>
struct field_of;
template <>
struct field_of<Rational> { using type = RationalField; };
template <>
struct field_of<Zp> { using type = PrimeField; };
template <>
struct field_of<NFElem> { using type = NumberField; };

template <class S>
using field_t = typename field_of<S>::type;

}  // namespace rankwb
