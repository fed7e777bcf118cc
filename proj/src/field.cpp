#include "rankwb/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>

#include "rankwb/primes.hpp"

namespace rankwb {

namespace {

constexpr std::uint64_t kMaxPrime = std::uint64_t{1} << 61;

using Poly = std::vector<Rational>;

void trim(Poly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

// a = q*b + r; b nonzero and trimmed.
void poly_divmod(Poly a, const Poly& b, Poly& q, Poly& r) {
  trim(a);
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational());
  const Rational lead_inv = b.back().inverse();
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const Rational f = a.back() * lead_inv;
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  r = std::move(a);
  trim(q);
}

Poly poly_gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly q, r;
    poly_divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly minpoly_as_poly(const NumberFieldData& d) {
  Poly m;
  m.reserve(d.minpoly.size());
  for (const auto& c : d.minpoly) m.emplace_back(c);
  return m;
}

// Reduces `c` in place modulo the monic minpoly and pads to exactly degree d.
void reduce_mod_minpoly(const NumberFieldData& d, Poly& c) {
  const std::size_t deg = d.degree;
  for (std::size_t k = c.size(); k-- > deg;) {
    if (c[k].is_zero()) continue;
    const Rational t = c[k];
    for (std::size_t i = 0; i < deg; ++i) {
      if (d.minpoly[i] != 0) c[k - deg + i] -= t * Rational(d.minpoly[i]);
    }
    c[k] = Rational();
  }
  c.resize(deg);
}

std::uint64_t join_modulus(const Zp& a, const Zp& b) {
  if (a.bound() && b.bound() && a.modulus() != b.modulus())
    throw FieldMismatch("F_" + std::to_string(a.modulus()) + " vs F_" + std::to_string(b.modulus()));
  return a.bound() ? a.modulus() : b.modulus();
}

const NumberFieldData* join_context(const NFElem& a, const NFElem& b) {
  if (a.bound() && b.bound() && a.context() != b.context())
    throw FieldMismatch("operands from different number fields");
  return a.bound() ? a.context() : b.context();
}

}  // namespace

// ---------------------------------------------------------------------------
// FieldSpec

FieldSpec FieldSpec::prime(std::uint64_t p) {
  FieldSpec s;
  s.kind = Kind::prime;
  s.p = p;
  return s;
}

FieldSpec FieldSpec::number_field(std::vector<BigInt> minpoly) {
  FieldSpec s;
  s.kind = Kind::number_field;
  s.minpoly = std::move(minpoly);
  return s;
}

std::string FieldSpec::str() const {
  switch (kind) {
    case Kind::rationals:
      return "Q";
    case Kind::prime:
      return "Fp:" + std::to_string(p);
    case Kind::number_field: {
      std::string out = "NF:";
      for (std::size_t i = 0; i < minpoly.size(); ++i) {
        if (i) out += ',';
        out += minpoly[i].get_str();
      }
      return out;
    }
  }
  return "?";
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.starts_with("Fp:")) {
    const std::string digits(text.substr(3));
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 19)
      throw InputError("malformed field '" + std::string(text) + "'");
    return prime(std::stoull(digits));
  }
  if (text.starts_with("NF:")) {
    std::vector<BigInt> coeffs;
    std::string rest(text.substr(3));
    std::stringstream ss(rest);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const Rational r = Rational::parse(item);
      if (r.den() != 1) throw InputError("minpoly coefficients must be integers");
      coeffs.push_back(r.num());
    }
    return number_field(std::move(coeffs));
  }
  throw InputError("unknown field '" + std::string(text) + "' (expected Q, Fp:<p> or NF:<c0,...,1>)");
}

void validate(const FieldSpec& spec) {
  switch (spec.kind) {
    case FieldSpec::Kind::rationals:
      return;
    case FieldSpec::Kind::prime:
      if (spec.p >= kMaxPrime) throw InputError("prime must be below 2^61");
      if (!is_prime(spec.p)) throw InputError(std::to_string(spec.p) + " is not prime");
      return;
    case FieldSpec::Kind::number_field:
      intern_number_field(spec.minpoly);
      return;
  }
}

// ---------------------------------------------------------------------------
// Zp

Zp Zp::bind(std::uint64_t p) const {
  if (bound()) {
    if (p_ != p) throw FieldMismatch("F_" + std::to_string(p_) + " vs F_" + std::to_string(p));
    return *this;
  }
  const std::int64_t lit = literal();
  std::uint64_t r;
  if (lit >= 0) {
    r = static_cast<std::uint64_t>(lit) % p;
  } else {
    const std::uint64_t m = (~static_cast<std::uint64_t>(lit) + 1) % p;
    r = m == 0 ? 0 : p - m;
  }
  return from_residue(r, p);
}

Zp Zp::inverse() const {
  if (!bound()) {
    if (literal() == 1 || literal() == -1) return *this;
    throw InputError("inverse of an unbound F_p literal");
  }
  if (raw_ == 0) throw InputError("inverse of zero in F_" + std::to_string(p_));
  return from_residue(pow_mod(raw_, p_ - 2, p_), p_);
}

Zp& Zp::operator+=(const Zp& o) {
  const std::uint64_t p = join_modulus(*this, o);
  if (p == 0) {
    raw_ = static_cast<std::uint64_t>(literal() + o.literal());
    return *this;
  }
  const std::uint64_t a = bind(p).raw_, b = o.bind(p).raw_;
  const std::uint64_t s = a + b;
  raw_ = s >= p ? s - p : s;
  p_ = p;
  return *this;
}

Zp& Zp::operator-=(const Zp& o) { return *this += -o; }

Zp& Zp::operator*=(const Zp& o) {
  const std::uint64_t p = join_modulus(*this, o);
  if (p == 0) {
    raw_ = static_cast<std::uint64_t>(literal() * o.literal());
    return *this;
  }
  raw_ = mul_mod(bind(p).raw_, o.bind(p).raw_, p);
  p_ = p;
  return *this;
}

Zp operator-(const Zp& a) {
  if (!a.bound()) return Zp(-a.literal());
  return Zp::from_residue(a.raw_ == 0 ? 0 : a.p_ - a.raw_, a.p_);
}

bool operator==(const Zp& a, const Zp& b) {
  if (a.bound() && b.bound() && a.p_ != b.p_) return false;
  const std::uint64_t p = a.bound() ? a.p_ : b.p_;
  if (p == 0) return a.raw_ == b.raw_;
  return a.bind(p).raw_ == b.bind(p).raw_;
}

std::ostream& operator<<(std::ostream& os, const Zp& z) {
  if (!z.bound()) return os << z.literal();
  return os << z.residue() << " (mod " << z.modulus() << ")";
}

// ---------------------------------------------------------------------------
// Number fields

const NumberFieldData* intern_number_field(const std::vector<BigInt>& minpoly) {
  if (minpoly.size() < 2) throw InputError("number field minpoly must have degree >= 1");
  if (minpoly.back() != 1) throw InputError("number field minpoly must be monic");
  Poly m;
  for (const auto& c : minpoly) m.emplace_back(c);
  Poly dm;
  for (std::size_t i = 1; i < m.size(); ++i) dm.push_back(m[i] * Rational(static_cast<long>(i)));
  trim(dm);
  if (poly_gcd(m, dm).size() != 1) throw InputError("number field minpoly must be squarefree");

  static std::mutex mu;
  static std::map<std::vector<BigInt>, std::unique_ptr<NumberFieldData>> registry;
  std::lock_guard lock(mu);
  auto& slot = registry[minpoly];
  if (!slot) {
    slot = std::make_unique<NumberFieldData>();
    slot->minpoly = minpoly;
    slot->degree = minpoly.size() - 1;
  }
  return slot.get();
}

NFElem::NFElem(const NumberFieldData* ctx, std::vector<Rational> coeffs) : ctx_(ctx), c_(std::move(coeffs)) {
  reduce_mod_minpoly(*ctx_, c_);
}

bool NFElem::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

NFElem NFElem::bind(const NumberFieldData* ctx) const {
  if (bound()) {
    if (ctx_ != ctx) throw FieldMismatch("operands from different number fields");
    return *this;
  }
  return NFElem(ctx, c_);
}

NFElem NFElem::inverse() const {
  if (is_zero()) throw InputError("inverse of zero in a number field");
  if (!bound()) {
    NFElem r;
    r.c_ = {c_[0].inverse()};
    return r;
  }
  // Extended Euclid: s*a + t*m = g, g a nonzero constant when a is a unit.
  Poly a = c_;
  trim(a);
  Poly m = minpoly_as_poly(*ctx_);
  Poly r0 = m, r1 = a;
  Poly s0, s1 = {Rational(1)};
  while (!r1.empty()) {
    Poly q, r;
    poly_divmod(r0, r1, q, r);
    Poly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) throw InputError("element is a zero divisor (minimal polynomial is reducible)");
  const Rational g_inv = r0[0].inverse();
  for (auto& c : s0) c *= g_inv;
  return NFElem(ctx_, std::move(s0));
}

NFElem& NFElem::operator+=(const NFElem& o) {
  const NumberFieldData* ctx = join_context(*this, o);
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  ctx_ = ctx;
  if (ctx_) {
    c_.resize(ctx_->degree);
  } else {
    trim(c_);
  }
  return *this;
}

NFElem& NFElem::operator-=(const NFElem& o) { return *this += -o; }

NFElem& NFElem::operator*=(const NFElem& o) {
  const NumberFieldData* ctx = join_context(*this, o);
  Poly prod = poly_mul(c_, o.c_);
  ctx_ = ctx;
  if (ctx_) {
    reduce_mod_minpoly(*ctx_, prod);
  } else {
    trim(prod);
  }
  c_ = std::move(prod);
  return *this;
}

NFElem operator-(const NFElem& a) {
  NFElem r = a;
  for (auto& c : r.c_) c = -c;
  return r;
}

bool operator==(const NFElem& a, const NFElem& b) {
  if (a.bound() && b.bound() && a.ctx_ != b.ctx_) return false;
  const std::size_t n = std::max(a.c_.size(), b.c_.size());
  for (std::size_t i = 0; i < n; ++i)
    if (a.coeff(i) != b.coeff(i)) return false;
  return true;
}

std::ostream& operator<<(std::ostream& os, const NFElem& a) {
  os << '[';
  const std::size_t n = a.bound() ? a.context()->degree : 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (i) os << ',';
    os << a.coeff(i);
  }
  return os << ']';
}

// ---------------------------------------------------------------------------
// Handles

PrimeField::PrimeField(std::uint64_t p) : p_(p) { validate(FieldSpec::prime(p)); }

Zp PrimeField::from_rational(const Rational& r) const {
  const BigInt p(std::to_string(p_), 10);
  BigInt num = r.num() % p;
  if (num < 0) num += p;
  BigInt den = r.den() % p;
  if (den == 0) throw InputError("denominator of " + r.str() + " vanishes mod " + std::to_string(p_));
  const Zp n = Zp::from_residue(std::stoull(num.get_str()), p_);
  const Zp d = Zp::from_residue(std::stoull(den.get_str()), p_);
  return n / d;
}

NumberField::NumberField(const std::vector<BigInt>& minpoly) : data_(intern_number_field(minpoly)) {}

NFElem NumberField::generator() const {
  std::vector<Rational> c(data_->degree);
  if (data_->degree == 1) {
    c[0] = -Rational(data_->minpoly[0]);
  } else {
    c[1] = Rational(1);
  }
  return NFElem(data_, std::move(c));
}

Field make_field(const FieldSpec& spec) {
  validate(spec);
  switch (spec.kind) {
    case FieldSpec::Kind::rationals:
      return RationalField{};
    case FieldSpec::Kind::prime:
      return PrimeField(spec.p);
    case FieldSpec::Kind::number_field:
      return NumberField(spec.minpoly);
  }
  throw InputError("unknown field kind");
}

}  // namespace rankwb
