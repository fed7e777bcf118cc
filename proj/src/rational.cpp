#include "rankwb/rational.hpp"

#include <ostream>

#include "rankwb/errors.hpp"

namespace rankwb {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InputError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto valid_int = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto to_int = [](std::string_view s) {
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    return BigInt(std::string(s), 10);
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!valid_int(text)) throw InputError("malformed rational '" + std::string(text) + "'");
    return Rational(to_int(text));
  }
  const auto n = text.substr(0, slash);
  const auto d = text.substr(slash + 1);
  if (!valid_int(n) || !valid_int(d) || d[0] == '-')
    throw InputError("malformed rational '" + std::string(text) + "'");
  return Rational(to_int(n), to_int(d));
}

Rational Rational::inverse() const {
  if (is_zero()) throw InputError("inverse of zero");
  Rational r;
  mpq_inv(r.q_.get_mpq_t(), q_.get_mpq_t());
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InputError("division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace rankwb
