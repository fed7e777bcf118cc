#include "rankwb/amplify.hpp"

#include <cstdlib>
#include <string>

namespace rankwb {

Index budget_from_env() {
  const char* env = std::getenv("RANKWB_BUDGET");
  if (!env || !*env) return kDefaultBudget;
  const std::string text(env);
  if (text.find_first_not_of("0123456789") != std::string::npos || text.size() > 12)
    throw InputError("RANKWB_BUDGET must be a positive integer");
  const auto v = static_cast<Index>(std::stoll(text));
  if (v <= 0) throw InputError("RANKWB_BUDGET must be a positive integer");
  return v;
}

Rational f_map(const Rational& x) {
  const Rational y = Rational(1) - x;
  return x * x + y * y;
}

Rational f_iterate(const Rational& x, int m) {
  if (x < Rational(BigInt(1), BigInt(2)) || x > Rational(1)) throw InputError("f_iterate: x must lie in [1/2, 1]");
  if (m < 0) throw InputError("f_iterate: negative iteration count");
  Rational r = x;
  for (int i = 0; i < m; ++i) r = f_map(r);
  return r;
}

std::optional<Index> tensor_level_dim(Index n, int m, Index limit) {
  Index d = n;
  for (int i = 1; i < m; ++i) {
    if (d != 0 && d > limit / d) return std::nullopt;
    d *= d;
  }
  if (d > limit) return std::nullopt;
  return d;
}

const char* to_string(BoundKind k) {
  switch (k) {
    case BoundKind::none:
      return "none";
    case BoundKind::multiplicity:
      return "multiplicity";
    case BoundKind::jordan:
      return "jordan";
  }
  return "?";
}

BoundChoice choose_bound(const Rational& m1, const std::optional<Rational>& j, const std::optional<Rational>& c) {
  const Rational half(BigInt(1), BigInt(2)), one(1);
  BoundChoice b;
  if (m1 > half && m1 < one) {
    b.kind = BoundKind::multiplicity;
    b.value = m1;
  } else if (m1 == one && j && *j < one) {
    b.kind = BoundKind::jordan;
    b.value = *j;
  } else {
    b.value = m1;
    return b;
  }
  if (c) {
    if (!(*c > b.value && *c < one && *c > half))
      throw InputError("bound constant " + c->str() + " must lie in (" + max(b.value, half).str() + ", 1)");
    b.c = *c;
  } else {
    b.c = (b.value + one) * half;
  }
  return b;
}

}  // namespace rankwb
