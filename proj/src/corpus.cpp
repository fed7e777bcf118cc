#include "rankwb/corpus.hpp"

namespace rankwb::corpus {

namespace {

const RationalField Q;

Matrix<Rational> upper(const Rational& k) {
  auto m = identity(Q, 2);
  m(0, 1) = k;
  return m;
}

AlmostRep<Rational> on_integer_fragment(const Rational& scale) {
  return AlmostRep<Rational>(integer_fragment(), Q,
                             {upper(Rational(-1) * scale), identity(Q, 2), upper(scale)});
}

}  // namespace

GroupTable integer_fragment() {
  GroupTable t({"-1", "0", "1"}, "0");
  t.set_product("1", "-1", "0");
  t.set_product("-1", "1", "0");
  t.set_inverse("1", "-1");
  t.set_inverse("-1", "1");
  t.validate();
  return t;
}

AlmostRep<Rational> z2_regular() { return regular_rep(GroupTable::cyclic(2), Q); }

AlmostRep<Rational> z3_regular() { return regular_rep(GroupTable::cyclic(3), Q); }

AlmostRep<Rational> sign() {
  return AlmostRep<Rational>(GroupTable::cyclic(2), Q, {identity(Q, 2), diagonal(Q, {Rational(1), Rational(-1)})});
}

AlmostRep<Rational> unipotent() { return on_integer_fragment(Rational(1)); }

AlmostRep<Rational> den6() { return on_integer_fragment(Rational(BigInt(1), BigInt(6))); }

AlmostRep<Rational> powers_of_two() {
  return AlmostRep<Rational>(GroupTable({"0", "1"}, "0"), Q, {identity(Q, 2), scalar_matrix(Q, Rational(2), 2)});
}

AlmostRep<NFElem> gaussian_rotation() {
  const NumberField f({BigInt(1), BigInt(0), BigInt(1)});
  const auto i = f.generator();
  std::vector<Matrix<NFElem>> mats;
  NFElem power = f.one();
  for (int k = 0; k < 4; ++k) {
    Matrix<NFElem> m(1, 1);
    m(0, 0) = power;
    mats.push_back(std::move(m));
    power *= i;
  }
  return AlmostRep<NFElem>(GroupTable::cyclic(4), f, std::move(mats));
}

std::vector<NamedRep> rational_reps() {
  return {{"z2", z2_regular()},       {"z3", z3_regular()}, {"sign", sign()},
          {"unipotent", unipotent()}, {"den6", den6()},     {"powers_of_two", powers_of_two()}};
}

ExtensionData z2_extension() {
  ExtensionData d;
  d.quotient = GroupTable::cyclic(2);
  d.lift = {"0", "1"};
  d.fragment = GroupTable({"0", "1", "2"}, "0");
  d.fragment.set_product("1", "1", "2");
  d.projection = {0, 1, 0};
  // alpha(g, gamma) = g + sigma(gamma) - sigma(g + gamma)
  d.cocycle = {{"0", "0"}, {"0", "2"}, {"2", "2"}};
  d.validate();
  return d;
}

AlmostRep<Rational> z2_extension_h_rep() {
  return AlmostRep<Rational>(GroupTable({"0", "2"}, "0"), Q, {identity(Q, 2), upper(Rational(1))});
}

}  // namespace rankwb::corpus
