#include <doctest.h>

#include "rankwb/amplify.hpp"
#include "rankwb/corpus.hpp"
#include "support.hpp"

using namespace rankwb;
using rankwb::testing::Rng;
using rankwb::testing::random_invertible;
using rankwb::testing::uniform;

namespace {

const RationalField Q;
const PrimeField F101(101);

Rational frac(long a, long b) { return Rational(BigInt(a), BigInt(b)); }

template <class S>
AlmostRep<S> conjugate(const AlmostRep<S>& rep, const Matrix<S>& p) {
  const Matrix<S> p_inv = inverse(p);
  return map_matrices(rep, [&](const Matrix<S>& m) { return mul(mul(p, m), p_inv); });
}

void check_same_report(const DefectReport& a, const DefectReport& b) {
  CHECK(a.max_defect == b.max_defect);
  CHECK(a.min_separation == b.min_separation);
  REQUIRE(a.pairs.size() == b.pairs.size());
  for (std::size_t i = 0; i < a.pairs.size(); ++i) CHECK(a.pairs[i].defect == b.pairs[i].defect);
  REQUIRE(a.elements.size() == b.elements.size());
  for (std::size_t i = 0; i < a.elements.size(); ++i) CHECK(a.elements[i].separation == b.elements[i].separation);
}

// Z/3 with phi(g) a random invertible matrix and phi(g^2) = phi(g)^2 perturbed in one column.
AlmostRep<Zp> perturbed_z3(Rng& rng, Index n) {
  const auto a = random_invertible(rng, F101, n);
  auto a2 = mul(a, a);
  while (true) {
    auto b = a2;
    b(uniform(rng, 0, n - 1), 0) += F101.one();
    if (is_invertible(b)) {
      a2 = b;
      break;
    }
  }
  return AlmostRep<Zp>(GroupTable::cyclic(3), F101, {identity(F101, n), a, a2});
}

}  // namespace

TEST_CASE("group table validation") {
  GroupTable t({"e", "a", "b"});
  t.set_product("a", "a", "b");
  CHECK_THROWS_AS(t.set_product("a", "a", "e"), InputError);
  CHECK_THROWS_AS(t.set_product("a", "zz", "e"), InputError);
  CHECK_FALSE(t.is_total());
  t.set_inverse("a", "b");
  CHECK_NOTHROW(t.validate());  // a * b is undefined, so nothing contradicts a^-1 = b yet
  t.set_product("a", "b", "a");
  CHECK_THROWS_AS(t.validate(), InputError);
}

TEST_CASE("partial associativity is enforced") {
  GroupTable t({"e", "a", "b"});
  t.set_product("a", "a", "b");
  t.set_product("a", "b", "a");
  t.set_product("b", "a", "b");
  // (a a) a = b a = b but a (a a) = a b = a
  CHECK_THROWS_AS(t.validate(), InputError);
  CHECK_NOTHROW(GroupTable::cyclic(5).require_group());
  CHECK_NOTHROW(corpus::integer_fragment().validate());
}

TEST_CASE("defect_report examples") {
  SUBCASE("regular representation of Z/3") {
    const auto r = defect_report(corpus::z3_regular());
    CHECK(r.max_defect == Rational(0));
    CHECK(r.min_separation == frac(2, 3));
    CHECK(r.quarter_certified);
    CHECK(r.pairs.size() == 9);
  }
  SUBCASE("trivial map") {
    const AlmostRep<Rational> rep(GroupTable::cyclic(3), Q, std::vector<Matrix<Rational>>(3, identity(Q, 2)));
    const auto r = defect_report(rep);
    CHECK(r.max_defect == Rational(0));
    CHECK(r.min_separation == Rational(0));
    CHECK(r.degenerate.size() == 2);
    CHECK_FALSE(r.quarter_certified);
  }
  SUBCASE("unipotent integer fragment") {
    const auto r = defect_report(corpus::unipotent());
    CHECK(r.max_defect == Rational(0));
    CHECK(r.min_separation == frac(1, 2));
  }
  SUBCASE("identity only") {
    const AlmostRep<Rational> rep(GroupTable(), Q, {identity(Q, 3)});
    const auto r = defect_report(rep);
    CHECK(r.vacuous);
    CHECK(r.min_separation == Rational(1));
  }
  CHECK_THROWS_AS(AlmostRep<Rational>(GroupTable::cyclic(2), Q, {identity(Q, 2), zeros(Q, 2, 2)}), InputError);
  CHECK_THROWS_AS(AlmostRep<Rational>(GroupTable::cyclic(2), Q, {scalar_matrix(Q, Rational(2), 2), identity(Q, 2)}),
                  InputError);
  CHECK_THROWS_AS(AlmostRep<Rational>(GroupTable::cyclic(2), Q, {identity(Q, 2)}), InputError);
}

TEST_CASE("defect reports are invariant under conjugation") {
  Rng rng(909);
  for (int trial = 0; trial < 40; ++trial) {
    const Index n = uniform(rng, 1, 5);
    const auto rep = perturbed_z3(rng, n);
    check_same_report(defect_report(rep), defect_report(conjugate(rep, random_invertible(rng, F101, n))));
  }
  const auto z3 = corpus::z3_regular();
  for (int trial = 0; trial < 10; ++trial)
    check_same_report(defect_report(z3), defect_report(conjugate(z3, random_invertible(rng, Q, 3))));
}

TEST_CASE("align_basis") {
  SUBCASE("zero defect") {
    const auto a = align_basis(corpus::z3_regular(), frac(1, 2));
    CHECK(a.agreement == 3);
    CHECK(a.columns_agree);
  }
  SUBCASE("identity-only fragment") {
    const AlmostRep<Rational> rep(GroupTable(), Q, {identity(Q, 4)});
    const auto a = align_basis(rep, frac(1, 2));
    CHECK(a.agreement == 4);
    CHECK(equal(a.rep[0], identity(Q, 4)));
  }
  SUBCASE("one perturbed triple") {
    Rng rng(1010);
    for (int trial = 0; trial < 30; ++trial) {
      const Index n = 8;
      const auto rep = perturbed_z3(rng, n);
      const auto report = defect_report(rep);
      const auto triples = rep.table().defined_triples().size();
      const Rational eps = report.max_defect * Rational(BigInt(static_cast<long>(triples))) + frac(1, 100);
      if (!(eps < Rational(1))) continue;
      const auto a = align_basis(rep, eps);
      CHECK(a.columns_agree);
      CHECK(Rational(BigInt(static_cast<long>(a.agreement))) > (Rational(1) - eps) * Rational(BigInt(n)));
      check_same_report(report, defect_report(a.rep));
    }
  }
  CHECK_THROWS_AS(align_basis(corpus::z3_regular(), Rational(0)), InputError);
}

TEST_CASE("group_algebra_apply") {
  const auto sign = corpus::sign();
  SUBCASE("unit") {
    const GroupAlgebraElement<Rational> f{{"e", Rational(1)}};
    CHECK(equal(group_algebra_apply(sign, f, 2), identity(Q, 4)));
  }
  SUBCASE("powers of two") {
    const GroupAlgebraElement<Rational> f{{"1", Rational(1)}, {"0", Rational(-2)}};
    const auto m = group_algebra_apply(corpus::powers_of_two(), f, 1);
    CHECK(is_zero_matrix(m));
    CHECK(normalized_rank(m) == Rational(0));
    CHECK(augmentation<Rational>(Q, f) == Rational(-1));
    // the values themselves are distinct, so the elimination witness is not degenerate
    const auto w = tensor_elimination_witness(
        Q, {Rational(1), Rational(-2)}, {corpus::powers_of_two().at("1"), corpus::powers_of_two().at("0")});
    CHECK_FALSE(w.degenerate);
    CHECK(w.rho > Rational(0));
  }
  SUBCASE("sign representation at depth 2") {
    const GroupAlgebraElement<Rational> f{{"e", Rational(1)}, {"g", Rational(-1)}};
    const auto m = group_algebra_apply(sign, f, 2);
    CHECK(equal(m, diagonal(Q, {Rational(0), Rational(2), Rational(2), Rational(0)})));
    CHECK(normalized_rank(m) == frac(1, 2));
  }
  const GroupAlgebraElement<Rational> outside{{"h", Rational(1)}};
  CHECK_THROWS_AS(group_algebra_apply(sign, outside, 1), InputError);
}

TEST_CASE("algebra_almost_rep_check") {
  // L = span{1, x, x^2} inside F[x] with x * x = x^2.
  AlgebraPatch patch;
  patch.basis = {"1", "x", "x^2"};
  patch.unit = "1";
  patch.products[{1, 1}] = {{2, Rational(1)}};

  SUBCASE("exact representation") {
    const auto x = jordan_block(Q, Rational(0), 4);
    const auto c = algebra_almost_rep_check(Q, patch, {identity(Q, 4), x, mul(x, x)}, frac(1, 10));
    CHECK(c.deficiency == Rational(0));
    CHECK(c.certified);
  }
  SUBCASE("one violated product on a line") {
    for (Index n : {2, 5, 9}) {
      const auto x = jordan_block(Q, Rational(0), n);
      auto x2 = mul(x, x);
      x2(0, n - 1) += Rational(1);
      const auto c = algebra_almost_rep_check(Q, patch, {identity(Q, n), x, x2}, frac(1, 2));
      CHECK(c.deficiency == Rational(BigInt(1), BigInt(n)));
    }
  }
  SUBCASE("dropping conditions never increases the deficiency") {
    Rng rng(1111);
    for (int trial = 0; trial < 50; ++trial) {
      const Index n = uniform(rng, 1, 6);
      AlgebraPatch p;
      p.basis = {"1", "a", "b", "c"};
      p.unit = "1";
      for (std::size_t i = 1; i < 4; ++i)
        for (std::size_t j = 1; j < 4; ++j)
          if (uniform(rng, 0, 1)) p.products[{i, j}] = {{static_cast<std::size_t>(uniform(rng, 0, 3)), Rational(1)}};
      std::vector<Matrix<Zp>> psi{identity(F101, n)};
      for (int k = 0; k < 3; ++k) psi.push_back(rankwb::testing::random_matrix(rng, F101, n, n, 60));
      Rational previous = algebra_almost_rep_check(F101, p, psi, Rational(1)).deficiency;
      while (!p.products.empty()) {
        p.products.erase(p.products.begin());
        const Rational now = algebra_almost_rep_check(F101, p, psi, Rational(1)).deficiency;
        REQUIRE(now <= previous);
        previous = now;
      }
    }
  }
  CHECK_THROWS_AS(algebra_almost_rep_check(Q, patch, {zeros(Q, 2, 2), identity(Q, 2), identity(Q, 2)}, Rational(1)),
                  InputError);
  AlgebraPatch bad = patch;
  bad.products[{0, 1}] = {{2, Rational(1)}};
  CHECK_THROWS_AS(algebra_almost_rep_check(Q, bad, {identity(Q, 2), identity(Q, 2), identity(Q, 2)}, Rational(1)),
                  InputError);
}
