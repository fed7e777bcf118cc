#include <doctest.h>

#include "rankwb/primes.hpp"
#include "rankwb/restrict.hpp"
#include "support.hpp"

using namespace rankwb;
using rankwb::testing::Rng;
using rankwb::testing::random_element;

namespace {

template <class F>
void check_field_axioms(const F& f, std::uint64_t seed) {
  Rng rng(seed);
  for (int trial = 0; trial < 10000; ++trial) {
    const auto a = random_element(rng, f), b = random_element(rng, f), c = random_element(rng, f);
    REQUIRE(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
    REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
    REQUIRE(f.add(a, b) == f.add(b, a));
    REQUIRE(f.mul(a, b) == f.mul(b, a));
    REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
    REQUIRE(f.add(a, f.neg(a)) == f.zero());
    REQUIRE(f.sub(a, b) == f.add(a, f.neg(b)));
    REQUIRE(f.mul(a, f.one()) == a);
    if (!(a == f.zero())) {
      REQUIRE(f.mul(a, f.inverse(a)) == f.one());
      REQUIRE(f.mul(f.div(b, a), a) == b);
    }
  }
}

}  // namespace

TEST_CASE("rationals are canonical") {
  CHECK(Rational(BigInt(2), BigInt(-4)).str() == "-1/2");
  CHECK(Rational::parse("6/4") == Rational(BigInt(3), BigInt(2)));
  CHECK(Rational::parse("-7").str() == "-7");
  CHECK_THROWS_AS(Rational::parse("1/0"), InputError);
  CHECK_THROWS_AS(Rational::parse("abc"), InputError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), InputError);
}

TEST_CASE("make_field examples") {
  const PrimeField f7(7);
  CHECK(f7.mul(f7.from_int(3), f7.from_int(5)) == f7.one());

  const NumberField gauss({1, 0, 1});
  const auto x = gauss.generator();
  CHECK(x * x == gauss.from_int(-1));

  CHECK_THROWS_AS(make_field(FieldSpec::prime(6)), InputError);
  CHECK_THROWS_AS(make_field(FieldSpec::number_field({1, 2, 1})), InputError);  // (x+1)^2
  CHECK_THROWS_AS(make_field(FieldSpec::number_field({1, 0, 2})), InputError);  // not monic
  CHECK_NOTHROW(make_field(FieldSpec::number_field({-2, 0, 0, 1})));
}

TEST_CASE("field spec parsing round-trips") {
  for (const char* text : {"Q", "Fp:101", "NF:1,0,1", "NF:-2,0,0,1"})
    CHECK(FieldSpec::parse(text).str() == text);
  CHECK_THROWS_AS(FieldSpec::parse("R"), InputError);
  CHECK_THROWS_AS(FieldSpec::parse("Fp:x"), InputError);
}

TEST_CASE("primality") {
  CHECK(is_prime(2));
  CHECK(is_prime(101));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(561));  // Carmichael
  CHECK(is_prime(2305843009213693951ULL));  // 2^61 - 1
  CHECK_FALSE(is_prime(3215031751ULL));     // strong pseudoprime to bases 2, 3, 5, 7
  CHECK(next_prime(90) == 97);
  CHECK_NOTHROW(make_field(FieldSpec::prime(2305843009213693951ULL)));
  CHECK_THROWS_AS(make_field(FieldSpec::prime(next_prime(std::uint64_t{1} << 61))), InputError);
}

TEST_CASE("field axioms hold on random samples") {
  SUBCASE("Q") { check_field_axioms(RationalField{}, 1); }
  SUBCASE("F_101") { check_field_axioms(PrimeField(101), 2); }
  SUBCASE("F_p near 2^61") { check_field_axioms(PrimeField(2305843009213693921ULL), 3); }
  SUBCASE("Q(i)") { check_field_axioms(NumberField({1, 0, 1}), 4); }
  SUBCASE("Q(cbrt 2)") { check_field_axioms(NumberField({-2, 0, 0, 1}), 5); }
}

TEST_CASE("F_p from rationals") {
  const PrimeField f(7);
  CHECK(f.from_rational(Rational(BigInt(1), BigInt(2))) == f.from_int(4));
  CHECK(f.from_rational(Rational(-1)) == f.from_int(6));
  CHECK_THROWS_AS(f.from_rational(Rational(BigInt(1), BigInt(14))), InputError);
}

TEST_CASE("mixing fields is rejected") {
  const PrimeField f5(5), f7(7);
  CHECK_THROWS_AS(f5.one() + f7.one(), FieldMismatch);
  const NumberField a({1, 0, 1}), b({-2, 0, 1});
  CHECK_THROWS_AS(a.one() * b.one(), FieldMismatch);
}

TEST_CASE("restrict_scalars examples") {
  const NumberField gauss({1, 0, 1});
  const auto x = gauss.generator();

  Matrix<NFElem> m1(1, 1);
  m1(0, 0) = x;
  const auto r1 = restrict_scalars(gauss, m1);
  CHECK(equal(r1, from_integers(RationalField{}, {{0, -1}, {1, 0}})));
  CHECK(normalized_rank(r1) == Rational(1));

  const auto z = zeros(gauss, 3, 3);
  const auto rz = restrict_scalars(gauss, z);
  CHECK(rz.rows() == 6);
  CHECK(is_zero_matrix(rz));

  auto d = zeros(gauss, 2, 2);
  d(0, 0) = x;
  const auto rd = restrict_scalars(gauss, d);
  CHECK(rank(rd) == 2);
  CHECK(normalized_rank(rd) == Rational(BigInt(1), BigInt(2)));
  CHECK(normalized_rank(d) == Rational(BigInt(1), BigInt(2)));

  CHECK_THROWS_AS(restrict_scalars(gauss, zeros(gauss, 2, 3)), InputError);
}

TEST_CASE("restrict_scalars is a rank-preserving ring homomorphism") {
  Rng rng(11);
  for (const auto& poly : {std::vector<BigInt>{1, 0, 1}, std::vector<BigInt>{-2, 0, 1}, std::vector<BigInt>{-2, 0, 0, 1}}) {
    const NumberField f(poly);
    const auto e = static_cast<Index>(f.degree());
    for (int trial = 0; trial < 60; ++trial) {
      const Index n = rankwb::testing::uniform(rng, 1, 4);
      const auto a = rankwb::testing::random_matrix(rng, f, n, n, 50);
      const auto b = rankwb::testing::random_matrix(rng, f, n, n, 50);
      CHECK(equal(restrict_scalars(f, mul(a, b)), mul(restrict_scalars(f, a), restrict_scalars(f, b))));
      CHECK(equal(restrict_scalars(f, Matrix<NFElem>(a + b)),
                  Matrix<Rational>(restrict_scalars(f, a) + restrict_scalars(f, b))));
      CHECK(rank(restrict_scalars(f, a)) == e * rank(a));
    }
  }
}
