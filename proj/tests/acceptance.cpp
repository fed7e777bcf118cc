// Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic only.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "rankwb/amplify.hpp"
#include "rankwb/constructions.hpp"
#include "rankwb/corpus.hpp"
#include "rankwb/jordan.hpp"
#include "rankwb/reduce.hpp"
#include "support.hpp"

using namespace rankwb;
using rankwb::testing::Rng;
using rankwb::testing::random_invertible;
using rankwb::testing::random_matrix;
using rankwb::testing::random_permutation_images;
using rankwb::testing::uniform;

namespace {

const RationalField Q;
const PrimeField F101(101);

Rational frac(long a, long b) { return Rational(BigInt(a), BigInt(b)); }

/// Thrown by `expect` so a criterion stops at its first broken instance.
struct Broken {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Broken{what};
}

template <class F>
int rank_laws(const F& f, std::uint64_t seed) {
  using M = Matrix<typename F::Scalar>;
  Rng rng(seed);
  int instances = 0;
  for (; instances < 500; ++instances) {
    const Index n = uniform(rng, 1, 8), m = uniform(rng, 1, 4);
    const auto u = random_matrix(rng, f, n, n, static_cast<int>(uniform(rng, 10, 90)));
    const auto v = random_matrix(rng, f, n, n, static_cast<int>(uniform(rng, 10, 90)));
    const auto w = random_matrix(rng, f, m, m, static_cast<int>(uniform(rng, 10, 90)));
    const Index ru = rank(u), rv = rank(v), rw = rank(w);
    const auto id = identity(f, n);
    expect(rank(id) == n, "rk(I_n) = n");
    expect((ru == 0) == is_zero_matrix(u), "rk(u) = 0 iff u = 0");
    expect(rank(M(u + v)) <= ru + rv, "subadditivity");
    const Index ruv = rank(mul(u, v));
    expect(ruv <= ru && ruv <= rv, "submultiplicativity");
    expect(rank(direct_sum(u, w)) == ru + rw, "direct sum");
    expect(rank(tensor(u, w)) == ru * rw, "tensor product");
    const auto completed = invertible_completion(u);
    expect(is_invertible(completed), "completion is invertible");
    expect(rank_distance(u, completed) == Rational(1) - normalized_rank(u), "completion identity");
    expect(rank(M(id - mul(u, v))) == rank(M(id - mul(v, u))), "rk(I-AB) = rk(I-BA)");
  }
  return instances;
}

std::string criterion_1() {
  const int q = rank_laws(Q, 1001), p = rank_laws(F101, 1002);
  return std::to_string(q) + " instances over Q, " + std::to_string(p) + " over F_101";
}

std::string criterion_2() {
  Rng rng(2002);
  for (int t = 0; t < 1000; ++t) {
    const auto n = static_cast<std::size_t>(uniform(rng, 1, 50));
    const Permutation p(random_permutation_images(rng, n));
    const auto counts = cycle_and_fix_counts(p);
    const Rational nn(BigInt(static_cast<long>(n)));
    const Rational rho = rank_distance(identity(Q, static_cast<Index>(n)), permutation_matrix(p, Q));
    const Rational ham = hamming_distance(Permutation::identity(n), p);
    expect(rho == Rational(1) - Rational(BigInt(static_cast<long>(counts.cycles))) / nn, "rho = 1 - cyc/n");
    expect(ham == Rational(1) - Rational(BigInt(static_cast<long>(counts.fixed))) / nn, "d_Hamm = 1 - fix/n");
    expect(rho <= ham && ham <= Rational(2) * rho, "rho <= d_Hamm <= 2 rho");
  }
  return "1000 permutations, n <= 50";
}

std::string criterion_3() {
  int cases = 0;
  for (Index s = 1; s <= 8; ++s)
    for (Index t = s; t <= 8; ++t)
      for (long alpha : {1, 2, 3})
        for (long beta : {1, 2, 3}) {
          expect(verify_jordan_tensor(F101, F101.from_int(alpha), s, F101.from_int(beta), t).holds, "F_101 profile");
          expect(verify_jordan_tensor(Q, Rational(alpha), s, Rational(beta), t).holds, "Q profile");
          cases += 2;
        }
  const auto example = verify_jordan_tensor(Q, Rational(1), 2, Rational(1), 3);
  expect(example.computed.blocks == std::vector<Index>{4, 2}, "(2,3) -> [4,2]");
  return std::to_string(cases) + " profiles, (2,3) -> [4,2]";
}

// Upper triangular with `ones` unit diagonal entries, conjugated at random.
Matrix<Zp> planted(Rng& rng, Index n, Index ones) {
  auto t = random_matrix(rng, F101, n, n, 50);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < i; ++j) t(i, j) = F101.zero();
    t(i, i) = i < ones ? F101.one() : F101.from_int(uniform(rng, 2, 100));
  }
  const auto p = random_invertible(rng, F101, n);
  return mul(mul(p, t), inverse(p));
}

Matrix<Zp> random_unipotent(Rng& rng, Index n) {
  auto a = zeros(F101, 0, 0);
  for (Index total = 0; total < n;) {
    const Index s = uniform(rng, 1, n - total);
    a = direct_sum(a, jordan_block(F101, F101.one(), s));
    total += s;
  }
  const auto p = random_invertible(rng, F101, n);
  return mul(mul(p, a), inverse(p));
}

std::string criterion_4() {
  Rng rng(4004);
  for (int t = 0; t < 200; ++t) {
    const Index n = uniform(rng, 1, 8);
    const auto a = planted(rng, n, uniform(rng, n / 2 + n % 2, n));
    const Rational m1 = algebraic_multiplicity(a, F101.one());
    expect(algebraic_multiplicity(tensor(a, a), F101.one()) <= f_map(m1), "M1(A x A) <= f(M1(A))");
  }
  for (int t = 0; t < 200; ++t) {
    const auto a = random_unipotent(rng, uniform(rng, 1, 12));
    const Rational j = jordan_fraction(a), j2 = jordan_fraction(tensor(a, a));
    expect(j2 <= min(j, j * j + (Rational(1) - j) * (Rational(1) - j)), "J(A x A) <= min(J, J^2 + (1-J)^2)");
  }
  for (int t = 0; t < 40; ++t) {
    const auto trace = tensor_square_iterate(planted(rng, 3, 2), 3, kDefaultBudget);
    expect(trace.bound.kind == BoundKind::multiplicity && trace.all_bounds_hold, "M1(A_m) < f^(m-1)(c), m <= 3");
  }
  const auto tight = tensor_square_iterate(diagonal(Q, {Rational(1), Rational(1), Rational(-1)}), 2, kDefaultBudget);
  expect(tight.m1_values[1] == frac(5, 9) && f_map(frac(2, 3)) == frac(5, 9), "M1(A_2) = 5/9 = f(2/3)");
  return "200 + 200 random instances, 40 chains to m = 3, diag(1,1,-1) -> 5/9";
}

template <class S>
Rational check_boost(const AlmostRep<S>& rep, const std::string& name) {
  const auto b = boost_separation(rep, 3, kDefaultBudget);
  Rational worst(1);
  for (const auto& row : b.rows) {
    if (row.degenerate) continue;
    expect(row.f_bound.has_value(), name + ": bound applies");
    expect(row.rho_total >= *row.f_bound, name + ": rho(I - phi'(g)) >= (1 - f^2(c))/2");
    worst = min(worst, row.rho_total);
  }
  return worst;
}

std::string criterion_5() {
  std::ostringstream out;
  for (const auto& [name, rep] : corpus::rational_reps()) out << name << " " << check_boost(rep, name).str() << ", ";
  out << "gaussian " << check_boost(corpus::gaussian_rotation(), "gaussian").str();
  const auto b = boost_separation(corpus::unipotent(), 2, kDefaultBudget);
  Rational worst(1);
  for (const auto& row : b.rows) worst = min(worst, row.rho_total);
  expect(worst >= frac(1, 4), "unipotent boost at m = 2 reaches 1/4");
  out << "; unipotent at m = 2: " << worst.str();
  return out.str();
}

template <class S>
int combine_on(const AlmostRep<S>& rep, int depth) {
  const auto& f = rep.field();
  const auto& table = rep.table();
  int checked = 0;
  for (GroupTable::Id g = 0; g < table.size(); ++g) {
    if (g == table.identity()) continue;
    const GroupAlgebraElement<S> x{{table.label(table.identity()), f.one()}, {table.label(g), f.from_int(-1)}};
    std::vector<Matrix<S>> thetas;
    for (int i = 1; i <= depth; ++i) thetas.push_back(group_algebra_apply(rep, x, i));
    expect(weighted_combine(f, thetas, augmentation<S>(f, x), kDefaultBudget).identity_holds, "combiner identity");
    ++checked;
  }
  return checked;
}

std::string criterion_6() {
  int checked = 0;
  for (const auto& [name, rep] : corpus::rational_reps())
    for (int k = 1; k <= 3; ++k) checked += combine_on(rep, k);
  checked += combine_on(corpus::gaussian_rotation(), 3);

  const auto sign = corpus::sign();
  const GroupAlgebraElement<Rational> f{{"e", Rational(1)}, {"g", Rational(-1)}};
  std::vector<Matrix<Rational>> thetas;
  for (int i = 1; i <= 2; ++i) thetas.push_back(group_algebra_apply(sign, f, i));
  const auto c = weighted_combine(Q, thetas, augmentation<Rational>(Q, f), kDefaultBudget);
  expect(c.identity_holds && c.lhs == frac(3, 8), "sign rep at k = 2 gives 3/8");

  const GroupAlgebraElement<Rational> g{{"1", Rational(1)}, {"0", Rational(-2)}};
  const Rational zero = normalized_rank(group_algebra_apply(corpus::powers_of_two(), g, 1));
  expect(zero == Rational(0), "u_1 - 2 u_0 under 2^k I has rho 0");
  return std::to_string(checked) + " identities, sign -> " + c.lhs.str() + ", u_1 - 2u_0 -> " + zero.str();
}

std::string criterion_7() {
  std::ostringstream out;
  for (const auto& [name, rep] : corpus::rational_reps()) {
    const auto p = select_good_prime(rep).p;
    expect(reduce_mod_p(rep, p).certificate.valid, name + " certificate");
    out << name << "@" << p << ", ";
  }
  const auto gaussian = restrict_rep(corpus::gaussian_rotation());
  const auto p = select_good_prime(gaussian).p;
  expect(reduce_mod_p(gaussian, p).certificate.valid, "gaussian certificate");
  out << "gaussian@" << p;
  try {
    reduce_mod_p(corpus::sign(), 2);
    expect(false, "diag(1,-1) mod 2 must be rejected");
  } catch (const ReductionRejected& e) {
    const auto& row = e.certificate().ranks.at(1);
    expect(!e.certificate().valid, "rejected certificate is invalid");
    expect(row.rank_before == 1 && row.rank_after == Index(0), "rank collapse 1 -> 0 reported");
  }
  return out.str() + "; sign mod 2 rejected, rank 1 -> 0";
}

std::string criterion_8() {
  const auto ext = amenable_extension_rep(corpus::z2_extension(), corpus::z2_extension_h_rep());
  const Rational sep = separation(ext.rep, ext.rep.table().index("1"));
  expect(sep == frac(3, 4) && sep >= frac(1, 2), "rho(I - psi(1)) = 3/4");
  expect(ext.report.max_defect == Rational(0), "defect 0");
  expect(ext.all_hold, "extension bounds");
  return "rho(I - psi(1)) = " + sep.str() + ", defect " + ext.report.max_defect.str();
}

std::string criterion_9() {
  const auto three = lupini_witnesses(Q, 3);
  expect(three.rows.size() == 1 && three.rows.front().distance == frac(2, 3), "n = 3 distance 2/3");
  Rational least(1);
  for (Index n = 3; n <= 100; ++n) {
    const auto w = lupini_witnesses(Q, n);
    expect(w.maximal && w.all_hold, "verdicts for n = " + std::to_string(n));
    for (const auto& row : w.rows)
      if (row.i >= row.j) {
        expect(row.distance >= frac(2, 9), "distance >= 2/9 at n = " + std::to_string(n));
        least = min(least, row.distance);
      } else {
        expect(row.commute && row.distance == Rational(0), "i < j commute");
      }
  }
  return "n = 3 -> " + three.rows.front().distance.str() + ", min over n <= 100 = " + least.str();
}

std::string criterion_10() {
  const auto r = folner_left_mult_rep(Q, truncated_polynomial_folner(8), frac(1, 4));
  expect(r.check.deficiency <= frac(1, 4) && r.check.certified, "deficiency <= 1/4");
  expect(r.rho[1] == frac(7, 8), "rho(phi(x)) = 7/8");
  return "deficiency " + r.check.deficiency.str() + ", rho(phi(x)) = " + r.rho[1].str();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<std::string()>>> criteria{
      {"rank laws", criterion_1},          {"permutation sandwich", criterion_2},
      {"Jordan tensor profiles", criterion_3}, {"amplification bounds", criterion_4},
      {"separation booster", criterion_5}, {"weighted combiner", criterion_6},
      {"finite-field reduction", criterion_7}, {"amenable extension", criterion_8},
      {"commutator witnesses", criterion_9}, {"Folner certifier", criterion_10},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    std::string verdict = "PASS", detail;
    try {
      detail = criteria[i].second();
    } catch (const Broken& b) {
      verdict = "FAIL";
      detail = b.what;
    } catch (const std::exception& e) {
      verdict = "FAIL";
      detail = std::string("error: ") + e.what();
    }
    failures += verdict == "FAIL";
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2zu %s: %s (%.2fs)\n", verdict.c_str(), i + 1, criteria[i].first.c_str(), detail.c_str(), secs);
  }
  return failures == 0 ? 0 : 1;
}
