#pragma once

// Tensor-square amplification, the f-map bounds that govern it, the separation
// booster Psi = Psi_1 (+) Psi_2, and the weighted direct-sum combiner.

#include <numeric>
#include <optional>
#include <vector>

#include "rankwb/almost_rep.hpp"
#include "rankwb/jordan.hpp"

namespace rankwb {

inline constexpr Index kDefaultBudget = 16384;

/// RANKWB_BUDGET if set to a positive integer, otherwise kDefaultBudget.
Index budget_from_env();

/// f(x) = x^2 + (1 - x)^2.
Rational f_map(const Rational& x);
/// f^m(x) for x in [1/2, 1]; throws InputError outside that interval.
Rational f_iterate(const Rational& x, int m);

/// n^(2^(m-1)), or nullopt once it exceeds `limit`.
std::optional<Index> tensor_level_dim(Index n, int m, Index limit);

enum class BoundKind {
  none,          // M_1(A) <= 1/2, or A = I
  multiplicity,  // M_1(A) in (1/2, 1): M_1(A_m) < f^(m-1)(c)
  jordan,        // A unipotent, J(A) < 1: J(A_m) < f^(m-1)(c)
};

const char* to_string(BoundKind k);

/// Which bound applies to A and the default constant c for it.
struct BoundChoice {
  BoundKind kind = BoundKind::none;
  Rational value;  // M_1(A) or J(A)
  std::optional<Rational> c;
};

/// c defaults to the midpoint (value + 1) / 2. A supplied c must lie in
/// (value, 1) and exceed 1/2, else InputError.
BoundChoice choose_bound(const Rational& m1, const std::optional<Rational>& j, const std::optional<Rational>& c);

struct AmplificationTrace {
  int level = 1;
  std::vector<Index> dims;
  std::vector<Rational> m1_values;
  std::vector<Rational> j_values;  // only when A is unipotent
  std::vector<Rational> separations;  // rho(A_i - I)
  BoundChoice bound;
  std::vector<Rational> f_bounds;  // f^(i-1)(c), when a bound applies
  std::vector<bool> bound_holds;
  bool all_bounds_hold = true;
};

/// Materialises A_1 = A, A_{i+1} = A_i (x) A_i up to A_m and records M_1 and J.
template <class S>
AmplificationTrace tensor_square_iterate(const Matrix<S>& a, int m, Index budget,
                                         const std::optional<Rational>& c = std::nullopt) {
  require_square(a, "tensor_square_iterate");
  if (m < 1) throw InputError("tensor_square_iterate: level must be >= 1");
  if (a.rows() == 0) throw InputError("tensor_square_iterate: empty matrix");
  if (!tensor_level_dim(a.rows(), m, budget))
    throw BudgetExceeded("A_" + std::to_string(m) + " would exceed the size budget of " + std::to_string(budget));
  if (!is_invertible(a)) throw InputError("tensor_square_iterate: matrix is singular");

  AmplificationTrace t;
  t.level = m;
  Matrix<S> ai = a;
  const S one(1);
  for (int i = 1; i <= m; ++i) {
    if (i > 1) ai = tensor(ai, ai);
    t.dims.push_back(ai.rows());
    const Rational m1 = algebraic_multiplicity(ai, one);
    t.m1_values.push_back(m1);
    t.separations.push_back(normalized_rank(shifted(ai, one)));
    if (t.m1_values.front() == Rational(1)) t.j_values.push_back(Rational(1) - t.separations.back());
  }
  const std::optional<Rational> j =
      t.j_values.empty() ? std::nullopt : std::optional<Rational>(t.j_values.front());
  t.bound = choose_bound(t.m1_values.front(), j, c);
  if (t.bound.kind != BoundKind::none) {
    const auto& tracked = t.bound.kind == BoundKind::jordan ? t.j_values : t.m1_values;
    for (int i = 1; i <= m; ++i) {
      t.f_bounds.push_back(f_iterate(*t.bound.c, i - 1));
      const bool ok = tracked[static_cast<std::size_t>(i - 1)] < t.f_bounds.back();
      t.bound_holds.push_back(ok);
      t.all_bounds_hold = t.all_bounds_hold && ok;
    }
  }
  return t;
}

struct BoostRow {
  GroupTable::Id g = 0;
  Rational m1;                  // M_1(phi(g))
  Rational m1_level;            // M_1(phi(g)_m)
  std::optional<Rational> j;    // J(phi(g)) when unipotent
  std::optional<Rational> j_level;
  Rational rho_psi1, rho_psi2, rho_total;
  Rational min_bound;           // (1/2) min(1 - M_1(phi(g)_m), 1 - M_1(phi(g)))
  bool min_bound_holds = false;
  BoundChoice bound;
  std::optional<Rational> f_bound;  // (1/2)(1 - f^(m-1)(c))
  bool f_bound_holds = true;
  bool degenerate = false;      // phi(g) = I for g != e
};

template <class S>
struct BoostResult {
  AlmostRep<S> rep;
  int level = 1;
  Index input_dim = 0;
  Index output_dim = 0;
  std::vector<BoostRow> rows;
  Rational input_defect;
  Rational output_defect;
  Rational defect_bound;  // min(1, (2^(m-1) + 1)/2 * input_defect)
  bool defect_bound_holds = false;
  bool all_hold = false;
};

/// phi'(g) = phi(g)_m (+) (phi(g) (x) Id_{n^(2^(m-1)-1)}), of size 2 n^(2^(m-1)).
template <class S>
BoostResult<S> boost_separation(const AlmostRep<S>& rep, int m, Index budget,
                                const std::optional<Rational>& c = std::nullopt) {
  if (m < 1) throw InputError("boost_separation: level must be >= 1");
  const Index n = rep.dim();
  const auto level_dim = tensor_level_dim(n, m, budget / 2);
  if (!level_dim) throw BudgetExceeded("boosted matrices would exceed the size budget of " + std::to_string(budget));
  const Index big = *level_dim;
  const Index pad = n == 0 ? 0 : big / n;
  const auto& field = rep.field();
  const S one(1);
  const Matrix<S> id_pad = identity(field, pad);

  std::vector<BoostRow> rows;
  std::vector<Matrix<S>> out;
  for (GroupTable::Id g = 0; g < rep.table().size(); ++g) {
    const Matrix<S>& a = rep[g];
    Matrix<S> am = a;
    for (int i = 1; i < m; ++i) am = tensor(am, am);
    Matrix<S> psi2 = tensor(a, id_pad);
    if (g != rep.table().identity()) {
      BoostRow row;
      row.g = g;
      row.m1 = algebraic_multiplicity(a, one);
      row.m1_level = algebraic_multiplicity(am, one);
      row.rho_psi1 = normalized_rank(shifted(am, one));
      row.rho_psi2 = normalized_rank(shifted(a, one));
      row.rho_total = (row.rho_psi1 + row.rho_psi2) * Rational(BigInt(1), BigInt(2));
      if (row.m1 == Rational(1)) {
        row.j = Rational(1) - row.rho_psi2;
        row.j_level = Rational(1) - row.rho_psi1;
      }
      row.degenerate = row.rho_psi2.is_zero();
      const Rational half(BigInt(1), BigInt(2));
      row.min_bound = half * min(Rational(1) - row.m1_level, Rational(1) - row.m1);
      row.min_bound_holds = row.rho_total >= row.min_bound;
      if (!row.degenerate) {
        if (row.m1 <= half) {
          // Psi_2 alone already gives rho >= 1/2 (1 - M_1) >= 1/4 = (1/2)(1 - f^(m-1)(1/2)).
          row.bound.kind = BoundKind::none;
          row.bound.value = row.m1;
          row.bound.c = half;
        } else {
          row.bound = choose_bound(row.m1, row.j, c);
        }
        row.f_bound = half * (Rational(1) - f_iterate(*row.bound.c, m - 1));
        row.f_bound_holds = row.rho_total >= *row.f_bound;
      }
      rows.push_back(std::move(row));
    }
    out.push_back(direct_sum(am, psi2));
  }

  BoostResult<S> r{AlmostRep<S>(rep.table(), field, std::move(out)), m, n, 2 * big, std::move(rows), {}, {}, {}, false, false};
  r.input_defect = defect_report(rep).max_defect;
  r.output_defect = defect_report(r.rep).max_defect;
  const Rational factor(BigInt((1L << (m - 1)) + 1), BigInt(2));
  r.defect_bound = min(Rational(1), factor * r.input_defect);
  r.defect_bound_holds = r.output_defect <= r.defect_bound;
  r.all_hold = r.defect_bound_holds;
  for (const auto& row : r.rows) r.all_hold = r.all_hold && row.min_bound_holds && row.f_bound_holds;
  return r;
}

template <class S>
struct CombineResult {
  Matrix<S> combined;
  Index dim = 0;
  std::vector<Index> weights;  // block i is Theta^i (x) Id_{weights[i]}
  Index trailing = 0;          // size of the epsilon * Id block
  std::vector<Rational> block_rho;
  Rational epsilon_rho;
  Rational lhs;  // rho(phi_k)
  Rational rhs;  // sum 2^-i rho(Theta^i) + 2^-k rho(epsilon Id)
  bool identity_holds = false;
};

/// phi_k = (+)_i (Theta^i (x) Id_{w_i}) (+) epsilon Id with block i occupying
/// 2^-i of the dimension and the trailing block 2^-k.
template <class F>
CombineResult<typename F::Scalar> weighted_combine(const F& field, const std::vector<Matrix<typename F::Scalar>>& thetas,
                                                   const typename F::Scalar& epsilon, Index budget) {
  using S = typename F::Scalar;
  const auto k = static_cast<int>(thetas.size());
  if (k < 1) throw InputError("weighted_combine: need at least one matrix");
  if (k > 40) throw BudgetExceeded("weighted_combine: depth too large");
  // D must be a multiple of 2^k and of 2^i n_i for every i.
  BigInt d = BigInt(1) << k;
  for (int i = 1; i <= k; ++i) {
    const auto& t = thetas[static_cast<std::size_t>(i - 1)];
    require_square(t, "weighted_combine");
    if (t.rows() == 0) throw InputError("weighted_combine: empty matrix");
    const BigInt need = (BigInt(1) << i) * BigInt(static_cast<long>(t.rows()));
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), need.get_mpz_t());
  }
  if (d > BigInt(static_cast<long>(budget)))
    throw BudgetExceeded("weighted_combine needs dimension " + d.get_str() + " (budget " + std::to_string(budget) + ")");
  CombineResult<S> r;
  r.dim = static_cast<Index>(d.get_si());
  Matrix<S> acc = zeros(field, 0, 0);
  for (int i = 1; i <= k; ++i) {
    const auto& t = thetas[static_cast<std::size_t>(i - 1)];
    const Index w = (r.dim >> i) / t.rows();
    r.weights.push_back(w);
    acc = direct_sum(acc, tensor(bind(field, t), identity(field, w)));
    const Rational rho = normalized_rank(t);
    r.block_rho.push_back(rho);
    r.rhs += rho * Rational(BigInt(1), BigInt(1) << i);
  }
  r.trailing = r.dim >> k;
  r.combined = direct_sum(acc, scalar_matrix(field, field.bind(epsilon), r.trailing));
  r.epsilon_rho = field.bind(epsilon).is_zero() ? Rational(0) : Rational(1);
  r.rhs += r.epsilon_rho * Rational(BigInt(1), BigInt(1) << k);
  r.lhs = normalized_rank(r.combined);
  r.identity_holds = r.lhs == r.rhs;
  return r;
}

template <class S>
struct EliminationWitness {
  Matrix<S> w;
  Rational rho;
  std::vector<Rational> factor_rho;  // rho(U_1 - U_i), i = 2..r
  Rational predicted;                // product of factor_rho
  bool degenerate = false;           // some U_i repeat
  bool matches = false;              // rho == predicted
};

/// W = a_1 U_1 (x) (U_1 - U_2) (x) ... (x) (U_1 - U_r).
template <class F>
EliminationWitness<typename F::Scalar> tensor_elimination_witness(const F& field,
                                                                   const std::vector<typename F::Scalar>& coeffs,
                                                                   const std::vector<Matrix<typename F::Scalar>>& us) {
  using S = typename F::Scalar;
  if (us.size() < 2) throw InputError("tensor_elimination_witness: need at least two matrices");
  if (coeffs.size() != us.size()) throw InputError("tensor_elimination_witness: one coefficient per matrix");
  for (const auto& a : coeffs)
    if (field.bind(a).is_zero()) throw InputError("tensor_elimination_witness: coefficients must be nonzero");
  std::vector<Matrix<S>> u;
  for (const auto& m : us) {
    if (!is_invertible(m)) throw InputError("tensor_elimination_witness: matrices must be invertible");
    if (m.rows() != us.front().rows()) throw InputError("tensor_elimination_witness: size mismatch");
    u.push_back(bind(field, m));
  }
  EliminationWitness<S> r;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j)
      if (equal(u[i], u[j])) r.degenerate = true;
  Matrix<S> w = u[0] * field.bind(coeffs[0]);
  r.predicted = Rational(1);
  for (std::size_t i = 1; i < u.size(); ++i) {
    const Matrix<S> diff = u[0] - u[i];
    r.factor_rho.push_back(normalized_rank(diff));
    r.predicted *= r.factor_rho.back();
    w = tensor(w, diff);
  }
  r.rho = normalized_rank(w);
  r.matches = r.rho == r.predicted;
  r.w = std::move(w);
  return r;
}

}  // namespace rankwb
