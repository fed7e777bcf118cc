#pragma once

// Certifiers: sofic-to-linear embedding, basis alignment, group-algebra
// evaluation and the finite-dimensional algebra check.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rankwb/almost_rep.hpp"
#include "rankwb/permutation.hpp"

namespace rankwb {

// ---------------------------------------------------------------------------
// Sofic -> linear sofic

struct SoficElementRow {
  GroupTable::Id g = 0;
  CycleCounts counts;
  Rational hamming;  // d_Hamm(id, p_g)
  Rational rho;      // rho(I - A_{p_g})
  bool formulas_hold = false;  // rho = 1 - cyc/n and hamming = 1 - fix/n
  bool sandwich_holds = false;  // hamming / 2 <= rho <= hamming
};

struct SoficPairRow {
  GroupTable::Id g, h, gh;
  Rational permutation_defect;  // d_Hamm(p_g p_h, p_gh)
  Rational matrix_defect;       // rho(A_g A_h - A_gh)
  bool holds = false;           // matrix_defect <= permutation_defect
};

template <class S>
struct SoficEmbedding {
  AlmostRep<S> rep;
  DefectReport report;
  std::vector<SoficElementRow> elements;
  std::vector<SoficPairRow> pairs;
  bool all_hold = false;
};

/// Elementwise permutation matrices, with the cycle/fixed-point identities and
/// the Hamming/rank sandwich checked for every element and defined pair.
template <class F>
SoficEmbedding<typename F::Scalar> embed_sofic_rep(const GroupTable& table, const std::vector<Permutation>& perms,
                                                   const F& field) {
  using S = typename F::Scalar;
  if (perms.size() != table.size()) throw InputError("embed_sofic_rep: one permutation per element required");
  const std::size_t n = perms.empty() ? 0 : perms.front().size();
  std::vector<Matrix<S>> mats;
  for (const auto& p : perms) {
    if (p.size() != n) throw InputError("embed_sofic_rep: permutations of different degree");
    mats.push_back(permutation_matrix(p, field));
  }
  AlmostRep<S> rep(table, field, std::move(mats));
  SoficEmbedding<S> out{rep, defect_report(rep), {}, {}, true};
  const auto id = Permutation::identity(n);
  const Rational nn(BigInt(static_cast<unsigned long>(n)));
  for (GroupTable::Id g = 0; g < table.size(); ++g) {
    SoficElementRow row;
    row.g = g;
    row.counts = cycle_and_fix_counts(perms[g]);
    row.hamming = hamming_distance(id, perms[g]);
    row.rho = separation(rep, g);
    if (n > 0) {
      row.formulas_hold = row.rho == Rational(1) - Rational(BigInt(static_cast<unsigned long>(row.counts.cycles))) / nn &&
                          row.hamming == Rational(1) - Rational(BigInt(static_cast<unsigned long>(row.counts.fixed))) / nn;
    } else {
      row.formulas_hold = true;
    }
    row.sandwich_holds = row.hamming * Rational(BigInt(1), BigInt(2)) <= row.rho && row.rho <= row.hamming;
    out.all_hold = out.all_hold && row.formulas_hold && row.sandwich_holds;
    out.elements.push_back(row);
  }
  for (const auto& t : table.defined_triples()) {
    SoficPairRow row{t.g, t.h, t.gh, hamming_distance(perms[t.g] * perms[t.h], perms[t.gh]), {}, false};
    row.matrix_defect = rank_distance(mul(rep[t.g], rep[t.h]), rep[t.gh]);
    row.holds = row.matrix_defect <= row.permutation_defect;
    out.all_hold = out.all_hold && row.holds;
    out.pairs.push_back(row);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Basis alignment

template <class S>
struct Alignment {
  AlmostRep<S> rep;   // P^-1 phi P
  Matrix<S> basis;    // P: first `agreement` columns span V
  Index agreement = 0;  // dim V
  bool columns_agree = false;
};

/// Stacks the blocks vertically.
template <class S>
Matrix<S> vstack(const std::vector<Matrix<S>>& blocks, Index cols) {
  Index rows = 0;
  for (const auto& b : blocks) rows += b.rows();
  Matrix<S> out(rows, cols);
  Index r = 0;
  for (const auto& b : blocks) {
    out.middleRows(r, b.rows()) = b;
    r += b.rows();
  }
  return out;
}

/// Extends the columns of `partial` by standard basis vectors to a basis.
template <class F>
Matrix<typename F::Scalar> complete_basis(const F& field, const Matrix<typename F::Scalar>& partial, Index n) {
  Matrix<typename F::Scalar> out = partial;
  Index r = rank(out);
  for (Index j = 0; j < n && out.cols() < n; ++j) {
    Matrix<typename F::Scalar> trial(n, out.cols() + 1);
    trial.leftCols(out.cols()) = out;
    trial.col(out.cols()) = identity(field, n).col(j);
    const Index rt = rank(trial);
    if (rt > r) {
      out = std::move(trial);
      r = rt;
    }
  }
  return out;
}

/// Conjugates phi into a basis whose first dim V vectors span
/// V = intersection of ker(phi(g) phi(h) - phi(gh)) over all defined pairs.
/// Requires max defect < epsilon / |E_1|.
template <class S>
Alignment<S> align_basis(const AlmostRep<S>& rep, const Rational& epsilon) {
  const auto triples = rep.table().defined_triples();
  const Index n = rep.dim();
  const auto report = defect_report(rep);
  const Rational limit = epsilon / Rational(BigInt(static_cast<unsigned long>(triples.size())));
  if (!(report.max_defect < limit))
    throw InputError("align_basis: max defect " + report.max_defect.str() + " is not below epsilon/|E_1| = " +
                     limit.str());
  std::vector<Matrix<S>> diffs;
  for (const auto& t : triples) diffs.push_back(Matrix<S>(mul(rep[t.g], rep[t.h]) - rep[t.gh]));
  const auto kernel = kernel_basis(vstack(diffs, n));
  const auto dim_v = static_cast<Index>(kernel.size());
  if (!(Rational(BigInt(static_cast<long>(dim_v))) > (Rational(1) - epsilon) * Rational(BigInt(static_cast<long>(n)))))
    throw InputError("align_basis: kernel intersection too small");
  Matrix<S> v(n, dim_v);
  for (Index j = 0; j < dim_v; ++j) v.col(j) = kernel[static_cast<std::size_t>(j)];
  const Matrix<S> p = bind(rep.field(), complete_basis(rep.field(), v, n));
  const Matrix<S> p_inv = inverse(p);
  auto aligned = map_matrices(rep, [&](const Matrix<S>& m) { return mul(mul(p_inv, m), p); });
  bool agree = true;
  for (const auto& t : triples) {
    const Matrix<S> lhs = mul(aligned[t.g], aligned[t.h]);
    agree = agree && equal(Matrix<S>(lhs.leftCols(dim_v)), Matrix<S>(aligned[t.gh].leftCols(dim_v)));
  }
  return {std::move(aligned), p, dim_v, agree};
}

// ---------------------------------------------------------------------------
// Group algebra

/// Finitely supported element sum_g f(g) u_g, keyed by label.
template <class S>
using GroupAlgebraElement = std::vector<std::pair<std::string, S>>;

/// sum_g f(g) phi(g)^{(x) depth}.
template <class S>
Matrix<S> group_algebra_apply(const AlmostRep<S>& rep, const GroupAlgebraElement<S>& f, int depth) {
  if (depth < 1) throw InputError("group_algebra_apply: depth must be >= 1");
  Index size = 1;
  for (int i = 0; i < depth; ++i) size *= rep.dim();
  Matrix<S> out = zeros(rep.field(), size, size);
  for (const auto& [label, coeff] : f) {
    if (!rep.table().contains(label)) throw InputError("group_algebra_apply: '" + label + "' is outside E");
    const S c = rep.field().bind(coeff);
    if (c.is_zero()) continue;
    out += tensor_power(rep.at(label), depth) * c;
  }
  return out;
}

/// The trivial-representation value sum_g f(g).
template <class S>
S augmentation(const field_t<S>& field, const GroupAlgebraElement<S>& f) {
  S s = field.zero();
  for (const auto& term : f) s += term.second;
  return s;
}

// ---------------------------------------------------------------------------
// Finite-dimensional algebra patches

/// Basis x_1..x_d of a subspace L containing the unit, with structure
/// constants for the products x_i x_j that land in L.
struct AlgebraPatch {
  std::vector<std::string> basis;
  std::string unit;
  /// (i, j) -> coefficients of x_i x_j in the basis (sparse).
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::pair<std::size_t, Rational>>> products;

  std::size_t index(const std::string& label) const;
  /// Unit present; 1 x_i = x_i 1 = x_i recorded (added when missing).
  void normalize();
};

template <class S>
struct AlgebraCheck {
  Index n = 0;
  Index kernel_dim = 0;   // dim V_epsilon
  Rational deficiency;    // (n - dim V_epsilon) / n
  bool certified = false; // deficiency < epsilon
  std::vector<std::pair<std::size_t, std::size_t>> conditions;
};

/// V = intersection over the structure table of ker(psi(x_i) psi(x_j) - psi(x_i x_j)).
template <class F>
AlgebraCheck<typename F::Scalar> algebra_almost_rep_check(const F& field, AlgebraPatch patch,
                                                          const std::vector<Matrix<typename F::Scalar>>& psi,
                                                          const Rational& epsilon) {
  using S = typename F::Scalar;
  patch.normalize();
  if (psi.size() != patch.basis.size()) throw InputError("algebra check: one matrix per basis element required");
  const Index n = psi.empty() ? 0 : psi.front().rows();
  for (const auto& m : psi)
    if (m.rows() != n || m.cols() != n) throw InputError("algebra check: matrices must share one square size");
  if (!equal(bind(field, psi[patch.index(patch.unit)]), identity(field, n)))
    throw InputError("algebra check: psi(1) must be the identity");
  AlgebraCheck<S> r;
  r.n = n;
  std::vector<Matrix<S>> diffs;
  for (const auto& [ij, coeffs] : patch.products) {
    Matrix<S> d = mul(psi[ij.first], psi[ij.second]);
    for (const auto& [k, c] : coeffs) d -= psi[k] * field.from_rational(c);
    diffs.push_back(bind(field, std::move(d)));
    r.conditions.push_back(ij);
  }
  r.kernel_dim = diffs.empty() ? n : static_cast<Index>(kernel_basis(vstack(diffs, n)).size());
  r.deficiency = n == 0 ? Rational(0)
                        : Rational(BigInt(static_cast<long>(n - r.kernel_dim)), BigInt(static_cast<long>(n)));
  r.certified = r.deficiency < epsilon;
  return r;
}

}  // namespace rankwb
