#pragma once

// Explicit representations: regular representations, amenable-extension
// cocycle blocks, commutator witnesses and Folner left multiplication.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rankwb/certify.hpp"

namespace rankwb {

// ---------------------------------------------------------------------------
// Regular representation

/// lambda_g(h) = gh for a finite group table.
std::vector<Permutation> left_regular_permutations(const GroupTable& table);

template <class F>
AlmostRep<typename F::Scalar> regular_rep(const GroupTable& table, const F& field) {
  table.require_group();
  std::vector<Matrix<typename F::Scalar>> mats;
  for (const auto& p : left_regular_permutations(table)) mats.push_back(permutation_matrix(p, field));
  return AlmostRep<typename F::Scalar>(table, field, std::move(mats));
}

// ---------------------------------------------------------------------------
// Amenable extensions

/// G with normal subgroup H and finite quotient Q = G/H, used as its own Folner set.
struct ExtensionData {
  GroupTable quotient;
  /// sigma(gamma), indexed by quotient Id.
  std::vector<std::string> lift;
  /// The fragment E of G.
  GroupTable fragment;
  /// pi(g) in Q, indexed by fragment Id.
  std::vector<GroupTable::Id> projection;
  /// alpha(g, gamma) = sigma(g gamma)^-1 g sigma(gamma) as an H label, [g][gamma].
  std::vector<std::vector<std::string>> cocycle;

  /// Shapes, group axioms for Q, the fragment table and pi(gh) = pi(g) pi(h).
  void validate() const;
  /// g . gamma = pi(g) gamma.
  GroupTable::Id act(GroupTable::Id g, GroupTable::Id gamma) const;
};

struct CocycleCheck {
  std::size_t checked = 0;
  std::size_t skipped = 0;  // H product not in the H table
  std::vector<std::string> violations;
};

/// alpha(g1 g2, gamma) = alpha(g1, g2 gamma) alpha(g2, gamma) on every defined triple.
CocycleCheck check_cocycle(const ExtensionData& data, const GroupTable& h_table);

struct ExtensionRow {
  GroupTable::Id g = 0;
  bool in_h = false;
  bool free_action = false;        // g gamma != gamma for every gamma
  bool unspecified = false;        // g outside H with fixed points on Q
  std::size_t cycles = 0;          // cycles of gamma -> g gamma
  Rational separation;             // rho(I - psi(g))
  Rational rho;                    // rho(psi(g)) = |F cap g^-1 F| / |F| = 1
  Rational kernel_bound;           // 1 - cycles / |Q|
  bool holds = false;
};

template <class S>
struct ExtensionResult {
  AlmostRep<S> rep;
  DefectReport report;
  Rational h_defect;
  Rational h_min_separation;
  Rational defect_bound;           // min(1, 2 defect(phi))
  bool defect_bound_holds = false;
  CocycleCheck cocycle;
  std::vector<ExtensionRow> rows;
  bool all_hold = false;
};

/// psi(g) has block (g gamma, gamma) equal to phi(alpha(g, gamma)), blocks in quotient order.
template <class S>
ExtensionResult<S> amenable_extension_rep(const ExtensionData& data, const AlmostRep<S>& phi) {
  data.validate();
  auto cocycle = check_cocycle(data, phi.table());
  if (!cocycle.violations.empty()) throw InputError("cocycle identity fails: " + cocycle.violations.front());
  const auto& q = data.quotient;
  const Index n = phi.dim();
  const auto qn = static_cast<Index>(q.size());
  std::vector<Matrix<S>> mats;
  for (GroupTable::Id g = 0; g < data.fragment.size(); ++g) {
    Matrix<S> psi = zeros(phi.field(), n * qn, n * qn);
    for (GroupTable::Id gamma = 0; gamma < q.size(); ++gamma) {
      const auto& label = data.cocycle[g][gamma];
      if (!phi.table().contains(label)) throw InputError("no matrix supplied for cocycle value '" + label + "'");
      const auto row = static_cast<Index>(data.act(g, gamma));
      psi.block(row * n, static_cast<Index>(gamma) * n, n, n) = phi.at(label);
    }
    mats.push_back(std::move(psi));
  }
  AlmostRep<S> rep(data.fragment, phi.field(), std::move(mats));
  const auto h_report = defect_report(phi);
  ExtensionResult<S> r{rep, defect_report(rep), h_report.max_defect, h_report.min_separation, {}, false, {}, {}, false};
  r.cocycle = std::move(cocycle);
  r.defect_bound = min(Rational(1), Rational(2) * r.h_defect);
  r.defect_bound_holds = r.report.max_defect <= r.defect_bound;
  r.all_hold = r.defect_bound_holds;
  const Rational qsize(BigInt(static_cast<long>(qn)));
  for (const auto& sep : r.report.elements) {
    ExtensionRow row;
    row.g = sep.g;
    row.separation = sep.separation;
    row.in_h = data.projection[sep.g] == q.identity();
    std::vector<std::size_t> images;
    bool has_fixed = false;
    for (GroupTable::Id gamma = 0; gamma < q.size(); ++gamma) {
      images.push_back(data.act(sep.g, gamma));
      has_fixed = has_fixed || images.back() == gamma;
    }
    row.cycles = cycle_and_fix_counts(Permutation(images)).cycles;
    row.free_action = !has_fixed;
    row.unspecified = !row.in_h && has_fixed;
    row.rho = normalized_rank(rep[sep.g]);
    row.kernel_bound = Rational(1) - Rational(BigInt(static_cast<unsigned long>(row.cycles))) / qsize;
    row.holds = row.rho == Rational(1) && row.separation >= row.kernel_bound;
    if (row.in_h) row.holds = row.holds && row.separation >= r.h_min_separation;
    if (row.free_action) row.holds = row.holds && row.separation >= Rational(BigInt(1), BigInt(2));
    r.all_hold = r.all_hold && row.holds;
    r.rows.push_back(row);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Commutator witnesses

struct CommutatorRow {
  Index i = 0, j = 0;  // 1-based
  bool commute = false;
  Rational distance;   // d_rk([g_i, h_j], I)
  Rational expected;   // 0 for i < j, (3^l - 3^(l-1))/n otherwise
  bool holds = false;
};

template <class S>
struct LupiniWitnesses {
  Index n = 0, l = 0;
  bool maximal = false;  // 3^(l+1) > n
  std::vector<Matrix<S>> g, h;
  std::vector<CommutatorRow> rows;
  Rational min_distance;  // over i >= j
  bool gamma_holds = false;  // min_distance >= 2/9
  bool all_hold = false;
};

/// Largest l with 3^l <= n (0 when n < 3).
Index max_lupini_level(Index n);

template <class F>
LupiniWitnesses<typename F::Scalar> lupini_witnesses(const F& field, Index n, std::optional<Index> level = std::nullopt) {
  using S = typename F::Scalar;
  const Index l = level ? *level : max_lupini_level(n);
  if (l < 1) throw InputError("lupini_witnesses: need 3^l <= n with l >= 1");
  Index cube = 1;
  for (Index k = 0; k < l; ++k) {
    if (cube > n / 3) throw InputError("lupini_witnesses: 3^l exceeds n");
    cube *= 3;
  }
  const auto a12 = permutation_matrix(Permutation({1, 0, 2}), field);
  const auto a23 = permutation_matrix(Permutation({0, 2, 1}), field);
  auto pow3 = [](Index e) {
    Index r = 1;
    for (Index k = 0; k < e; ++k) r *= 3;
    return r;
  };
  LupiniWitnesses<S> w;
  w.n = n;
  w.l = l;
  w.maximal = cube > n / 3;
  const auto pad = identity(field, n - cube);
  for (Index i = 1; i <= l; ++i) {
    const auto gi = tensor(tensor_power(a12, static_cast<int>(i)), identity(field, pow3(l - i)));
    const auto hi = tensor(tensor(identity(field, pow3(i - 1)), a23), identity(field, pow3(l - i)));
    w.g.push_back(direct_sum(gi, pad));
    w.h.push_back(direct_sum(hi, pad));
  }
  const Rational expected(BigInt(static_cast<long>(cube - cube / 3)), BigInt(static_cast<long>(n)));
  const auto id = identity(field, n);
  w.min_distance = Rational(1);
  w.all_hold = true;
  for (Index i = 1; i <= l; ++i)
    for (Index j = 1; j <= l; ++j) {
      const auto& gi = w.g[static_cast<std::size_t>(i - 1)];
      const auto& hj = w.h[static_cast<std::size_t>(j - 1)];
      const Matrix<S> gt = gi.transpose(), ht = hj.transpose();  // permutation matrices
      const auto comm = commutator_with_inverses(gi, gt, hj, ht);
      CommutatorRow row{i, j, equal(comm, id), rank_distance(comm, id), i < j ? Rational(0) : expected, false};
      row.holds = i < j ? row.commute : row.distance == row.expected;
      if (i >= j) w.min_distance = min(w.min_distance, row.distance);
      w.all_hold = w.all_hold && row.holds;
      w.rows.push_back(row);
    }
  w.gamma_holds = w.min_distance >= Rational(BigInt(2), BigInt(9));
  if (w.maximal) w.all_hold = w.all_hold && w.gamma_holds;
  return w;
}

// ---------------------------------------------------------------------------
// Folner left multiplication

using SparseVector = std::vector<std::pair<std::string, Rational>>;

/// A patch L of an ambient algebra together with a finite subspace S (by basis
/// labels) and, for each basis element a of L, a -> (s -> a s) on the part of S
/// that left multiplication by a keeps inside S.
struct FolnerData {
  AlgebraPatch patch;
  std::vector<std::string> subspace;
  /// Indexed like patch.basis.
  std::vector<std::vector<std::pair<std::string, SparseVector>>> actions;
};

/// L = span{1, x, ..., x^d} inside F[x], S = span{1, ..., x^(k-1)}.
FolnerData truncated_polynomial_folner(std::size_t k, std::size_t d = 1);

template <class S>
struct FolnerResult {
  std::vector<Matrix<S>> phi;
  AlgebraCheck<S> check;
  std::vector<Rational> rho;  // rho(phi(a)) per basis element
  Rational min_rho;
};

template <class F>
FolnerResult<typename F::Scalar> folner_left_mult_rep(const F& field, const FolnerData& data, const Rational& epsilon) {
  using S = typename F::Scalar;
  if (data.actions.size() != data.patch.basis.size()) throw InputError("folner: one action per basis element of L");
  const auto dim = static_cast<Index>(data.subspace.size());
  auto position = [&](const std::string& label) -> Index {
    for (std::size_t i = 0; i < data.subspace.size(); ++i)
      if (data.subspace[i] == label) return static_cast<Index>(i);
    throw InputError("folner: '" + label + "' is not in the subspace S");
  };
  FolnerResult<S> r;
  for (std::size_t a = 0; a < data.actions.size(); ++a) {
    auto m = zeros(field, dim, dim);
    for (const auto& [source, image] : data.actions[a]) {
      const Index col = position(source);
      for (const auto& [target, coeff] : image) {
        if (!std::count(data.subspace.begin(), data.subspace.end(), target))
          throw InputError("folner: " + data.patch.basis[a] + " * " + source + " leaves S");
        m(position(target), col) += field.from_rational(coeff);
      }
    }
    r.rho.push_back(normalized_rank(m));
    r.phi.push_back(std::move(m));
  }
  r.check = algebra_almost_rep_check(field, data.patch, r.phi, epsilon);
  r.min_rho = Rational(1);
  for (const auto& v : r.rho) r.min_rho = min(r.min_rho, v);
  return r;
}

}  // namespace rankwb
