#pragma once

// Almost-representations of group fragments and their defect/separation reports.

#include <string>
#include <utility>
#include <vector>

#include "rankwb/elimination.hpp"
#include "rankwb/group.hpp"

namespace rankwb {

/// phi : E -> GL_n(F) with phi(e) = I. Matrices are indexed by table Id.
template <class S>
class AlmostRep {
 public:
  using Scalar = S;
  using FieldType = field_t<S>;
  using Id = GroupTable::Id;

  /// Validates sizes, phi(e) = I and invertibility of every matrix.
  AlmostRep(GroupTable table, FieldType field, std::vector<Matrix<S>> matrices)
      : table_(std::move(table)), field_(std::move(field)), matrices_(std::move(matrices)) {
    if (matrices_.size() != table_.size()) throw InputError("rep must assign a matrix to every group element");
    dim_ = matrices_.empty() ? 0 : matrices_.front().rows();
    for (Id g = 0; g < matrices_.size(); ++g) {
      auto& m = matrices_[g];
      if (m.rows() != dim_ || m.cols() != dim_)
        throw InputError("matrix for '" + table_.label(g) + "' is not " + std::to_string(dim_) + "x" + std::to_string(dim_));
      m = bind(field_, std::move(m));
      if (!is_invertible(m)) throw InputError("matrix for '" + table_.label(g) + "' is singular");
    }
    if (!equal(matrices_[table_.identity()], identity(field_, dim_)))
      throw InputError("the identity element must map to the identity matrix");
  }

  const GroupTable& table() const { return table_; }
  const FieldType& field() const { return field_; }
  Index dim() const { return dim_; }
  const Matrix<S>& operator[](Id g) const { return matrices_.at(g); }
  const Matrix<S>& at(const std::string& label) const { return matrices_.at(table_.index(label)); }
  const std::vector<Matrix<S>>& matrices() const { return matrices_; }

 private:
  GroupTable table_;
  FieldType field_;
  Index dim_ = 0;
  std::vector<Matrix<S>> matrices_;
};

struct PairDefect {
  GroupTable::Id g, h, gh;
  Rational defect;  // rho(phi(g) phi(h) - phi(gh))
};

struct ElementSeparation {
  GroupTable::Id g;
  Rational separation;  // rho(I - phi(g))
};

struct DefectReport {
  Rational max_defect;
  Rational min_separation;
  /// No non-identity elements: min_separation is 1 by convention.
  bool vacuous = false;
  std::vector<PairDefect> pairs;
  std::vector<ElementSeparation> elements;
  /// Non-identity elements with separation 0.
  std::vector<GroupTable::Id> degenerate;
  /// min_separation > 1/4 - max_defect.
  bool quarter_certified = false;
};

template <class S>
Rational separation(const AlmostRep<S>& rep, GroupTable::Id g) {
  return rank_distance(identity(rep.field(), rep.dim()), rep[g]);
}

template <class S>
DefectReport defect_report(const AlmostRep<S>& rep) {
  DefectReport r;
  for (const auto& t : rep.table().defined_triples()) {
    const Rational d = rank_distance(mul(rep[t.g], rep[t.h]), rep[t.gh]);
    if (d > r.max_defect) r.max_defect = d;
    r.pairs.push_back({t.g, t.h, t.gh, d});
  }
  r.min_separation = Rational(1);
  r.vacuous = true;
  for (GroupTable::Id g = 0; g < rep.table().size(); ++g) {
    if (g == rep.table().identity()) continue;
    const Rational s = separation(rep, g);
    r.vacuous = false;
    r.min_separation = min(r.min_separation, s);
    if (s.is_zero()) r.degenerate.push_back(g);
    r.elements.push_back({g, s});
  }
  r.quarter_certified = r.min_separation > Rational(BigInt(1), BigInt(4)) - r.max_defect;
  return r;
}

/// Applies `fn` to every matrix, keeping the table.
template <class S, class Fn>
AlmostRep<S> map_matrices(const AlmostRep<S>& rep, Fn fn) {
  std::vector<Matrix<S>> out;
  out.reserve(rep.table().size());
  for (GroupTable::Id g = 0; g < rep.table().size(); ++g) out.push_back(fn(rep[g]));
  return AlmostRep<S>(rep.table(), rep.field(), std::move(out));
}

}  // namespace rankwb
