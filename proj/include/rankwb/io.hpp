#pragma once

// JSON formats.
//
//   field     "Q" | "Fp:101" | "NF:1,0,1"
//   scalar    "a/b" or an integer; over a number field also a list of
//             coefficients [c0, c1, ...] (low to high)
//   matrix    {"field": ..., "rows": r, "cols": c, "entries": [[...], ...]}
//             or just the list of rows
//   group     {"elements": [...], "identity": "e", "product": {"a,b": "c"},
//              "inverse": {"a": "b"}}  or  {"cyclic": n}
//   rep       {"field": ..., "group": ..., "matrices": {"label": matrix}}
//             or with "perms": {"label": [images]} instead of matrices
//
// Every rational is written in canonical form, so re-serialising a parsed
// document reproduces it byte for byte.

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rankwb/amplify.hpp"
#include "rankwb/constructions.hpp"
#include "rankwb/reduce.hpp"

namespace rankwb::io {

using Json = nlohmann::ordered_json;

Json read_json_file(const std::filesystem::path& path);
Json parse_json(const std::string& text);

// ---------------------------------------------------------------------------
// Scalars and matrices

Rational parse_rational(const Json& j);
Json scalar_json(const Rational& x);
Json scalar_json(const Zp& x);
Json scalar_json(const NFElem& x);

template <class F>
typename F::Scalar parse_scalar(const F& field, const Json& j) {
  if constexpr (std::is_same_v<F, NumberField>) {
    if (j.is_array()) {
      std::vector<Rational> c;
      for (const auto& x : j) c.push_back(parse_rational(x));
      return field.from_coefficients(std::move(c));
    }
  }
  return field.from_rational(parse_rational(j));
}

template <class S>
Json entries_json(const Matrix<S>& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(scalar_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class F>
Json matrix_json(const F& field, const Matrix<typename F::Scalar>& m) {
  return Json{{"field", field.spec().str()}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries_json(m)}};
}

template <class F>
Matrix<typename F::Scalar> parse_matrix(const F& field, const Json& j) {
  const Json* entries = &j;
  if (j.is_object()) {
    if (!j.contains("entries")) throw InputError("matrix object needs \"entries\"");
    entries = &j.at("entries");
  }
  if (!entries->is_array()) throw InputError("matrix entries must be a list of rows");
  const auto rows = static_cast<Index>(entries->size());
  const Index cols = rows == 0 ? 0 : static_cast<Index>(entries->front().size());
  auto m = zeros(field, rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const auto& row = (*entries)[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols) throw InputError("matrix rows must have equal length");
    for (Index c = 0; c < cols; ++c) m(i, c) = parse_scalar(field, row[static_cast<std::size_t>(c)]);
  }
  if (j.is_object()) {
    if (j.contains("rows") && j.at("rows").get<Index>() != rows) throw InputError("matrix \"rows\" disagrees with entries");
    if (j.contains("cols") && j.at("cols").get<Index>() != cols) throw InputError("matrix \"cols\" disagrees with entries");
  }
  return m;
}

/// `override` wins, then the document's "field", then Q.
FieldSpec document_field(const Json& j, const std::optional<FieldSpec>& override);

// ---------------------------------------------------------------------------
// Groups and representations

Json table_json(const GroupTable& t);
GroupTable parse_table(const Json& j);

std::vector<Permutation> parse_permutations(const GroupTable& table, const Json& perms);

using AnyRep = std::variant<AlmostRep<Rational>, AlmostRep<Zp>, AlmostRep<NFElem>>;

struct RepDocument {
  AnyRep rep;
  std::optional<std::vector<Permutation>> perms;
};

RepDocument parse_rep(const Json& j, const std::optional<FieldSpec>& override = std::nullopt);

template <class F>
AlmostRep<typename F::Scalar> parse_rep_over(const F& field, const Json& j) {
  const GroupTable table = parse_table(j.at("group"));
  std::vector<Matrix<typename F::Scalar>> mats;
  if (j.contains("perms")) {
    for (const auto& p : parse_permutations(table, j.at("perms"))) mats.push_back(permutation_matrix(p, field));
  } else {
    if (!j.contains("matrices") || !j.at("matrices").is_object())
      throw InputError("rep needs a \"matrices\" object keyed by element label");
    const auto& ms = j.at("matrices");
    for (const auto& label : table.labels()) {
      if (!ms.contains(label)) throw InputError("rep has no matrix for '" + label + "'");
      mats.push_back(parse_matrix(field, ms.at(label)));
    }
    for (const auto& item : ms.items())
      if (!table.contains(item.key())) throw InputError("matrix given for unknown element '" + item.key() + "'");
  }
  return AlmostRep<typename F::Scalar>(table, field, std::move(mats));
}

template <class S>
Json rep_json(const AlmostRep<S>& rep) {
  Json ms = Json::object();
  for (GroupTable::Id g = 0; g < rep.table().size(); ++g) ms[rep.table().label(g)] = entries_json(rep[g]);
  return Json{{"field", rep.field().spec().str()}, {"group", table_json(rep.table())}, {"matrices", std::move(ms)}};
}

Json perms_rep_json(const GroupTable& table, const std::vector<Permutation>& perms);

ExtensionData parse_extension(const Json& j);
Json extension_json(const ExtensionData& d);

AlgebraPatch parse_patch(const Json& j);
Json patch_json(const AlgebraPatch& p);

FolnerData parse_folner(const Json& j);
Json folner_json(const FolnerData& d);

// ---------------------------------------------------------------------------
// Reports

Json report_json(const DefectReport& r, const GroupTable& t);
Json bound_json(const BoundChoice& b);
Json trace_json(const AmplificationTrace& t);
Json boost_rows_json(const std::vector<BoostRow>& rows, const GroupTable& t);
Json certificate_json(const ReductionCertificate& c, const GroupTable& t);
Json lupini_rows_json(const std::vector<CommutatorRow>& rows);
Json extension_rows_json(const std::vector<ExtensionRow>& rows, const GroupTable& t);
Json cocycle_json(const CocycleCheck& c);

template <class S>
Json sofic_json(const SoficEmbedding<S>& e) {
  const auto& t = e.rep.table();
  Json elements = Json::array(), pairs = Json::array();
  for (const auto& row : e.elements)
    elements.push_back({{"g", t.label(row.g)},
                        {"cycles", row.counts.cycles},
                        {"fixed", row.counts.fixed},
                        {"hamming", row.hamming.str()},
                        {"rho", row.rho.str()},
                        {"formulas_hold", row.formulas_hold},
                        {"sandwich_holds", row.sandwich_holds}});
  for (const auto& row : e.pairs)
    pairs.push_back({{"g", t.label(row.g)},
                     {"h", t.label(row.h)},
                     {"gh", t.label(row.gh)},
                     {"permutation_defect", row.permutation_defect.str()},
                     {"matrix_defect", row.matrix_defect.str()},
                     {"holds", row.holds}});
  return Json{{"all_hold", e.all_hold}, {"elements", std::move(elements)}, {"pairs", std::move(pairs)}};
}

template <class S>
Json boost_json(const BoostResult<S>& b) {
  return Json{{"level", b.level},
              {"input_dim", b.input_dim},
              {"output_dim", b.output_dim},
              {"input_defect", b.input_defect.str()},
              {"output_defect", b.output_defect.str()},
              {"defect_bound", b.defect_bound.str()},
              {"defect_bound_holds", b.defect_bound_holds},
              {"elements", boost_rows_json(b.rows, b.rep.table())},
              {"all_hold", b.all_hold}};
}

template <class S>
Json combine_json(const CombineResult<S>& r) {
  Json rho = Json::array();
  for (const auto& x : r.block_rho) rho.push_back(x.str());
  return Json{{"dim", r.dim},          {"weights", r.weights},          {"trailing", r.trailing},
              {"block_rho", rho},      {"epsilon_rho", r.epsilon_rho.str()}, {"lhs", r.lhs.str()},
              {"rhs", r.rhs.str()},    {"identity_holds", r.identity_holds}};
}

template <class S>
Json elimination_json(const EliminationWitness<S>& w) {
  Json factors = Json::array();
  for (const auto& x : w.factor_rho) factors.push_back(x.str());
  return Json{{"rho", w.rho.str()},
              {"factor_rho", std::move(factors)},
              {"predicted", w.predicted.str()},
              {"degenerate", w.degenerate},
              {"matches", w.matches}};
}

template <class S>
Json profile_json(const JordanProfile<S>& p) {
  return Json{{"eigenvalue", scalar_json(p.eigenvalue)},
              {"blocks", p.blocks},
              {"rank_sequence", p.rank_sequence},
              {"multiplicity", p.multiplicity()},
              {"block_fraction", p.block_fraction().str()}};
}

template <class S>
Json algebra_check_json(const AlgebraCheck<S>& c, const Rational& epsilon) {
  return Json{{"n", c.n},
              {"kernel_dim", c.kernel_dim},
              {"deficiency", c.deficiency.str()},
              {"epsilon", epsilon.str()},
              {"conditions", c.conditions.size()},
              {"certified", c.certified}};
}

}  // namespace rankwb::io
