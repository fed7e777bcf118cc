#include "rankwb/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace rankwb::io {

namespace {

std::pair<std::string, std::string> split_pair(const std::string& key) {
  const auto comma = key.find(',');
  if (comma == std::string::npos || key.find(',', comma + 1) != std::string::npos)
    throw InputError("pair key '" + key + "' must have the form \"a,b\"");
  return {key.substr(0, comma), key.substr(comma + 1)};
}

std::string join_pair(const std::string& a, const std::string& b) { return a + "," + b; }

const Json& require(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string(what) + " needs \"" + key + "\"");
  return j.at(key);
}

std::string label_of(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw InputError("element labels must be strings");
}

std::vector<std::string> label_list(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be a list of labels");
  std::vector<std::string> out;
  for (const auto& x : j) out.push_back(label_of(x));
  return out;
}

std::vector<std::pair<std::size_t, Rational>> sparse_in(const AlgebraPatch& p, const Json& j) {
  std::vector<std::pair<std::size_t, Rational>> out;
  for (const auto& item : j.items()) out.emplace_back(p.index(item.key()), parse_rational(item.value()));
  return out;
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

Rational parse_rational(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(BigInt(std::to_string(j.get<long long>()), 10));
  throw InputError("expected a rational string or an integer, got " + j.dump());
}

Json scalar_json(const Rational& x) { return x.str(); }

Json scalar_json(const Zp& x) { return std::to_string(x.residue()); }

Json scalar_json(const NFElem& x) {
  const std::size_t d = x.context() ? x.context()->degree : 1;
  Json out = Json::array();
  for (std::size_t i = 0; i < d; ++i) out.push_back(x.coeff(i).str());
  return out;
}

FieldSpec document_field(const Json& j, const std::optional<FieldSpec>& override) {
  if (override) return *override;
  if (j.is_object() && j.contains("field")) {
    if (!j.at("field").is_string()) throw InputError("\"field\" must be a string such as \"Q\" or \"Fp:101\"");
    return FieldSpec::parse(j.at("field").get<std::string>());
  }
  return FieldSpec::rationals();
}

Json table_json(const GroupTable& t) {
  Json product = Json::object(), inverse = Json::object();
  const GroupTable::Id e = t.identity();
  for (const auto& tr : t.defined_triples())
    if (tr.g != e && tr.h != e) product[join_pair(t.label(tr.g), t.label(tr.h))] = t.label(tr.gh);
  for (GroupTable::Id g = 0; g < t.size(); ++g)
    if (g != e && t.inverse(g)) inverse[t.label(g)] = t.label(*t.inverse(g));
  return Json{{"elements", t.labels()},
              {"identity", t.label(e)},
              {"product", std::move(product)},
              {"inverse", std::move(inverse)}};
}

GroupTable parse_table(const Json& j) {
  if (j.is_object() && j.contains("cyclic")) {
    const auto n = j.at("cyclic").get<long long>();
    if (n < 1) throw InputError("cyclic group order must be positive");
    return GroupTable::cyclic(static_cast<std::size_t>(n));
  }
  const auto labels = label_list(require(j, "elements", "group table"), "\"elements\"");
  for (const auto& l : labels)
    if (l.find(',') != std::string::npos) throw InputError("element label '" + l + "' may not contain ','");
  const std::string identity = j.contains("identity") ? label_of(j.at("identity")) : "e";
  GroupTable t(labels, identity);
  if (j.contains("product"))
    for (const auto& item : j.at("product").items()) {
      const auto [a, b] = split_pair(item.key());
      t.set_product(a, b, label_of(item.value()));
    }
  if (j.contains("inverse"))
    for (const auto& item : j.at("inverse").items()) t.set_inverse(item.key(), label_of(item.value()));
  t.validate();
  return t;
}

std::vector<Permutation> parse_permutations(const GroupTable& table, const Json& perms) {
  if (!perms.is_object()) throw InputError("\"perms\" must map element labels to image lists");
  std::vector<Permutation> out;
  for (const auto& label : table.labels()) {
    if (!perms.contains(label)) throw InputError("no permutation for '" + label + "'");
    out.emplace_back(perms.at(label).get<std::vector<std::size_t>>());
  }
  return out;
}

RepDocument parse_rep(const Json& j, const std::optional<FieldSpec>& override) {
  if (!j.is_object()) throw InputError("a representation must be a JSON object");
  require(j, "group", "representation");
  const Field field = make_field(document_field(j, override));
  RepDocument doc{std::visit([&](const auto& f) -> AnyRep { return parse_rep_over(f, j); }, field), std::nullopt};
  if (j.contains("perms")) doc.perms = parse_permutations(parse_table(j.at("group")), j.at("perms"));
  return doc;
}

Json perms_rep_json(const GroupTable& table, const std::vector<Permutation>& perms) {
  Json ps = Json::object();
  for (GroupTable::Id g = 0; g < table.size(); ++g) ps[table.label(g)] = perms.at(g).images();
  return Json{{"group", table_json(table)}, {"perms", std::move(ps)}};
}

ExtensionData parse_extension(const Json& j) {
  ExtensionData d;
  d.quotient = parse_table(require(j, "quotient", "extension"));
  d.fragment = parse_table(require(j, "fragment", "extension"));
  const auto& lift = require(j, "lift", "extension");
  for (const auto& gamma : d.quotient.labels()) {
    if (!lift.contains(gamma)) throw InputError("extension: no lift for '" + gamma + "'");
    d.lift.push_back(label_of(lift.at(gamma)));
  }
  const auto& proj = require(j, "projection", "extension");
  const auto& coc = require(j, "cocycle", "extension");
  for (const auto& g : d.fragment.labels()) {
    if (!proj.contains(g)) throw InputError("extension: no projection for '" + g + "'");
    d.projection.push_back(d.quotient.index(label_of(proj.at(g))));
    if (!coc.contains(g)) throw InputError("extension: no cocycle row for '" + g + "'");
    std::vector<std::string> row;
    for (const auto& gamma : d.quotient.labels()) {
      if (!coc.at(g).contains(gamma)) throw InputError("extension: alpha(" + g + ", " + gamma + ") missing");
      row.push_back(label_of(coc.at(g).at(gamma)));
    }
    d.cocycle.push_back(std::move(row));
  }
  d.validate();
  return d;
}

Json extension_json(const ExtensionData& d) {
  Json lift = Json::object(), proj = Json::object(), coc = Json::object();
  for (GroupTable::Id q = 0; q < d.quotient.size(); ++q) lift[d.quotient.label(q)] = d.lift[q];
  for (GroupTable::Id g = 0; g < d.fragment.size(); ++g) {
    proj[d.fragment.label(g)] = d.quotient.label(d.projection[g]);
    Json row = Json::object();
    for (GroupTable::Id q = 0; q < d.quotient.size(); ++q) row[d.quotient.label(q)] = d.cocycle[g][q];
    coc[d.fragment.label(g)] = std::move(row);
  }
  return Json{{"quotient", table_json(d.quotient)},
              {"lift", std::move(lift)},
              {"fragment", table_json(d.fragment)},
              {"projection", std::move(proj)},
              {"cocycle", std::move(coc)}};
}

AlgebraPatch parse_patch(const Json& j) {
  AlgebraPatch p;
  p.basis = label_list(require(j, "basis", "algebra patch"), "\"basis\"");
  p.unit = j.contains("unit") ? label_of(j.at("unit")) : "1";
  if (j.contains("products"))
    for (const auto& item : j.at("products").items()) {
      const auto [a, b] = split_pair(item.key());
      p.products[{p.index(a), p.index(b)}] = sparse_in(p, item.value());
    }
  p.normalize();
  return p;
}

Json patch_json(const AlgebraPatch& p) {
  Json products = Json::object();
  for (const auto& [ij, coeffs] : p.products) {
    Json c = Json::object();
    for (const auto& [k, v] : coeffs) c[p.basis[k]] = v.str();
    products[join_pair(p.basis[ij.first], p.basis[ij.second])] = std::move(c);
  }
  return Json{{"basis", p.basis}, {"unit", p.unit}, {"products", std::move(products)}};
}

FolnerData parse_folner(const Json& j) {
  FolnerData d;
  d.patch = parse_patch(j);
  d.subspace = label_list(require(j, "subspace", "Folner data"), "\"subspace\"");
  const auto& actions = require(j, "actions", "Folner data");
  for (const auto& item : actions.items()) d.patch.index(item.key());
  for (const auto& a : d.patch.basis) {
    std::vector<std::pair<std::string, SparseVector>> action;
    if (actions.contains(a))
      for (const auto& src : actions.at(a).items()) {
        SparseVector image;
        for (const auto& t : src.value().items()) image.emplace_back(t.key(), parse_rational(t.value()));
        action.emplace_back(src.key(), std::move(image));
      }
    d.actions.push_back(std::move(action));
  }
  return d;
}

Json folner_json(const FolnerData& d) {
  Json out = patch_json(d.patch);
  out["subspace"] = d.subspace;
  Json actions = Json::object();
  for (std::size_t a = 0; a < d.actions.size(); ++a) {
    Json action = Json::object();
    for (const auto& [src, image] : d.actions[a]) {
      Json img = Json::object();
      for (const auto& [t, c] : image) img[t] = c.str();
      action[src] = std::move(img);
    }
    actions[d.patch.basis[a]] = std::move(action);
  }
  out["actions"] = std::move(actions);
  return out;
}

Json report_json(const DefectReport& r, const GroupTable& t) {
  Json pairs = Json::array(), elements = Json::array(), degenerate = Json::array();
  for (const auto& p : r.pairs)
    pairs.push_back({{"g", t.label(p.g)}, {"h", t.label(p.h)}, {"gh", t.label(p.gh)}, {"defect", p.defect.str()}});
  for (const auto& e : r.elements) elements.push_back({{"g", t.label(e.g)}, {"separation", e.separation.str()}});
  for (auto g : r.degenerate) degenerate.push_back(t.label(g));
  return Json{{"max_defect", r.max_defect.str()},
              {"min_separation", r.min_separation.str()},
              {"quarter_certified", r.quarter_certified},
              {"vacuous", r.vacuous},
              {"degenerate", std::move(degenerate)},
              {"pairs", std::move(pairs)},
              {"elements", std::move(elements)}};
}

Json bound_json(const BoundChoice& b) {
  Json out{{"kind", to_string(b.kind)}, {"value", b.value.str()}};
  out["c"] = b.c ? Json(b.c->str()) : Json(nullptr);
  return out;
}

Json trace_json(const AmplificationTrace& t) {
  Json levels = Json::array();
  for (std::size_t i = 0; i < t.dims.size(); ++i) {
    Json row{{"level", i + 1}, {"dim", t.dims[i]}, {"m1", t.m1_values[i].str()}, {"separation", t.separations[i].str()}};
    if (i < t.j_values.size()) row["j"] = t.j_values[i].str();
    if (i < t.f_bounds.size()) {
      row["f_bound"] = t.f_bounds[i].str();
      row["holds"] = static_cast<bool>(t.bound_holds[i]);
    }
    levels.push_back(std::move(row));
  }
  return Json{{"level", t.level}, {"bound", bound_json(t.bound)}, {"levels", std::move(levels)},
              {"all_bounds_hold", t.all_bounds_hold}};
}

Json boost_rows_json(const std::vector<BoostRow>& rows, const GroupTable& t) {
  Json out = Json::array();
  for (const auto& r : rows) {
    Json row{{"g", t.label(r.g)},
             {"m1", r.m1.str()},
             {"m1_level", r.m1_level.str()},
             {"rho_psi1", r.rho_psi1.str()},
             {"rho_psi2", r.rho_psi2.str()},
             {"separation", r.rho_total.str()},
             {"min_bound", r.min_bound.str()},
             {"min_bound_holds", r.min_bound_holds},
             {"degenerate", r.degenerate}};
    if (r.j) {
      row["j"] = r.j->str();
      row["j_level"] = r.j_level->str();
    }
    if (r.f_bound) {
      row["bound"] = bound_json(r.bound);
      row["f_bound"] = r.f_bound->str();
      row["f_bound_holds"] = r.f_bound_holds;
    }
    out.push_back(std::move(row));
  }
  return out;
}

Json certificate_json(const ReductionCertificate& c, const GroupTable& t) {
  Json exclusions = Json::array(), ranks = Json::array(), pairs = Json::array();
  for (std::size_t i = 0; i < c.exclusions.size(); ++i) {
    const auto& e = c.exclusions[i];
    const bool hit = std::find(c.violated.begin(), c.violated.end(), i) != c.violated.end();
    exclusions.push_back(
        {{"kind", to_string(e.kind)}, {"element", t.label(e.element)}, {"value", e.value.str()}, {"violated", hit}});
  }
  for (const auto& r : c.ranks) {
    Json row{{"element", t.label(r.element)}, {"rank_before", r.rank_before}};
    row["rank_after"] = r.rank_after ? Json(*r.rank_after) : Json(nullptr);
    row["minor_det"] = r.minor_det.str();
    row["invertible_after"] = r.invertible_after;
    ranks.push_back(std::move(row));
  }
  for (const auto& p : c.pairs) {
    Json row{{"g", t.label(p.g)}, {"h", t.label(p.h)}, {"gh", t.label(p.gh)}, {"defect_before", p.defect_before.str()}};
    row["defect_after"] = p.defect_after ? Json(p.defect_after->str()) : Json(nullptr);
    pairs.push_back(std::move(row));
  }
  Json out{{"p", c.p},
           {"valid", c.valid},
           {"ranks_preserved", c.ranks_preserved},
           {"invertible", c.invertible},
           {"defect_monotone", c.defect_monotone},
           {"defect_before", c.defect_before.str()}};
  out["defect_after"] = c.defect_after ? Json(c.defect_after->str()) : Json(nullptr);
  out["exclusions"] = std::move(exclusions);
  out["ranks"] = std::move(ranks);
  out["pairs"] = std::move(pairs);
  return out;
}

Json lupini_rows_json(const std::vector<CommutatorRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows)
    out.push_back({{"i", r.i},
                   {"j", r.j},
                   {"commute", r.commute},
                   {"distance", r.distance.str()},
                   {"expected", r.expected.str()},
                   {"holds", r.holds}});
  return out;
}

Json extension_rows_json(const std::vector<ExtensionRow>& rows, const GroupTable& t) {
  Json out = Json::array();
  for (const auto& r : rows)
    out.push_back({{"g", t.label(r.g)},
                   {"in_h", r.in_h},
                   {"free_action", r.free_action},
                   {"unspecified", r.unspecified},
                   {"cycles", r.cycles},
                   {"separation", r.separation.str()},
                   {"rho", r.rho.str()},
                   {"kernel_bound", r.kernel_bound.str()},
                   {"holds", r.holds}});
  return out;
}

Json cocycle_json(const CocycleCheck& c) {
  return Json{{"checked", c.checked}, {"skipped", c.skipped}, {"violations", c.violations}};
}

}  // namespace rankwb::io
