#include "rankwb/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "rankwb/demo.hpp"
#include "rankwb/io.hpp"
#include "rankwb/primes.hpp"

namespace rankwb::cli {

namespace {

using io::Json;

struct Options {
  std::string field;
  std::optional<long long> budget;
  std::string output;

  std::string rep, matrix, patch, folner, thetas, eliminate, data, group;
  std::string epsilon = "1/4";
  std::string bound_constant;
  std::string element;
  std::string eigenvalue = "1";
  std::string alpha = "1", beta = "1";
  int level = 2;
  int depth = 2;
  long long s = 0, t = 0;
  long long n = 0;
  std::optional<long long> l;
  std::optional<unsigned long long> prime;
  unsigned long long start = 2;
  long long cyclic = 0;
  long long window = 0;
  long long degree = 1;
  bool with_matrices = false;
  bool perms = false;
};

struct Outcome {
  Json doc;
  int code = ok;
};

std::optional<FieldSpec> field_override(const Options& o) {
  if (o.field.empty()) return std::nullopt;
  auto spec = FieldSpec::parse(o.field);
  validate(spec);
  return spec;
}

Index budget(const Options& o) {
  if (o.budget) {
    if (*o.budget < 1) throw InputError("--budget must be positive");
    return static_cast<Index>(*o.budget);
  }
  return budget_from_env();
}

std::optional<Rational> optional_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return Rational::parse(text);
}

Json error_doc(const std::string& kind, const std::string& message) {
  return Json{{"error", {{"kind", kind}, {"message", message}}}};
}

/// "e:1,g:-1" -> [(e, 1), (g, -1)]
template <class F>
GroupAlgebraElement<typename F::Scalar> parse_element(const F& field, const std::string& text) {
  GroupAlgebraElement<typename F::Scalar> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const std::string term = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    const auto colon = term.rfind(':');
    if (colon == std::string::npos) throw InputError("--element terms must look like label:coefficient");
    out.emplace_back(term.substr(0, colon), field.from_rational(Rational::parse(term.substr(colon + 1))));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------

Outcome certify_rep(const Options& o) {
  auto doc = io::parse_rep(io::read_json_file(o.rep), field_override(o));
  return std::visit(
      [&](const auto& rep) {
        const auto report = defect_report(rep);
        Outcome out{io::report_json(report, rep.table()), report.quarter_certified ? ok : failed};
        out.doc["field"] = rep.field().spec().str();
        out.doc["dim"] = rep.dim();
        if (doc.perms) {
          const auto sofic = embed_sofic_rep(rep.table(), *doc.perms, rep.field());
          out.doc["sofic"] = io::sofic_json(sofic);
          if (!sofic.all_hold) out.code = failed;
        }
        return out;
      },
      doc.rep);
}

Outcome certify_patch(const Options& o) {
  const Json j = io::read_json_file(o.patch);
  const auto patch = io::parse_patch(j);
  const Rational eps = j.contains("epsilon") ? io::parse_rational(j.at("epsilon")) : Rational::parse(o.epsilon);
  if (!j.contains("psi")) throw InputError("algebra patch needs \"psi\" matrices keyed by basis label");
  return std::visit(
      [&](const auto& f) {
        using S = typename std::decay_t<decltype(f)>::Scalar;
        std::vector<Matrix<S>> psi;
        for (const auto& label : patch.basis) {
          if (!j.at("psi").contains(label)) throw InputError("no psi matrix for '" + label + "'");
          psi.push_back(io::parse_matrix(f, j.at("psi").at(label)));
        }
        const auto check = algebra_almost_rep_check(f, patch, psi, eps);
        Outcome out{io::algebra_check_json(check, eps), check.certified ? ok : failed};
        out.doc["field"] = f.spec().str();
        return out;
      },
      make_field(io::document_field(j, field_override(o))));
}

Outcome certify_folner(const Options& o) {
  FolnerData data;
  Json source;
  if (!o.folner.empty()) {
    source = io::read_json_file(o.folner);
    data = io::parse_folner(source);
  } else {
    if (o.window < 1 || o.degree < 1) throw InputError("--window and --degree must be positive");
    data = truncated_polynomial_folner(static_cast<std::size_t>(o.window), static_cast<std::size_t>(o.degree));
  }
  const Rational eps = source.contains("epsilon") ? io::parse_rational(source.at("epsilon")) : Rational::parse(o.epsilon);
  return std::visit(
      [&](const auto& f) {
        const auto r = folner_left_mult_rep(f, data, eps);
        Json rho = Json::object();
        for (std::size_t a = 0; a < r.rho.size(); ++a) rho[data.patch.basis[a]] = r.rho[a].str();
        Outcome out{io::algebra_check_json(r.check, eps), r.check.certified ? ok : failed};
        out.doc["rho"] = std::move(rho);
        out.doc["min_rho"] = r.min_rho.str();
        out.doc["field"] = f.spec().str();
        return out;
      },
      make_field(io::document_field(source, field_override(o))));
}

Outcome cmd_certify(const Options& o) {
  const int given = !o.rep.empty() + !o.patch.empty() + (!o.folner.empty() || o.window > 0);
  if (given != 1) throw InputError("certify needs exactly one of --rep, --patch, --folner/--window");
  if (!o.rep.empty()) return certify_rep(o);
  if (!o.patch.empty()) return certify_patch(o);
  return certify_folner(o);
}

Outcome cmd_align(const Options& o) {
  if (o.rep.empty()) throw InputError("align needs --rep");
  auto doc = io::parse_rep(io::read_json_file(o.rep), field_override(o));
  const Rational eps = Rational::parse(o.epsilon);
  return std::visit(
      [&](const auto& rep) {
        const auto a = align_basis(rep, eps);
        Json j{{"dim", rep.dim()},
               {"agreement", a.agreement},
               {"columns_agree", a.columns_agree},
               {"epsilon", eps.str()},
               {"report", io::report_json(defect_report(a.rep), a.rep.table())},
               {"basis", io::entries_json(a.basis)},
               {"rep", io::rep_json(a.rep)}};
        return Outcome{std::move(j), a.columns_agree ? ok : failed};
      },
      doc.rep);
}

Outcome cmd_amplify(const Options& o) {
  const Index b = budget(o);
  const auto c = optional_rational(o.bound_constant);
  if (!o.matrix.empty() == !o.rep.empty()) throw InputError("amplify needs exactly one of --matrix, --rep");
  if (!o.matrix.empty()) {
    const Json j = io::read_json_file(o.matrix);
    return std::visit(
        [&](const auto& f) {
          const auto trace = tensor_square_iterate(io::parse_matrix(f, j), o.level, b, c);
          Outcome out{io::trace_json(trace), trace.all_bounds_hold ? ok : failed};
          out.doc["field"] = f.spec().str();
          return out;
        },
        make_field(io::document_field(j, field_override(o))));
  }
  auto doc = io::parse_rep(io::read_json_file(o.rep), field_override(o));
  return std::visit(
      [&](const auto& rep) {
        const auto boosted = boost_separation(rep, o.level, b, c);
        Outcome out{io::boost_json(boosted), boosted.all_hold ? ok : failed};
        out.doc["field"] = rep.field().spec().str();
        if (o.with_matrices) out.doc["rep"] = io::rep_json(boosted.rep);
        return out;
      },
      doc.rep);
}

Outcome cmd_combine(const Options& o) {
  const Index b = budget(o);
  if (!o.eliminate.empty()) {
    const Json j = io::read_json_file(o.eliminate);
    return std::visit(
        [&](const auto& f) {
          using S = typename std::decay_t<decltype(f)>::Scalar;
          std::vector<S> coeffs;
          std::vector<Matrix<S>> us;
          for (const auto& x : j.at("coeffs")) coeffs.push_back(io::parse_scalar(f, x));
          for (const auto& m : j.at("matrices")) us.push_back(io::parse_matrix(f, m));
          const auto w = tensor_elimination_witness(f, coeffs, us);
          return Outcome{io::elimination_json(w), w.matches && !w.degenerate ? ok : failed};
        },
        make_field(io::document_field(j, field_override(o))));
  }
  if (!o.thetas.empty()) {
    const Json j = io::read_json_file(o.thetas);
    return std::visit(
        [&](const auto& f) {
          using S = typename std::decay_t<decltype(f)>::Scalar;
          std::vector<Matrix<S>> thetas;
          for (const auto& m : j.at("thetas")) thetas.push_back(io::parse_matrix(f, m));
          const S eps = j.contains("epsilon") ? io::parse_scalar(f, j.at("epsilon")) : f.zero();
          const auto r = weighted_combine(f, thetas, eps, b);
          return Outcome{io::combine_json(r), r.identity_holds ? ok : failed};
        },
        make_field(io::document_field(j, field_override(o))));
  }
  if (o.rep.empty() || o.element.empty()) throw InputError("combine needs --thetas, --eliminate, or --rep with --element");
  auto doc = io::parse_rep(io::read_json_file(o.rep), field_override(o));
  return std::visit(
      [&](const auto& rep) {
        using S = typename std::decay_t<decltype(rep)>::Scalar;
        const auto f = parse_element(rep.field(), o.element);
        if (o.depth < 1) throw InputError("--depth must be >= 1");
        std::vector<Matrix<S>> thetas;
        Json per_depth = Json::array();
        for (int i = 1; i <= o.depth; ++i) {
          Index size = 1;
          for (int k = 0; k < i; ++k) size *= rep.dim();
          if (size > b) throw BudgetExceeded("tensor depth " + std::to_string(i) + " exceeds the size budget");
          thetas.push_back(group_algebra_apply(rep, f, i));
          per_depth.push_back(normalized_rank(thetas.back()).str());
        }
        const auto r = weighted_combine(rep.field(), thetas, augmentation<S>(rep.field(), f), b);
        Outcome out{io::combine_json(r), r.identity_holds ? ok : failed};
        out.doc["depth_rho"] = std::move(per_depth);
        out.doc["augmentation"] = io::scalar_json(augmentation<S>(rep.field(), f));
        return out;
      },
      doc.rep);
}

Outcome cmd_reduce(const Options& o) {
  if (o.rep.empty()) throw InputError("reduce needs --rep");
  auto doc = io::parse_rep(io::read_json_file(o.rep), field_override(o));
  const AlmostRep<Rational> rep = std::visit(
      [](const auto& r) -> AlmostRep<Rational> {
        using S = typename std::decay_t<decltype(r)>::Scalar;
        if constexpr (std::is_same_v<S, Rational>) {
          return r;
        } else if constexpr (std::is_same_v<S, NFElem>) {
          return restrict_rep(r);
        } else {
          throw InputError("reduce expects a representation over Q or a number field");
        }
      },
      doc.rep);
  Json choice_doc = nullptr;
  std::uint64_t p;
  if (o.prime) {
    p = *o.prime;
  } else {
    const auto choice = select_good_prime(rep, o.start);
    p = choice.p;
    Json rejected = Json::array();
    for (const auto& [q, idx] : choice.rejected) rejected.push_back({{"prime", q}, {"exclusion", idx}});
    choice_doc = Json{{"start", o.start}, {"selected", p}, {"rejected", std::move(rejected)}};
  }
  try {
    const auto r = reduce_mod_p(rep, p);
    Json j{{"p", p}, {"valid", r.certificate.valid}};
    if (!choice_doc.is_null()) j["selection"] = std::move(choice_doc);
    j["certificate"] = io::certificate_json(r.certificate, rep.table());
    j["reduced"] = io::rep_json(r.rep);
    return Outcome{std::move(j), r.certificate.valid ? ok : failed};
  } catch (const ReductionRejected& e) {
    Json j{{"p", p}, {"valid", false}, {"rejected", e.what()}};
    j["certificate"] = io::certificate_json(e.certificate(), rep.table());
    return Outcome{std::move(j), failed};
  }
}

Outcome cmd_jordan(const Options& o) {
  if (!o.matrix.empty()) {
    const Json j = io::read_json_file(o.matrix);
    return std::visit(
        [&](const auto& f) {
          const auto a = io::parse_matrix(f, j);
          const auto lambda = f.from_rational(Rational::parse(o.eigenvalue));
          const auto profile = jordan_profile_at(a, lambda);
          Json doc = io::profile_json(profile);
          doc["algebraic_multiplicity"] = algebraic_multiplicity(a, lambda).str();
          doc["field"] = f.spec().str();
          return Outcome{std::move(doc), ok};
        },
        make_field(io::document_field(j, field_override(o))));
  }
  if (o.s < 1 || o.t < 1) throw InputError("jordan needs --s and --t (block sizes >= 1) or --matrix");
  const auto spec = field_override(o).value_or(FieldSpec::rationals());
  return std::visit(
      [&](const auto& f) {
        const auto r = verify_jordan_tensor(f, f.from_rational(Rational::parse(o.alpha)), o.s,
                                            f.from_rational(Rational::parse(o.beta)), o.t);
        Json doc{{"field", f.spec().str()}, {"s", o.s},
                 {"t", o.t},                {"alpha", o.alpha},
                 {"beta", o.beta},          {"predicted", r.predicted},
                 {"computed", io::profile_json(r.computed)}, {"holds", r.holds}};
        return Outcome{std::move(doc), r.holds ? ok : failed};
      },
      make_field(spec));
}

Outcome cmd_witness(const Options& o) {
  const auto spec = field_override(o).value_or(FieldSpec::rationals());
  if (o.n < 1) throw InputError("witness needs --n >= 3");
  return std::visit(
      [&](const auto& f) {
        const auto w = lupini_witnesses(f, o.n, o.l ? std::optional<Index>(*o.l) : std::nullopt);
        Json doc{{"field", f.spec().str()},
                 {"n", w.n},
                 {"l", w.l},
                 {"maximal", w.maximal},
                 {"min_distance", w.min_distance.str()},
                 {"gamma_holds", w.gamma_holds},
                 {"all_hold", w.all_hold},
                 {"rows", io::lupini_rows_json(w.rows)}};
        if (o.with_matrices) {
          Json g = Json::array(), h = Json::array();
          for (const auto& m : w.g) g.push_back(io::entries_json(m));
          for (const auto& m : w.h) h.push_back(io::entries_json(m));
          doc["g"] = std::move(g);
          doc["h"] = std::move(h);
        }
        return Outcome{std::move(doc), w.all_hold ? ok : failed};
      },
      make_field(spec));
}

Outcome cmd_extend(const Options& o) {
  if (o.data.empty()) throw InputError("extend needs --data");
  const Json j = io::read_json_file(o.data);
  const auto data = io::parse_extension(j);
  if (!j.contains("h_rep")) throw InputError("extension data needs an \"h_rep\" representation");
  auto doc = io::parse_rep(j.at("h_rep"), field_override(o));
  return std::visit(
      [&](const auto& phi) {
        const auto r = amenable_extension_rep(data, phi);
        Json out{{"field", phi.field().spec().str()},
                 {"dim", r.rep.dim()},
                 {"max_defect", r.report.max_defect.str()},
                 {"h_defect", r.h_defect.str()},
                 {"defect_bound", r.defect_bound.str()},
                 {"defect_bound_holds", r.defect_bound_holds},
                 {"h_min_separation", r.h_min_separation.str()},
                 {"cocycle", io::cocycle_json(r.cocycle)},
                 {"elements", io::extension_rows_json(r.rows, r.rep.table())},
                 {"all_hold", r.all_hold}};
        if (o.with_matrices) out["rep"] = io::rep_json(r.rep);
        return Outcome{std::move(out), r.all_hold ? ok : failed};
      },
      doc.rep);
}

Outcome cmd_regular(const Options& o) {
  if (o.group.empty() == (o.cyclic == 0)) throw InputError("regular needs exactly one of --group, --cyclic");
  const GroupTable table =
      o.group.empty() ? GroupTable::cyclic(static_cast<std::size_t>(o.cyclic)) : io::parse_table(io::read_json_file(o.group));
  if (o.perms) return Outcome{io::perms_rep_json(table, left_regular_permutations(table)), ok};
  const auto spec = field_override(o).value_or(FieldSpec::rationals());
  return std::visit([&](const auto& f) { return Outcome{io::rep_json(regular_rep(table, f)), ok}; }, make_field(spec));
}

Outcome cmd_demo(const Options& o) {
  const auto summary = demo::run(field_override(o).value_or(FieldSpec::rationals()), budget(o));
  return Outcome{summary.json(), summary.all_pass() ? ok : failed};
}

void emit(const Json& doc, const std::string& path, std::ostream& out) {
  const std::string text = doc.dump(2) + "\n";
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw InputError("cannot write '" + path + "'");
  file << text;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out) {
  Options o;
  CLI::App app{"Exact rank-metric workbench for linear sofic groups and algebras", "rankwb"};
  app.require_subcommand(1, 1);
  app.fallthrough();  // global options may follow the subcommand
  app.add_option("--field", o.field, "Field: Q, Fp:<prime> or NF:<monic minimal polynomial coefficients>");
  app.add_option("--budget", o.budget, "Largest matrix dimension (default 16384 or RANKWB_BUDGET)");
  app.add_option("--output", o.output, "Write the JSON report here instead of standard output");

  auto* certify = app.add_subcommand("certify", "Defect and separation report, or an algebra-patch check");
  certify->add_option("--rep", o.rep, "Representation JSON (matrices or perms)");
  certify->add_option("--patch", o.patch, "Algebra patch JSON with psi matrices");
  certify->add_option("--folner", o.folner, "Folner data JSON");
  certify->add_option("--window", o.window, "Truncated polynomial Folner window k");
  certify->add_option("--degree", o.degree, "Degree d of the patch span{1, x, ..., x^d}");
  certify->add_option("--epsilon", o.epsilon, "Threshold for algebra checks (default 1/4)");

  auto* align = app.add_subcommand("align", "Conjugate into a basis where defined products agree on many columns");
  align->add_option("--rep", o.rep)->required();
  align->add_option("--epsilon", o.epsilon);

  auto* amplify = app.add_subcommand("amplify", "Tensor-square trace of a matrix, or boost a representation");
  amplify->add_option("--matrix", o.matrix, "Matrix JSON");
  amplify->add_option("--rep", o.rep, "Representation JSON to boost");
  amplify->add_option("--level", o.level, "Level m (default 2)");
  amplify->add_option("--bound-constant", o.bound_constant, "Constant c in (M_1, 1)");
  amplify->add_flag("--matrices", o.with_matrices, "Include the boosted matrices");

  auto* combine = app.add_subcommand("combine", "Weighted direct-sum combiner and elimination witness");
  combine->add_option("--thetas", o.thetas, "JSON with \"thetas\" and \"epsilon\"");
  combine->add_option("--rep", o.rep, "Representation for group-algebra evaluation");
  combine->add_option("--element", o.element, "Group-algebra element, e.g. e:1,g:-1");
  combine->add_option("--depth", o.depth, "Tensor depth k (default 2)");
  combine->add_option("--eliminate", o.eliminate, "JSON with \"coeffs\" and \"matrices\"");

  auto* reduce = app.add_subcommand("reduce", "Reduce a rational representation modulo a prime");
  reduce->add_option("--rep", o.rep)->required();
  reduce->add_option("--prime", o.prime, "Use this prime");
  reduce->add_option("--start", o.start, "Smallest prime to consider (default 2)");

  auto* jordan = app.add_subcommand("jordan", "Jordan profile of J(alpha,s) (x) J(beta,t), or of a matrix");
  jordan->add_option("--s", o.s);
  jordan->add_option("--t", o.t);
  jordan->add_option("--alpha", o.alpha);
  jordan->add_option("--beta", o.beta);
  jordan->add_option("--matrix", o.matrix, "Matrix JSON");
  jordan->add_option("--eigenvalue", o.eigenvalue, "Eigenvalue for --matrix (default 1)");

  auto* witness = app.add_subcommand("witness", "Commutator witnesses in GL_n");
  witness->add_option("--n", o.n)->required();
  witness->add_option("--l", o.l, "Level l with 3^l <= n (default: largest)");
  witness->add_flag("--matrices", o.with_matrices, "Include the witness matrices");

  auto* extend = app.add_subcommand("extend", "Representation of an extension by a finite quotient");
  extend->add_option("--data", o.data)->required();
  extend->add_flag("--matrices", o.with_matrices, "Include the extension matrices");

  auto* regular = app.add_subcommand("regular", "Left regular representation of a finite group");
  regular->add_option("--group", o.group, "Group table JSON");
  regular->add_option("--cyclic", o.cyclic, "Use Z/n");
  regular->add_flag("--perms", o.perms, "Emit permutations instead of matrices");

  auto* demo_cmd = app.add_subcommand("demo", "Run the bundled corpus end to end");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    out << error_doc("usage", e.what()).dump(2) << "\n";
    return input_error;
  }

  try {
    Outcome result;
    if (certify->parsed()) result = cmd_certify(o);
    else if (align->parsed()) result = cmd_align(o);
    else if (amplify->parsed()) result = cmd_amplify(o);
    else if (combine->parsed()) result = cmd_combine(o);
    else if (reduce->parsed()) result = cmd_reduce(o);
    else if (jordan->parsed()) result = cmd_jordan(o);
    else if (witness->parsed()) result = cmd_witness(o);
    else if (extend->parsed()) result = cmd_extend(o);
    else if (regular->parsed()) result = cmd_regular(o);
    else if (demo_cmd->parsed()) result = cmd_demo(o);
    emit(result.doc, o.output, out);
    return result.code;
  } catch (const BudgetExceeded& e) {
    out << error_doc("budget_exceeded", e.what()).dump(2) << "\n";
  } catch (const FieldMismatch& e) {
    out << error_doc("field_mismatch", e.what()).dump(2) << "\n";
  } catch (const InputError& e) {
    out << error_doc("input", e.what()).dump(2) << "\n";
  } catch (const nlohmann::json::exception& e) {
    out << error_doc("input", e.what()).dump(2) << "\n";
  }
  return input_error;
}

}  // namespace rankwb::cli
