#include "rankwb/demo.hpp"

#include "rankwb/corpus.hpp"

namespace rankwb::demo {

namespace {

Rational frac(long a, long b) { return Rational(BigInt(a), BigInt(b)); }

std::string join(const std::vector<Index>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

class Recorder {
 public:
  explicit Recorder(std::vector<Row>& rows) : rows_(rows) {}

  void equal(std::string id, std::string check, const Rational& value, const Rational& expected) {
    add(std::move(id), std::move(check), value.str(), expected.str(), value == expected);
  }
  void at_least(std::string id, std::string check, const Rational& value, const Rational& bound) {
    add(std::move(id), std::move(check), value.str(), ">= " + bound.str(), value >= bound);
  }
  void add(std::string id, std::string check, std::string value, std::string expected, bool ok) {
    rows_.push_back({std::move(id), std::move(check), std::move(value), std::move(expected),
                     ok ? Status::pass : Status::fail, ""});
  }
  void skip(std::string id, std::string check, std::string expected, std::string why) {
    rows_.push_back({std::move(id), std::move(check), "", std::move(expected), Status::skipped, std::move(why)});
  }

 private:
  std::vector<Row>& rows_;
};

template <class F>
void run_over(const F& field, Index budget, Recorder& rec) {
  using S = typename F::Scalar;
  const auto z2 = regular_rep(GroupTable::cyclic(2), field);
  const auto z3 = regular_rep(GroupTable::cyclic(3), field);
  const auto sign = corpus::over(field, corpus::sign());
  const auto unipotent = corpus::over(field, corpus::unipotent());

  // Certification of the regular and unipotent reps.
  const auto r2 = defect_report(z2), r3 = defect_report(z3), ru = defect_report(unipotent);
  rec.equal("certify.z2", "min separation of the regular rep of Z/2", r2.min_separation, frac(1, 2));
  rec.equal("certify.z3", "min separation of the regular rep of Z/3", r3.min_separation, frac(2, 3));
  rec.equal("certify.z3.defect", "defect of the regular rep of Z/3", r3.max_defect, Rational(0));
  rec.equal("certify.unipotent", "min separation of k -> [[1,k],[0,1]]", ru.min_separation, frac(1, 2));

  // Sofic embedding: permutation identities on the Z/3 regular action.
  const auto sofic = embed_sofic_rep(GroupTable::cyclic(3), left_regular_permutations(GroupTable::cyclic(3)), field);
  rec.add("sofic.z3", "cycle and Hamming identities for Z/3", sofic.all_hold ? "hold" : "fail", "hold",
          sofic.all_hold);

  // Jordan tensor profile.
  const auto jt = verify_jordan_tensor(field, field.one(), 2, field.one(), 3);
  rec.add("jordan.2x3", "Jordan profile of J(1,2) (x) J(1,3)", join(jt.computed.blocks), "[4,2]", jt.holds);

  // Amplification.
  const auto tight = diagonal(field, {field.one(), field.one(), field.from_int(-1)});
  const auto trace = tensor_square_iterate(tight, 2, budget);
  rec.equal("amplify.tight", "M_1 of the tensor square of diag(1,1,-1)", trace.m1_values[1], f_map(frac(2, 3)));

  for (const auto& [name, rep] : corpus::rational_reps()) {
    const std::string id = "boost." + name;
    try {
      const auto b = boost_separation(corpus::over(field, rep), 3, budget);
      const BoostRow* worst = nullptr;
      for (const auto& row : b.rows)
        if (row.f_bound && (!worst || row.rho_total < worst->rho_total)) worst = &row;
      if (worst)
        rec.add(id, "boosted separation at m = 3 vs (1 - f^2(c))/2", worst->rho_total.str(),
                ">= " + worst->f_bound->str(), b.all_hold);
      else
        rec.add(id, "boosted separation at m = 3 vs (1 - f^2(c))/2", "no bound applies", "", b.all_hold);
    } catch (const BudgetExceeded&) {
      rec.skip(id, "boosted separation at m = 3 vs (1 - f^2(c))/2", "", "budget");
    }
  }
  try {
    const auto b = boost_separation(unipotent, 2, budget);
    Rational worst(1);
    for (const auto& row : b.rows) worst = min(worst, row.rho_total);
    rec.at_least("boost.unipotent.quarter", "boosted unipotent separation at m = 2", worst, frac(1, 4));
  } catch (const BudgetExceeded&) {
    rec.skip("boost.unipotent.quarter", "boosted unipotent separation at m = 2", ">= 1/4", "budget");
  }

  // Combiner on the sign representation and the powers-of-two example.
  const GroupAlgebraElement<S> f{{"e", field.one()}, {"g", field.from_int(-1)}};
  std::vector<Matrix<S>> thetas;
  for (int i = 1; i <= 2; ++i) thetas.push_back(group_algebra_apply(sign, f, i));
  try {
    const auto c = weighted_combine(field, thetas, augmentation<S>(field, f), budget);
    rec.add("combine.sign", "rho of the weighted combination at k = 2", c.lhs.str(), "3/8",
            c.identity_holds && c.lhs == frac(3, 8));
  } catch (const BudgetExceeded&) {
    rec.skip("combine.sign", "rho of the weighted combination at k = 2", "3/8", "budget");
  }
  const GroupAlgebraElement<S> g{{"1", field.one()}, {"0", field.from_int(-2)}};
  rec.equal("combine.powers_of_two", "rho of u_1 - 2 u_0 under k -> 2^k I",
            normalized_rank(group_algebra_apply(corpus::over(field, corpus::powers_of_two()), g, 1)), Rational(0));

  // Amenable extension.
  const auto ext = amenable_extension_rep(corpus::z2_extension(), corpus::over(field, corpus::z2_extension_h_rep()));
  rec.equal("extend.psi1", "separation of psi(1)", separation(ext.rep, ext.rep.table().index("1")), frac(3, 4));
  rec.equal("extend.defect", "defect of psi", ext.report.max_defect, Rational(0));

  // Commutator witnesses.
  const auto w3 = lupini_witnesses(field, 3);
  rec.equal("witness.n3", "d([g,h], I) for n = 3", w3.rows.front().distance, frac(2, 3));
  Rational min_distance(1);
  bool all = true;
  for (Index n = 3; n <= 100; ++n) {
    const auto w = lupini_witnesses(field, n);
    min_distance = min(min_distance, w.min_distance);
    all = all && w.all_hold;
  }
  rec.add("witness.upto100", "min commutator distance over n <= 100", min_distance.str(), ">= 2/9",
          all && min_distance >= frac(2, 9));

  // Folner patch.
  const auto fol = folner_left_mult_rep(field, truncated_polynomial_folner(8), frac(1, 4));
  rec.equal("folner.rho", "rho(phi(x)) at window 8", fol.rho[1], frac(7, 8));
  rec.add("folner.deficiency", "deficiency at window 8", fol.check.deficiency.str(), "<= 1/4",
          fol.check.deficiency <= frac(1, 4));
}

void run_reductions(Recorder& rec) {
  for (const auto& [name, rep] : corpus::rational_reps()) {
    const auto choice = select_good_prime(rep);
    const auto r = reduce_mod_p(rep, choice.p);
    rec.add("reduce." + name, "certificate at the selected prime", "p = " + std::to_string(choice.p), "valid",
            r.certificate.valid);
  }
  const auto nf = restrict_rep(corpus::gaussian_rotation());
  const auto r = reduce_mod_p(nf, select_good_prime(nf).p);
  rec.add("reduce.gaussian", "certificate after restriction of scalars", "p = " + std::to_string(r.certificate.p),
          "valid", r.certificate.valid);
  try {
    reduce_mod_p(corpus::sign(), 2);
    rec.add("reduce.sign.mod2", "diag(1,-1) mod 2", "accepted", "rejected", false);
  } catch (const ReductionRejected& e) {
    const auto& row = e.certificate().ranks.at(1);
    const bool collapsed = row.rank_after && *row.rank_after < row.rank_before;
    rec.add("reduce.sign.mod2", "diag(1,-1) mod 2",
            "rejected, rank " + std::to_string(row.rank_before) + " -> " +
                (row.rank_after ? std::to_string(*row.rank_after) : std::string("?")),
            "rejected", collapsed);
  }
}

}  // namespace

const char* to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "PASS";
    case Status::fail:
      return "FAIL";
    case Status::skipped:
      return "SKIPPED";
  }
  return "?";
}

bool Summary::all_pass() const {
  for (const auto& r : rows)
    if (r.status == Status::fail) return false;
  return true;
}

io::Json Summary::json() const {
  io::Json out_rows = io::Json::array();
  for (const auto& r : rows) {
    io::Json row{{"id", r.id}, {"check", r.check}, {"value", r.value}, {"expected", r.expected},
                 {"status", to_string(r.status)}};
    if (!r.note.empty()) row["note"] = r.note;
    out_rows.push_back(std::move(row));
  }
  return io::Json{{"field", field.str()}, {"budget", budget}, {"rows", std::move(out_rows)}, {"all_pass", all_pass()}};
}

Summary run(const FieldSpec& spec, Index budget) {
  Summary s{spec, budget, {}};
  Recorder rec(s.rows);
  std::visit([&](const auto& f) { run_over(f, budget, rec); }, make_field(spec));
  run_reductions(rec);
  return s;
}

}  // namespace rankwb::demo
