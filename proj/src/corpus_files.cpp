#include "rankwb/corpus_files.hpp"

#include "rankwb/corpus.hpp"

namespace rankwb::corpus {

namespace {

const RationalField Q;

io::Json folner_patch(std::size_t k) {
  const auto data = truncated_polynomial_folner(k);
  const auto r = folner_left_mult_rep(Q, data, Rational(BigInt(1), BigInt(4)));
  io::Json j = io::patch_json(data.patch);
  j["field"] = "Q";
  j["epsilon"] = "1/4";
  io::Json psi = io::Json::object();
  for (std::size_t a = 0; a < r.phi.size(); ++a) psi[data.patch.basis[a]] = io::entries_json(r.phi[a]);
  j["psi"] = std::move(psi);
  return j;
}

}  // namespace

std::vector<std::pair<std::string, io::Json>> documents() {
  std::vector<std::pair<std::string, io::Json>> out;
  out.emplace_back("z2.json", io::rep_json(z2_regular()));
  out.emplace_back("z3.json", io::rep_json(z3_regular()));
  const auto z3 = GroupTable::cyclic(3);
  out.emplace_back("z3_perms.json", io::perms_rep_json(z3, left_regular_permutations(z3)));
  out.emplace_back("sign.json", io::rep_json(sign()));
  out.emplace_back("unipotent.json", io::rep_json(unipotent()));
  out.emplace_back("den6.json", io::rep_json(den6()));
  out.emplace_back("powers_of_two.json", io::rep_json(powers_of_two()));
  out.emplace_back("gaussian.json", io::rep_json(gaussian_rotation()));

  io::Json ext = io::extension_json(z2_extension());
  ext["h_rep"] = io::rep_json(z2_extension_h_rep());
  out.emplace_back("z2_extension.json", std::move(ext));

  io::Json folner = io::folner_json(truncated_polynomial_folner(8));
  folner["epsilon"] = "1/4";
  out.emplace_back("folner_k8.json", std::move(folner));
  out.emplace_back("polynomial_patch_k8.json", folner_patch(8));

  const Rational one(1), minus_one(-1);
  out.emplace_back("tight.json", io::matrix_json(Q, diagonal(Q, {one, one, minus_one})));

  io::Json thetas = io::Json::array();
  const GroupAlgebraElement<Rational> f{{"e", one}, {"g", minus_one}};
  for (int i = 1; i <= 2; ++i) thetas.push_back(io::entries_json(group_algebra_apply(sign(), f, i)));
  out.emplace_back("sign_thetas.json", io::Json{{"field", "Q"}, {"thetas", std::move(thetas)}, {"epsilon", "0"}});

  out.emplace_back("eliminate.json",
                   io::Json{{"field", "Q"},
                            {"coeffs", {"1", "1"}},
                            {"matrices", {io::entries_json(identity(Q, 2)), io::entries_json(diagonal(Q, {one, minus_one}))}}});
  return out;
}

}  // namespace rankwb::corpus
