#include "rankwb/constructions.hpp"

namespace rankwb {

std::vector<Permutation> left_regular_permutations(const GroupTable& table) {
  table.require_group();
  std::vector<Permutation> out;
  for (GroupTable::Id g = 0; g < table.size(); ++g) {
    std::vector<std::size_t> img(table.size());
    for (GroupTable::Id h = 0; h < table.size(); ++h) img[h] = *table.product(g, h);
    out.emplace_back(std::move(img));
  }
  return out;
}

void ExtensionData::validate() const {
  quotient.require_group();
  fragment.validate();
  if (lift.size() != quotient.size()) throw InputError("extension: one lift per quotient element");
  if (projection.size() != fragment.size()) throw InputError("extension: one projection per fragment element");
  if (cocycle.size() != fragment.size()) throw InputError("extension: one cocycle row per fragment element");
  for (const auto& row : cocycle)
    if (row.size() != quotient.size()) throw InputError("extension: cocycle rows must cover the quotient");
  for (const auto p : projection)
    if (p >= quotient.size()) throw InputError("extension: projection outside the quotient");
  if (projection[fragment.identity()] != quotient.identity())
    throw InputError("extension: the identity must project to the identity");
  for (const auto& t : fragment.defined_triples())
    if (projection[t.gh] != *quotient.product(projection[t.g], projection[t.h]))
      throw InputError("extension: projection is not multiplicative on (" + fragment.label(t.g) + ", " +
                       fragment.label(t.h) + ")");
}

GroupTable::Id ExtensionData::act(GroupTable::Id g, GroupTable::Id gamma) const {
  return *quotient.product(projection[g], gamma);
}

CocycleCheck check_cocycle(const ExtensionData& data, const GroupTable& h_table) {
  CocycleCheck c;
  for (const auto& t : data.fragment.defined_triples()) {
    for (GroupTable::Id gamma = 0; gamma < data.quotient.size(); ++gamma) {
      const auto& lhs = data.cocycle[t.gh][gamma];
      const auto& a = data.cocycle[t.g][data.act(t.h, gamma)];
      const auto& b = data.cocycle[t.h][gamma];
      for (const auto* label : {&lhs, &a, &b})
        if (!h_table.contains(*label)) throw InputError("no matrix supplied for cocycle value '" + *label + "'");
      const auto ab = h_table.product(h_table.index(a), h_table.index(b));
      if (!ab) {
        ++c.skipped;
        continue;
      }
      ++c.checked;
      if (*ab != h_table.index(lhs))
        c.violations.push_back("alpha(" + data.fragment.label(t.gh) + ", " + data.quotient.label(gamma) + ") = " + lhs +
                               " but alpha(" + data.fragment.label(t.g) + ", .) alpha(" + data.fragment.label(t.h) +
                               ", .) = " + h_table.label(*ab));
    }
  }
  return c;
}

Index max_lupini_level(Index n) {
  Index l = 0;
  for (Index cube = 3; cube <= n; cube *= 3) ++l;
  return l;
}

FolnerData truncated_polynomial_folner(std::size_t k, std::size_t d) {
  if (k < 1) throw InputError("folner window must be >= 1");
  auto mono = [](std::size_t e) { return e == 0 ? std::string("1") : e == 1 ? std::string("x") : "x^" + std::to_string(e); };
  FolnerData data;
  for (std::size_t i = 0; i <= d; ++i) data.patch.basis.push_back(mono(i));
  data.patch.unit = "1";
  for (std::size_t i = 0; i <= d; ++i)
    for (std::size_t j = 0; i + j <= d; ++j) data.patch.products[{i, j}] = {{i + j, Rational(1)}};
  for (std::size_t e = 0; e < k; ++e) data.subspace.push_back(mono(e));
  for (std::size_t i = 0; i <= d; ++i) {
    std::vector<std::pair<std::string, SparseVector>> action;
    for (std::size_t e = 0; e + i < k; ++e) action.push_back({mono(e), {{mono(e + i), Rational(1)}}});
    data.actions.push_back(std::move(action));
  }
  return data;
}

}  // namespace rankwb
