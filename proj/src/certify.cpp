#include "rankwb/certify.hpp"

namespace rankwb {

std::size_t AlgebraPatch::index(const std::string& label) const {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == label) return i;
  throw InputError("unknown basis element '" + label + "'");
}

void AlgebraPatch::normalize() {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (basis[i] == basis[j]) throw InputError("duplicate basis element '" + basis[i] + "'");
  const std::size_t u = index(unit);
  for (const auto& [ij, coeffs] : products)
    for (const auto& [k, c] : coeffs)
      if (ij.first >= basis.size() || ij.second >= basis.size() || k >= basis.size())
        throw InputError("structure table refers to an index outside the basis");
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const std::vector<std::pair<std::size_t, Rational>> xi{{i, Rational(1)}};
    for (const auto& key : {std::pair{u, i}, std::pair{i, u}}) {
      auto it = products.find(key);
      if (it == products.end()) {
        products.emplace(key, xi);
        continue;
      }
      std::vector<std::pair<std::size_t, Rational>> nonzero;
      for (const auto& term : it->second)
        if (!term.second.is_zero()) nonzero.push_back(term);
      if (nonzero != xi) throw InputError("structure table: the unit does not act as 1 on '" + basis[i] + "'");
    }
  }
}

}  // namespace rankwb
