#include "rankwb/group.hpp"

#include "rankwb/errors.hpp"

namespace rankwb {

GroupTable::GroupTable(std::vector<std::string> elements, const std::string& identity)
    : labels_(std::move(elements)) {
  for (Id i = 0; i < labels_.size(); ++i)
    if (!index_.emplace(labels_[i], i).second) throw InputError("duplicate group element '" + labels_[i] + "'");
  const auto it = index_.find(identity);
  if (it == index_.end()) throw InputError("identity '" + identity + "' is not among the elements");
  identity_ = it->second;
  products_.assign(size() * size(), std::nullopt);
  inverses_.assign(size(), std::nullopt);
  for (Id g = 0; g < size(); ++g) {
    products_[identity_ * size() + g] = g;
    products_[g * size() + identity_] = g;
  }
  inverses_[identity_] = identity_;
}

GroupTable GroupTable::cyclic(std::size_t n) {
  if (n == 0) throw InputError("cyclic group of order 0");
  std::vector<std::string> labels;
  labels.emplace_back("e");
  if (n > 1) labels.emplace_back("g");
  for (std::size_t k = 2; k < n; ++k) labels.push_back("g^" + std::to_string(k));
  GroupTable t(labels);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t.products_[a * n + b] = (a + b) % n;
    t.inverses_[a] = (n - a) % n;
  }
  return t;
}

GroupTable::Id GroupTable::index(const std::string& label) const {
  const auto it = index_.find(label);
  if (it == index_.end()) throw InputError("unknown group element '" + label + "'");
  return it->second;
}

void GroupTable::set_product(const std::string& g, const std::string& h, const std::string& gh) {
  auto& slot = products_[index(g) * size() + index(h)];
  const Id v = index(gh);
  if (slot && *slot != v)
    throw InputError("conflicting products for " + g + "*" + h + ": " + label(*slot) + " vs " + gh);
  slot = v;
}

void GroupTable::set_inverse(const std::string& g, const std::string& g_inv) {
  auto& slot = inverses_[index(g)];
  const Id v = index(g_inv);
  if (slot && *slot != v) throw InputError("conflicting inverses for " + g);
  slot = v;
}

std::vector<GroupTable::Triple> GroupTable::defined_triples() const {
  std::vector<Triple> out;
  for (Id g = 0; g < size(); ++g)
    for (Id h = 0; h < size(); ++h)
      if (const auto gh = product(g, h)) out.push_back({g, h, *gh});
  return out;
}

bool GroupTable::is_total() const {
  for (const auto& p : products_)
    if (!p) return false;
  return true;
}

void GroupTable::validate() const {
  const Id n = size();
  for (Id g = 0; g < n; ++g) {
    if (product(identity_, g) != g || product(g, identity_) != g)
      throw InputError("identity law fails for '" + label(g) + "'");
    if (const auto gi = inverse(g)) {
      for (const auto& p : {product(g, *gi), product(*gi, g)})
        if (p && *p != identity_)
          throw InputError("inverse of '" + label(g) + "' does not multiply to the identity");
    }
  }
  for (Id a = 0; a < n; ++a)
    for (Id b = 0; b < n; ++b) {
      const auto ab = product(a, b);
      if (!ab) continue;
      for (Id c = 0; c < n; ++c) {
        const auto bc = product(b, c);
        if (!bc) continue;
        const auto left = product(*ab, c), right = product(a, *bc);
        if (left && right && *left != *right)
          throw InputError("associativity fails on (" + label(a) + ", " + label(b) + ", " + label(c) + ")");
      }
    }
}

void GroupTable::require_group() const {
  if (!is_total()) throw InputError("group table is not total");
  validate();
  for (Id g = 0; g < size(); ++g) {
    bool found = false;
    for (Id h = 0; h < size() && !found; ++h) found = product(g, h) == identity_;
    if (!found) throw InputError("'" + label(g) + "' has no inverse");
  }
}

}  // namespace rankwb
