#pragma once

// Finite fragments of a group: a labelled element set containing the identity,
// with a partial multiplication and partial inverse.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rankwb {

class GroupTable {
 public:
  using Id = std::size_t;

  struct Triple {
    Id g, h, gh;
  };

  GroupTable() : GroupTable({"e"}) {}
  /// Identity products and inverse(identity) are filled in automatically.
  explicit GroupTable(std::vector<std::string> elements, const std::string& identity = "e");

  /// Z/n with labels e, g, g^2, ..., g^(n-1).
  static GroupTable cyclic(std::size_t n);

  /// Records g*h = gh; conflicting redefinitions throw InputError.
  void set_product(const std::string& g, const std::string& h, const std::string& gh);
  void set_inverse(const std::string& g, const std::string& g_inv);

  std::size_t size() const { return labels_.size(); }
  Id identity() const { return identity_; }
  const std::string& label(Id g) const { return labels_.at(g); }
  const std::vector<std::string>& labels() const { return labels_; }
  bool contains(const std::string& label) const { return index_.count(label) != 0; }
  /// Throws InputError for unknown labels.
  Id index(const std::string& label) const;

  std::optional<Id> product(Id g, Id h) const { return products_[g * size() + h]; }
  std::optional<Id> inverse(Id g) const { return inverses_[g]; }

  /// Every (g, h, gh) with gh defined, in row-major order of (g, h).
  std::vector<Triple> defined_triples() const;
  bool is_total() const;

  /// Identity law, inverse consistency, associativity on fully defined triples
  /// and, for total tables, existence of inverses. Throws InputError.
  void validate() const;
  /// validate() plus totality: the table is a finite group.
  void require_group() const;

 private:
  std::vector<std::string> labels_;
  std::map<std::string, Id> index_;
  Id identity_ = 0;
  std::vector<std::optional<Id>> products_;
  std::vector<std::optional<Id>> inverses_;
};

}  // namespace rankwb
