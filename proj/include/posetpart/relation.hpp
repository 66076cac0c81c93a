#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "posetpart/element_set.hpp"

namespace posetpart {

// Binary relation on {0, ..., n-1}: an n x n boolean matrix. Row i holds the
// set of j with (i, j) in the relation.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t n);

  static Relation identity(std::size_t n);
  static Relation full(std::size_t n);
  static Relation from_pairs(std::size_t n,
                             const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

  std::size_t size() const { return rows_.size(); }

  bool test(std::size_t i, std::size_t j) const { return rows_[i].contains(j); }
  bool operator()(std::size_t i, std::size_t j) const { return test(i, j); }
  void set(std::size_t i, std::size_t j, bool value = true);

  ElementSet row(std::size_t i) const { return rows_[i]; }
  ElementSet column(std::size_t j) const;

  // Pairs in row-major order.
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;
  std::size_t pair_count() const;

  Relation transposed() const;
  Relation& operator|=(const Relation& other);

  friend Relation operator|(Relation a, const Relation& b) { return a |= b; }
  friend Relation operator-(const Relation& a, const Relation& b);

  bool is_subset_of(const Relation& other) const;

  friend bool operator==(const Relation&, const Relation&) = default;
  // Lexicographic over the row-major flattening, (0,0) most significant and
  // an absent pair ordered before a present one.
  friend std::strong_ordering operator<=>(const Relation& a, const Relation& b);

 private:
  std::vector<ElementSet> rows_;
};

bool is_reflexive(const Relation& r);
bool is_symmetric(const Relation& r);
bool is_antisymmetric(const Relation& r);
bool is_transitive(const Relation& r);
bool is_partial_order(const Relation& r);

// Smallest transitive relation containing r.
Relation transitive_closure(const Relation& r);
Relation reflexive_transitive_closure(const Relation& r);

// Covering pairs of a partial order: i < j with nothing strictly between.
Relation transitive_reduction(const Relation& order);

enum class ExtensionKind { quasiorder, partial_order };

// Visits every transitive relation that contains `base` (plus the diagonal),
// restricted to antisymmetric ones for ExtensionKind::partial_order. Visiting
// order is ascending in the Relation ordering; each relation is seen once.
// Search is pruned on the first transitivity or antisymmetry violation among
// the cells fixed so far.
void for_each_closed_extension(const Relation& base, ExtensionKind kind,
                               const std::function<void(const Relation&)>& visit);

}  // namespace posetpart
