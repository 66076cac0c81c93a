#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "posetpart/poset.hpp"
#include "posetpart/relation.hpp"
#include "posetpart/set_partition.hpp"

namespace posetpart {

bool is_quasiorder(const Relation& r);

// A reflexive and transitive relation on a carrier. The carrier is tied to a
// poset only by size; operations that need the poset take it explicitly and
// reject a size mismatch.
class Quasiorder {
 public:
  // Throws NotAQuasiorder.
  explicit Quasiorder(Relation rel);

  std::size_t size() const { return rel_.size(); }
  const Relation& relation() const { return rel_; }
  bool operator()(std::size_t i, std::size_t j) const { return rel_(i, j); }
  // i and j related both ways.
  bool equivalent(std::size_t i, std::size_t j) const { return rel_(i, j) && rel_(j, i); }

  friend bool operator==(const Quasiorder&, const Quasiorder&) = default;

 private:
  Relation rel_;
};

// Classes of x ~ y iff x <~ y and y <~ x, in canonical block order.
SetPartition equivalence_classes(const Quasiorder& q);

// The classes ordered by [x] <= [y] iff x <~ y.
OrderedPartition induced_poset_of_classes(const Quasiorder& q);

// True iff the order of `poset` is contained in q.
bool extends_order(const Quasiorder& q, const Poset& poset);

// Pairs x <~ y with y not <~ x and x not <= y: the strict quasiorder pairs
// that the order of the poset does not already supply. Throws NotAnExtension.
Relation rho_set(const Quasiorder& q, const Poset& poset);

// q equals the transitive closure of q minus rho_set. Throws NotAnExtension.
bool satisfies_regularity_condition(const Quasiorder& q, const Poset& poset);

// For every p <~ r there is p' equivalent to p with p' <= r in the poset.
// Throws NotAnExtension.
bool satisfies_openness_condition(const Quasiorder& q, const Poset& poset);

inline constexpr std::size_t kDefaultQuasiorderBound = 7;

// Streams every quasiorder extending the order of `poset`, each once, in
// ascending lexicographic order of the row-major matrix. Throws
// BoundExceeded when the poset has more than `bound` elements.
void for_each_extending_quasiorder(const Poset& poset,
                                   const std::function<void(const Quasiorder&)>& visit,
                                   std::size_t bound = kDefaultQuasiorderBound);

std::vector<Quasiorder> enumerate_extending_quasiorders(
    const Poset& poset, std::size_t bound = kDefaultQuasiorderBound);

}  // namespace posetpart
