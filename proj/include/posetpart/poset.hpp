#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "posetpart/element_set.hpp"
#include "posetpart/relation.hpp"

namespace posetpart {

// A finite poset. Elements are the dense indices 0..size()-1, in the order the
// labels were given; every label is a nonempty token without whitespace.
// Immutable once built.
class Poset {
 public:
  // Builds the poset whose order is the reflexive-transitive closure of the
  // given pairs. The pairs are usually covers but any redundant order pairs
  // are accepted. Throws DuplicateLabel, UnknownLabel, CycleDetected.
  static Poset from_covers(std::vector<std::string> labels,
                           const std::vector<std::pair<std::string, std::string>>& covers);

  // Index-based variant of from_covers.
  static Poset from_cover_indices(std::vector<std::string> labels,
                                  const std::vector<std::pair<std::size_t, std::size_t>>& covers);

  // Takes a complete order relation. Throws NotAPartialOrder if `leq` is not
  // reflexive, antisymmetric and transitive.
  static Poset from_order(std::vector<std::string> labels, Relation leq);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  std::optional<std::size_t> index_of(std::string_view label) const;
  // Throws UnknownLabel.
  std::size_t require_index(std::string_view label) const;

  bool leq(std::size_t i, std::size_t j) const { return leq_(i, j); }
  bool covers(std::size_t i, std::size_t j) const { return cover_(i, j); }
  const Relation& order() const { return leq_; }
  const Relation& cover_relation() const { return cover_; }

  ElementSet up_set(ElementSet s) const;
  ElementSet down_set(ElementSet s) const;
  ElementSet carrier() const { return ElementSet::all(size()); }

  // Same carrier and order; labels are compared too.
  friend bool operator==(const Poset& a, const Poset& b) {
    return a.labels_ == b.labels_ && a.leq_ == b.leq_;
  }

 private:
  Poset(std::vector<std::string> labels, Relation leq);

  std::vector<std::string> labels_;
  Relation leq_;
  Relation cover_;
};

enum class Direction { up, down };

ElementSet up_down_set(const Poset& poset, ElementSet s, Direction direction);

enum class Shape { chain, antichain };

// Chain or antichain on n elements labelled e0..e(n-1). Throws ZeroSize.
Poset generate(Shape shape, std::size_t n);

inline constexpr std::size_t kMaxLabelledPosetSize = 5;

// Every partial order on {0..n-1}, ascending in the Relation ordering, as
// posets labelled q0..q(n-1). Counts are 1, 1, 3, 19, 219, 4231 for n = 0..5.
// Built once per process. Throws BoundExceeded for n > kMaxLabelledPosetSize.
const std::vector<Poset>& all_labelled_posets(std::size_t n);

}  // namespace posetpart
