#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "posetpart/element_set.hpp"
#include "posetpart/relation.hpp"

namespace posetpart {

// A partition of the carrier {0..n-1} into nonempty disjoint blocks. Blocks
// are kept in canonical order, sorted by smallest member, so the block index
// of each element forms a restricted growth string.
class SetPartition {
 public:
  SetPartition() = default;

  // Throws EmptyBlock, OverlappingBlocks, IncompleteCover.
  static SetPartition from_blocks(std::size_t n, std::vector<ElementSet> blocks);
  // Elements with equal tags share a block; tags are arbitrary.
  static SetPartition from_tags(std::span<const std::size_t> tags);
  static SetPartition discrete(std::size_t n);
  static SetPartition single_block(std::size_t n);

  std::size_t element_count() const { return block_of_.size(); }
  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<ElementSet>& blocks() const { return blocks_; }
  ElementSet block(std::size_t b) const { return blocks_[b]; }
  std::size_t block_of(std::size_t element) const { return block_of_[element]; }
  const std::vector<std::size_t>& block_indices() const { return block_of_; }
  bool same_block(std::size_t i, std::size_t j) const { return block_of_[i] == block_of_[j]; }

  // (i, j) present iff i and j share a block.
  Relation same_block_relation() const;

  friend bool operator==(const SetPartition& a, const SetPartition& b) {
    return a.block_of_ == b.block_of_;
  }
  friend auto operator<=>(const SetPartition& a, const SetPartition& b) {
    return a.block_of_ <=> b.block_of_;
  }

 private:
  std::vector<ElementSet> blocks_;
  std::vector<std::size_t> block_of_;
};

// A set partition together with a partial order on its blocks, indexed by
// canonical block index.
class OrderedPartition {
 public:
  // Throws SizeMismatch, NotAPartialOrder.
  OrderedPartition(SetPartition support, Relation block_order);

  const SetPartition& support() const { return support_; }
  const Relation& block_order() const { return block_order_; }
  bool below(std::size_t b, std::size_t c) const { return block_order_(b, c); }

  friend bool operator==(const OrderedPartition&, const OrderedPartition&) = default;
  friend std::strong_ordering operator<=>(const OrderedPartition& a, const OrderedPartition& b) {
    if (auto c = a.support_ <=> b.support_; c != 0) return c;
    return a.block_order_ <=> b.block_order_;
  }

 private:
  SetPartition support_;
  Relation block_order_;
};

}  // namespace posetpart
