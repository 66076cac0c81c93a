#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "posetpart/poset.hpp"
#include "posetpart/quasiorder.hpp"
#include "posetpart/relation.hpp"
#include "posetpart/set_partition.hpp"

namespace posetpart {

// Which of the three partition notions an ordered partition satisfies.
// Always open => regular => monotone.
struct PartitionClass {
  bool monotone = false;
  bool regular = false;
  bool open = false;

  friend bool operator==(const PartitionClass&, const PartitionClass&) = default;
};

// Blocks given by label. Throws UnknownLabel, EmptyBlock, OverlappingBlocks,
// IncompleteCover.
SetPartition make_set_partition(const Poset& poset,
                                const std::vector<std::vector<std::string>>& blocks);

// x <~ y iff x reaches y by alternating same-block moves and order steps,
// computed as the transitive closure of (same block) | (order).
Quasiorder blockwise_quasiorder(const Poset& poset, const SetPartition& partition);

// Two elements share a block iff each is blockwise under the other.
bool is_blockwise_antisymmetric(const Poset& poset, const SetPartition& partition);

bool is_monotone(const Poset& poset, const OrderedPartition& op);
bool is_regular(const Poset& poset, const OrderedPartition& op);
bool is_open(const Poset& poset, const OrderedPartition& op);

// Every block's upper set is a union of blocks.
bool upper_sets_are_block_unions(const Poset& poset, const SetPartition& partition);

// The only block order making `partition` regular, if any.
std::optional<Relation> regular_order(const Poset& poset, const SetPartition& partition);

// The only block order making `partition` open, if any. Throws
// InternalInvariantViolation should the induced relation fail to be a
// partial order.
std::optional<Relation> open_order(const Poset& poset, const SetPartition& partition);

// Closure of {(block(p), block(q)) | p <= q}: the least relation any monotone
// block order must contain.
Relation forced_block_relation(const Poset& poset, const SetPartition& partition);

// Visits every block order making `partition` monotone, in ascending Relation
// order. Nothing is visited when the forced relation has a cycle.
void for_each_monotone_order(const Poset& poset, const SetPartition& partition,
                             const std::function<void(const Relation&)>& visit);
std::size_t count_monotone_orders(const Poset& poset, const SetPartition& partition);

// Evaluates the three predicates independently. Throws
// InternalInvariantViolation if they break the implication chain.
PartitionClass classify(const Poset& poset, const OrderedPartition& op);

}  // namespace posetpart
