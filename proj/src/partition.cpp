#include "posetpart/partition.hpp"

#include "posetpart/error.hpp"

namespace posetpart {

namespace {

void require_same_carrier(const Poset& poset, const SetPartition& partition) {
  if (poset.size() != partition.element_count()) {
    throw Error(ErrorCode::size_mismatch, "partition carrier does not match the poset");
  }
}

// Block relation B ~> C iff some x in B and y in C are related by `r`.
Relation lift_to_blocks(const Relation& r, const SetPartition& partition) {
  Relation out(partition.block_count());
  for (auto [x, y] : r.pairs()) out.set(partition.block_of(x), partition.block_of(y));
  return out;
}

}  // namespace

SetPartition make_set_partition(const Poset& poset,
                                const std::vector<std::vector<std::string>>& blocks) {
  std::vector<ElementSet> sets;
  sets.reserve(blocks.size());
  for (const auto& labels : blocks) {
    ElementSet block;
    for (const auto& label : labels) {
      const std::size_t i = poset.require_index(label);
      if (block.contains(i)) {
        throw Error(ErrorCode::overlapping_blocks, "'" + label + "' listed twice in one block");
      }
      block.insert(i);
    }
    sets.push_back(block);
  }
  return SetPartition::from_blocks(poset.size(), std::move(sets));
}

Quasiorder blockwise_quasiorder(const Poset& poset, const SetPartition& partition) {
  require_same_carrier(poset, partition);
  return Quasiorder(transitive_closure(partition.same_block_relation() | poset.order()));
}

bool is_blockwise_antisymmetric(const Poset& poset, const SetPartition& partition) {
  const Relation q = blockwise_quasiorder(poset, partition).relation();
  const Relation mutual = q - (q - q.transposed());
  return mutual == partition.same_block_relation();
}

bool is_monotone(const Poset& poset, const OrderedPartition& op) {
  require_same_carrier(poset, op.support());
  const auto& support = op.support();
  for (auto [p1, p2] : poset.order().pairs()) {
    if (!op.below(support.block_of(p1), support.block_of(p2))) return false;
  }
  return true;
}

bool is_regular(const Poset& poset, const OrderedPartition& op) {
  const Quasiorder q = blockwise_quasiorder(poset, op.support());
  const auto& support = op.support();
  for (std::size_t p1 = 0; p1 < poset.size(); ++p1) {
    for (std::size_t p2 = 0; p2 < poset.size(); ++p2) {
      if (q(p1, p2) != op.below(support.block_of(p1), support.block_of(p2))) return false;
    }
  }
  return true;
}

bool upper_sets_are_block_unions(const Poset& poset, const SetPartition& partition) {
  require_same_carrier(poset, partition);
  for (ElementSet block : partition.blocks()) {
    const ElementSet up = poset.up_set(block);
    for (ElementSet other : partition.blocks()) {
      if (other.intersects(up) && !other.is_subset_of(up)) return false;
    }
  }
  return true;
}

bool is_open(const Poset& poset, const OrderedPartition& op) {
  if (!upper_sets_are_block_unions(poset, op.support())) return false;
  return lift_to_blocks(poset.order(), op.support()) == op.block_order();
}

std::optional<Relation> regular_order(const Poset& poset, const SetPartition& partition) {
  if (!is_blockwise_antisymmetric(poset, partition)) return std::nullopt;
  Relation order = lift_to_blocks(blockwise_quasiorder(poset, partition).relation(), partition);
  if (!is_partial_order(order)) {
    throw Error(ErrorCode::internal_invariant_violation,
                "regular block order is not a partial order");
  }
  return order;
}

std::optional<Relation> open_order(const Poset& poset, const SetPartition& partition) {
  if (!upper_sets_are_block_unions(poset, partition)) return std::nullopt;
  Relation order = lift_to_blocks(poset.order(), partition);
  if (!is_partial_order(order)) {
    throw Error(ErrorCode::internal_invariant_violation, "open block order is not a partial order");
  }
  return order;
}

Relation forced_block_relation(const Poset& poset, const SetPartition& partition) {
  require_same_carrier(poset, partition);
  return reflexive_transitive_closure(lift_to_blocks(poset.order(), partition));
}

void for_each_monotone_order(const Poset& poset, const SetPartition& partition,
                             const std::function<void(const Relation&)>& visit) {
  const Relation forced = forced_block_relation(poset, partition);
  if (!is_antisymmetric(forced)) return;
  for_each_closed_extension(forced, ExtensionKind::partial_order, visit);
}

std::size_t count_monotone_orders(const Poset& poset, const SetPartition& partition) {
  std::size_t count = 0;
  for_each_monotone_order(poset, partition, [&count](const Relation&) { ++count; });
  return count;
}

PartitionClass classify(const Poset& poset, const OrderedPartition& op) {
  PartitionClass result{is_monotone(poset, op), is_regular(poset, op), is_open(poset, op)};
  if ((result.open && !result.regular) || (result.regular && !result.monotone)) {
    throw Error(ErrorCode::internal_invariant_violation,
                "partition classification breaks open => regular => monotone");
  }
  return result;
}

}  // namespace posetpart
