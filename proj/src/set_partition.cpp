#include "posetpart/set_partition.hpp"

#include <algorithm>
#include <map>

#include "posetpart/error.hpp"

namespace posetpart {

SetPartition SetPartition::from_blocks(std::size_t n, std::vector<ElementSet> blocks) {
  if (n > kMaxElements) throw Error(ErrorCode::too_large, "carrier too large");
  const ElementSet carrier = ElementSet::all(n);
  ElementSet covered;
  for (ElementSet block : blocks) {
    if (block.empty()) throw Error(ErrorCode::empty_block, "a block has no elements");
    if (!block.is_subset_of(carrier)) {
      throw Error(ErrorCode::size_mismatch, "a block names an element outside the carrier");
    }
    if (block.intersects(covered)) {
      throw Error(ErrorCode::overlapping_blocks,
                  "element " + std::to_string((block & covered).min()) + " lies in two blocks");
    }
    covered |= block;
  }
  if (covered != carrier) {
    throw Error(ErrorCode::incomplete_cover,
                "element " + std::to_string((carrier - covered).min()) + " lies in no block");
  }
  std::sort(blocks.begin(), blocks.end(),
            [](ElementSet a, ElementSet b) { return a.min() < b.min(); });
  SetPartition p;
  p.block_of_.assign(n, 0);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (std::size_t e : blocks[b]) p.block_of_[e] = b;
  }
  p.blocks_ = std::move(blocks);
  return p;
}

SetPartition SetPartition::from_tags(std::span<const std::size_t> tags) {
  std::map<std::size_t, ElementSet> by_tag;
  for (std::size_t e = 0; e < tags.size(); ++e) by_tag[tags[e]].insert(e);
  std::vector<ElementSet> blocks;
  blocks.reserve(by_tag.size());
  for (const auto& [tag, block] : by_tag) blocks.push_back(block);
  return from_blocks(tags.size(), std::move(blocks));
}

SetPartition SetPartition::discrete(std::size_t n) {
  std::vector<ElementSet> blocks;
  for (std::size_t i = 0; i < n; ++i) blocks.push_back(ElementSet::singleton(i));
  return from_blocks(n, std::move(blocks));
}

SetPartition SetPartition::single_block(std::size_t n) {
  return from_blocks(n, {ElementSet::all(n)});
}

Relation SetPartition::same_block_relation() const {
  Relation r(element_count());
  for (std::size_t i = 0; i < element_count(); ++i) {
    for (std::size_t j : blocks_[block_of_[i]]) r.set(i, j);
  }
  return r;
}

OrderedPartition::OrderedPartition(SetPartition support, Relation block_order)
    : support_(std::move(support)), block_order_(std::move(block_order)) {
  if (block_order_.size() != support_.block_count()) {
    throw Error(ErrorCode::size_mismatch, "block order does not match the block count");
  }
  if (!is_partial_order(block_order_)) {
    throw Error(ErrorCode::not_a_partial_order, "block order is not a partial order");
  }
}

}  // namespace posetpart
