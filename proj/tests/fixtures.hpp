#pragma once

#include <string>
#include <vector>

#include "posetpart/partition.hpp"
#include "posetpart/poset.hpp"
#include "posetpart/poset_map.hpp"

namespace fixture {

inline posetpart::Poset chain(std::vector<std::string> labels) {
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t i = 0; i + 1 < labels.size(); ++i) covers.emplace_back(i, i + 1);
  return posetpart::Poset::from_cover_indices(std::move(labels), covers);
}

inline posetpart::Poset antichain(std::vector<std::string> labels) {
  return posetpart::Poset::from_cover_indices(std::move(labels), {});
}

inline posetpart::Poset C1() { return chain({"a"}); }
inline posetpart::Poset C2() { return chain({"a", "b"}); }
inline posetpart::Poset C3() { return chain({"a", "b", "c"}); }
inline posetpart::Poset A2() { return antichain({"a", "b"}); }
inline posetpart::Poset A3() { return antichain({"a", "b", "c"}); }

// a < c and b < c.
inline posetpart::Poset V() {
  return posetpart::Poset::from_covers({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}});
}

inline posetpart::OrderedPartition ordered(const posetpart::Poset& p,
                                           const std::vector<std::vector<std::string>>& blocks,
                                           const std::vector<std::pair<std::size_t, std::size_t>>& below) {
  posetpart::SetPartition support = posetpart::make_set_partition(p, blocks);
  posetpart::Relation order = posetpart::Relation::identity(support.block_count());
  for (auto [b, c] : below) order.set(b, c);
  return posetpart::OrderedPartition(support, order);
}

// Block index of the block containing `label`.
inline std::size_t block(const posetpart::Poset& p, const posetpart::SetPartition& s,
                         const std::string& label) {
  return s.block_of(p.require_index(label));
}

}  // namespace fixture
