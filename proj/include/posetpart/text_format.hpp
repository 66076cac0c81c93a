#pragma once

// Line-oriented text formats. '#' starts a comment; blank lines are ignored.
//
//   poset <name>                    partition of <poset>
//   elements <label>...             block <B> = <label>...
//   cover <x> <y>                   order <B> <= <C>
//
//   map <name> : <P> -> <Q>
//   send <x> <y>
//
// Parse failures throw Error with the offending line number attached.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "posetpart/poset.hpp"
#include "posetpart/poset_map.hpp"
#include "posetpart/set_partition.hpp"

namespace posetpart {

struct PosetDocument {
  std::string name;
  Poset poset;
};

struct PartitionDocument {
  std::string poset_name;
  SetPartition support;
  // Declared block names, indexed by canonical block index.
  std::vector<std::string> block_names;
  // Reflexive-transitive closure of the declared order lines, if any.
  std::optional<Relation> order;
};

struct MapDocument {
  std::string name;
  std::string dom_name;
  std::string cod_name;
  PosetMap map;
};

PosetDocument parse_poset(std::string_view text);
// The target poset, and a map's domain and codomain, are looked up by name
// among `posets`.
PartitionDocument parse_partition(std::string_view text, std::span<const PosetDocument> posets);
MapDocument parse_map(std::string_view text, std::span<const PosetDocument> posets);

// Inverse of parse_poset: labels in carrier order, one line per cover pair.
std::string serialize_poset(const Poset& poset, std::string_view name);
std::string serialize_map(const PosetMap& f, std::string_view name, std::string_view dom_name,
                          std::string_view cod_name);

// "{a,c}{b}": blocks in canonical order.
std::string format_support(const Poset& poset, const SetPartition& support);
// "{a,c}{b} | B2<=B1": strict block-order pairs by canonical 1-based block
// number, row-major; "-" when the block order is discrete.
std::string format_ordered_partition(const Poset& poset, const OrderedPartition& op);

// Hasse diagram: one edge per cover pair, drawn bottom to top.
std::string to_dot(const Poset& poset, std::string_view name);

}  // namespace posetpart
