#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "posetpart/poset.hpp"
#include "posetpart/set_partition.hpp"

namespace posetpart {

enum class PartitionKind { monotone, regular, open };
enum class Route { blocks, quasiorders, fibres };

inline constexpr std::array<PartitionKind, 3> kAllKinds = {
    PartitionKind::monotone, PartitionKind::regular, PartitionKind::open};
inline constexpr std::array<Route, 3> kAllRoutes = {Route::blocks, Route::quasiorders,
                                                    Route::fibres};

std::string_view to_string(PartitionKind kind);
std::string_view to_string(Route route);

inline constexpr std::size_t kDefaultSetPartitionBound = 10;
inline constexpr std::size_t kDefaultMonotoneBound = 6;
inline constexpr std::size_t kDefaultRegularOpenBound = 8;
// The fibres route walks k^n assignments for every labelled poset on k points.
inline constexpr std::size_t kMaxFibreRouteSize = 5;

struct EnumerationReport {
  Poset poset;
  PartitionKind kind;
  Route route;
  // Distinct, ascending in the OrderedPartition ordering.
  std::vector<OrderedPartition> items;

  std::size_t count() const { return items.size(); }
};

// All set partitions of {0..n-1} in restricted growth order.
void for_each_set_partition(std::size_t n, const std::function<void(const SetPartition&)>& visit);

// Bell(|P|) partitions of the carrier. Throws BoundExceeded.
std::vector<SetPartition> enumerate_set_partitions(const Poset& poset,
                                                   std::size_t bound = kDefaultSetPartitionBound);

// Partitions of the given kind through the blocks or quasiorders route; the
// fibres route is forwarded with codomain bound |P|. `bound` overrides the
// default size guard of the blocks route. Throws BoundExceeded.
EnumerationReport enumerate_partitions(const Poset& poset, PartitionKind kind, Route route,
                                       std::optional<std::size_t> bound = std::nullopt);

// Fibre partitions of every surjection onto a labelled poset with at most
// `codomain_bound` points that is order-preserving, fibre-coherent or open
// according to `kind`. Throws BoundExceeded.
EnumerationReport enumerate_partitions_via_fibres(const Poset& poset, PartitionKind kind,
                                                  std::size_t codomain_bound);

// Count through the blocks route.
std::size_t count(const Poset& poset, PartitionKind kind);

struct RouteCounts {
  std::size_t blocks = 0;
  std::size_t quasiorders = 0;
  std::size_t fibres = 0;
};

struct Discrepancy {
  PartitionKind kind;
  OrderedPartition witness;
  Route found_by;
  Route missed_by;
};

struct CrossCheckReport {
  Poset poset;
  std::array<RouteCounts, 3> counts;  // indexed like kAllKinds
  bool agreement = true;
  std::optional<Discrepancy> first_discrepancy;

  const RouteCounts& counts_for(PartitionKind kind) const {
    return counts[static_cast<std::size_t>(kind)];
  }
};

// Runs every route for every kind and compares the resulting sets.
CrossCheckReport cross_check(const Poset& poset, std::size_t codomain_bound);

}  // namespace posetpart
